from __future__ import annotations


class DisjointSets:
    """Union-find over ``0..n-1`` with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, a: int) -> int:
        p = self.parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True

    def classes(self) -> list[list[int]]:
        """Classes ordered by their smallest member, members ascending."""
        groups: dict[int, list[int]] = {}
        for a in range(len(self.parent)):
            groups.setdefault(self.find(a), []).append(a)
        return sorted(groups.values(), key=lambda c: c[0])
