"""Edge-labelled multigraphs and their vertex connectivity function.

For a graph ``G`` with edge set ``E`` and ``X`` a subset of ``E``,
``gamma_G(X) = |V(X)| + |V(E - X)| - |V(E)|``, which equals the number of
vertices touching both ``X`` and ``E - X``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Hashable, Iterator, Mapping, Sequence

import numpy as np

from . import _kernels
from .core import ConnFuncError, GroundSet, MAX_TABLE, CapacityError, SetFunctionTable, bits

Vertex = Hashable


@dataclass(frozen=True)
class Edge:
    label: str
    u: Vertex
    v: Vertex

    @property
    def ends(self) -> tuple[Vertex, Vertex]:
        return (self.u, self.v)


@dataclass(frozen=True)
class Multigraph:
    """Loop-free multigraph without isolated vertices.

    Edge ``i`` of ``edges`` is element ``i`` of the ground set, so subset
    masks passed to the methods below are indexed by edge position.
    """

    edges: tuple[Edge, ...]
    vertices: tuple[Vertex, ...] = field(default=())

    def __post_init__(self):
        edges = tuple(e if isinstance(e, Edge) else Edge(str(e[0]), e[1], e[2]) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        labels = [e.label for e in edges]
        if len(set(labels)) != len(labels):
            raise ConnFuncError("edge labels must be distinct")
        used: list[Vertex] = []
        seen = set()
        for e in edges:
            if e.u == e.v:
                raise ConnFuncError(f"edge {e.label!r} is a loop; canonicalise loops first")
            for w in e.ends:
                if w not in seen:
                    seen.add(w)
                    used.append(w)
        if self.vertices:
            if len(set(self.vertices)) != len(self.vertices):
                raise ConnFuncError("vertex names must be distinct")
            extra = set(self.vertices) - seen
            if extra:
                raise ConnFuncError(f"isolated vertices are not allowed: {sorted(map(str, extra))}")
            missing = seen - set(self.vertices)
            if missing:
                raise ConnFuncError(f"edges use undeclared vertices: {sorted(map(str, missing))}")
        else:
            object.__setattr__(self, "vertices", tuple(used))

    # -- construction --------------------------------------------------------

    @classmethod
    def from_ends(cls, ends: Sequence[tuple[Vertex, Vertex]], labels: Sequence[str] | None = None,
                  loops: str = "reject") -> Multigraph:
        """Build from an endpoint list.

        ``loops='pendant'`` replaces a loop at ``v`` by an edge from ``v`` to a
        fresh leaf; the connectivity function does not change.
        """
        if labels is None:
            labels = [f"e{i}" for i in range(len(ends))]
        edges = []
        for lab, (u, v) in zip(labels, ends):
            if u == v:
                if loops != "pendant":
                    raise ConnFuncError(f"edge {lab!r} is a loop")
                v = f"{u}~{lab}"
            edges.append(Edge(str(lab), u, v))
        return cls(tuple(edges))

    # -- basic structure -----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.edges)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(e.label for e in self.edges)

    @cached_property
    def ground(self) -> GroundSet:
        return GroundSet.of(self.labels)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def _star_masks(self) -> dict[Vertex, int]:
        stars = {v: 0 for v in self.vertices}
        for i, e in enumerate(self.edges):
            stars[e.u] |= 1 << i
            stars[e.v] |= 1 << i
        return stars

    @cached_property
    def incidence(self) -> np.ndarray:
        return np.array([self._star_masks[v] for v in self.vertices], dtype=np.int64)

    def star(self, v: Vertex) -> int:
        try:
            return self._star_masks[v]
        except KeyError:
            raise ConnFuncError(f"unknown vertex {v!r}") from None

    def degree(self, v: Vertex) -> int:
        return bin(self.star(v)).count("1")

    def vertex_support(self, x: int) -> frozenset:
        return frozenset(w for w, s in self._star_masks.items() if s & x)

    def boundary(self, x: int) -> frozenset:
        rest = self.full ^ x
        return frozenset(w for w, s in self._star_masks.items() if s & x and s & rest)

    def gamma(self, x: int) -> int:
        rest = self.full ^ x
        return sum(1 for s in self._star_masks.values() if s & x and s & rest)

    def gamma_table(self) -> SetFunctionTable:
        if self.n > MAX_TABLE:
            raise CapacityError(f"full tables are limited to n <= {MAX_TABLE}")
        return SetFunctionTable(self.ground, _kernels.gamma_table(self.incidence, self.n))

    def canonical_key(self) -> tuple:
        """Identifies the graph up to renaming vertices (edge labels kept)."""
        return tuple(sorted(tuple(self.labels[i] for i in bits(s)) for s in self._star_masks.values()))

    def same_up_to_vertex_names(self, other: Multigraph) -> bool:
        return set(self.labels) == set(other.labels) and self.canonical_key() == other.canonical_key()

    def relabel_vertices(self, mapping: Mapping[Vertex, Vertex]) -> Multigraph:
        return Multigraph(tuple(Edge(e.label, mapping[e.u], mapping[e.v]) for e in self.edges))

    def reorder(self, labels: Sequence[str]) -> Multigraph:
        """The same graph with edges listed in the order of ``labels``."""
        by = {e.label: e for e in self.edges}
        if set(by) != set(map(str, labels)):
            raise ConnFuncError("reorder needs exactly the graph's edge labels")
        return Multigraph(tuple(by[str(s)] for s in labels))

    # -- JSON ----------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"label": e.label, "ends": [e.u, e.v]} for e in self.edges],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> Multigraph:
        if not isinstance(data, Mapping) or not isinstance(data.get("edges"), list):
            raise ConnFuncError("graph JSON needs an 'edges' list")
        ends, labels = [], []
        for item in data["edges"]:
            try:
                u, v = item["ends"]
                labels.append(str(item["label"]))
            except (KeyError, TypeError, ValueError):
                raise ConnFuncError(f"bad edge entry {item!r}") from None
            ends.append((u, v))
        g = cls.from_ends(ends, labels, loops="pendant")
        declared = data.get("vertices")
        if declared:
            extra = set(declared) - set(g.vertices)
            if extra:
                raise ConnFuncError(f"isolated vertices are not allowed: {sorted(map(str, extra))}")
        return g


def vertex_support(g: Multigraph, x: int) -> frozenset:
    return g.vertex_support(x)


def boundary(g: Multigraph, x: int) -> frozenset:
    return g.boundary(x)


def gamma(g: Multigraph, x: int) -> int:
    return g.gamma(x)


def star(g: Multigraph, v: Vertex) -> int:
    return g.star(v)


def gamma_raw(ends: Sequence[tuple[Vertex, Vertex]], x: int) -> int:
    """``|V(X)| + |V(E-X)| - |V(E)|`` straight from the definition; loops allowed."""
    inside, outside, allv = set(), set(), set()
    for i, (u, v) in enumerate(ends):
        (inside if x >> i & 1 else outside).update((u, v))
        allv.update((u, v))
    return len(inside) + len(outside) - len(allv)


# --------------------------------------------------------------------------
# small-graph enumeration
# --------------------------------------------------------------------------

def iter_edge_lists(k: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """All loop-free multigraphs with edges ``0..k-1``, each once up to vertex renaming.

    Vertices are numbered in order of first appearance, which makes the
    endpoint list a canonical representative of its vertex-renaming class.
    """
    def rec(i, edges, nv):
        if i == k:
            yield tuple(edges)
            return
        for a in range(nv):
            for b in range(a + 1, nv):
                yield from rec(i + 1, edges + [(a, b)], nv)
            yield from rec(i + 1, edges + [(a, nv)], nv + 1)
        yield from rec(i + 1, edges + [(nv, nv + 1)], nv + 2)

    if k == 0:
        return
    yield from rec(0, [], 0)


def labeled_multigraphs(k: int, labels: Sequence[str] | None = None) -> Iterator[Multigraph]:
    for ends in iter_edge_lists(k):
        yield Multigraph.from_ends(ends, labels)


def _nx(ends):
    import networkx as nx

    g = nx.Graph()
    for u, v in ends:
        if g.has_edge(u, v):
            g[u][v]["m"] += 1
        else:
            g.add_edge(u, v, m=1)
    return g


@lru_cache(maxsize=None)
def unlabeled_edge_lists(k: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Loop-free multigraphs with ``k`` edges and no isolated vertices, one per isomorphism class."""
    import networkx as nx

    if k <= 0:
        return ()
    if k == 1:
        return (((0, 1),),)
    found: dict[str, list] = {}
    out = []
    em = nx.algorithms.isomorphism.numerical_edge_match("m", 1)
    for base in unlabeled_edge_lists(k - 1):
        nv = 1 + max(max(e) for e in base)
        exts = [(a, b) for a, b in combinations(range(nv), 2)]
        exts += [(a, nv) for a in range(nv)] + [(nv, nv + 1)]
        for e in exts:
            ends = tuple(sorted(base + (e,)))
            g = _nx(ends)
            key = nx.weisfeiler_lehman_graph_hash(g, edge_attr="m")
            key += f"/{g.number_of_nodes()}"
            bucket = found.setdefault(key, [])
            if any(nx.is_isomorphic(g, h, edge_match=em) for h in bucket):
                continue
            bucket.append(g)
            out.append(ends)
    return tuple(out)


def unlabeled_multigraphs(k: int, labels: Sequence[str] | None = None) -> Iterator[Multigraph]:
    for ends in unlabeled_edge_lists(k):
        yield Multigraph.from_ends(ends, labels)
