"""Matroid rank tables: duals, connectivity, axiom checks, rank from circuits."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Mapping

import numpy as np

from . import _kernels
from .core import (
    ConnFuncError,
    GroundSet,
    SetFunctionTable,
    ValidationReport,
    Violation,
    check_submodular,
    parse_table_json,
    popcount,
)


@dataclass(frozen=True, eq=False)
class RankTable:
    ground: GroundSet
    rank: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "rank", SetFunctionTable(self.ground, self.rank).values)

    @property
    def n(self) -> int:
        return self.ground.size

    @property
    def full_rank(self) -> int:
        return int(self.rank[self.ground.full])

    def __call__(self, x: int) -> int:
        return int(self.rank[self.ground.check(x)])

    def __eq__(self, other):
        if not isinstance(other, RankTable):
            return NotImplemented
        return self.ground == other.ground and np.array_equal(self.rank, other.rank)

    __hash__ = None

    def dual(self) -> RankTable:
        idx = np.arange(1 << self.n, dtype=np.int64)
        pop = np.bitwise_count(idx.astype(np.uint64)).astype(np.int64)
        return RankTable(self.ground, self.rank[self.ground.full ^ idx] + pop - self.full_rank)

    def connectivity(self) -> SetFunctionTable:
        idx = np.arange(1 << self.n, dtype=np.int64)
        return SetFunctionTable(self.ground, self.rank + self.rank[self.ground.full ^ idx] - self.full_rank)

    def to_json(self) -> dict:
        return SetFunctionTable(self.ground, self.rank).to_json(key="rank")

    @classmethod
    def from_json(cls, data: Mapping) -> RankTable:
        ground, mapping, default = parse_table_json(data, key="rank")
        return cls(ground, SetFunctionTable.from_mapping(ground, mapping, default).values)


def dual_rank(r: RankTable, x: int) -> int:
    return r(r.ground.complement(x)) + popcount(x) - r.full_rank


def mu(r: RankTable, x: int) -> int:
    """Matroid connectivity ``r(X) + r(E - X) - r(E)``."""
    return r(x) + r(r.ground.complement(x)) - r.full_rank


def validate_rank_axioms(r: RankTable) -> ValidationReport:
    vals = r.rank
    out = []
    if vals[0] != 0:
        out.append(Violation("normalised", (0,), f"r(empty)={int(vals[0])}"))
    idx = np.arange(len(vals), dtype=np.int64)
    bad_x, bad_e = None, None
    count = 0
    for e in range(r.n):
        be = 1 << e
        xs = idx[(idx & be) == 0]
        step = vals[xs | be] - vals[xs]
        bad = (step < 0) | (step > 1)
        k = int(np.count_nonzero(bad))
        if k and bad_x is None:
            bad_x, bad_e = int(xs[np.argmax(bad)]), e
        count += k
    if count:
        out.append(Violation("unit-increase", (bad_x, bad_x | 1 << bad_e),
                             f"r(X+e)-r(X) not in {{0,1}} for e={bad_e}", count))
    sub = check_submodular(vals, r.n)
    if sub is not None:
        out.append(sub)
    return ValidationReport(tuple(out))


@dataclass(frozen=True)
class CircuitFamily:
    circuits: frozenset[int]

    def __post_init__(self):
        cs = frozenset(int(c) for c in self.circuits)
        if 0 in cs:
            raise ConnFuncError("the empty set is not a circuit")
        for a in cs:
            for b in cs:
                if a != b and a & b == a:
                    raise ConnFuncError(f"circuit {a:#x} is contained in circuit {b:#x}")
        object.__setattr__(self, "circuits", cs)

    def __len__(self) -> int:
        return len(self.circuits)

    def __iter__(self):
        return iter(sorted(self.circuits))


def rank_from_circuits(c: CircuitFamily, ground: GroundSet) -> RankTable:
    """Rank of ``X`` = size of a largest subset of ``X`` containing no circuit."""
    for x in c.circuits:
        ground.check(x)
    arr = np.array(sorted(c.circuits), dtype=np.int64)
    return RankTable(ground, _kernels.rank_from_circuits(arr, ground.size))


def uniform_matroid(rank: int, n: int, ground: GroundSet | None = None) -> RankTable:
    ground = ground or GroundSet(n)
    idx = np.arange(1 << n, dtype=np.int64)
    pop = np.bitwise_count(idx.astype(np.uint64)).astype(np.int64)
    return RankTable(ground, np.minimum(pop, rank))


def free_matroid(n: int, ground: GroundSet | None = None) -> RankTable:
    return uniform_matroid(n, n, ground)


def rank_from_bases(bases: Iterable[int], ground: GroundSet) -> RankTable:
    bases = np.array(sorted(set(bases)), dtype=np.int64)
    idx = np.arange(1 << ground.size, dtype=np.int64)
    rank = np.zeros(len(idx), dtype=np.int64)
    for b in bases:
        rank = np.maximum(rank, np.bitwise_count((idx & b).astype(np.uint64)).astype(np.int64))
    return RankTable(ground, rank)


def _exchange_ok(family: frozenset[int]) -> bool:
    for a in family:
        for b in family:
            diff = a & ~b
            if not diff:
                continue
            # some y in b - a with a - x + y a basis, for every x in a - b
            d = diff
            while d:
                x = d & -d
                d ^= x
                rest = b & ~a
                ok = False
                while rest:
                    y = rest & -rest
                    rest ^= y
                    if (a ^ x | y) in family:
                        ok = True
                        break
                if not ok:
                    return False
    return True


def all_matroids(n: int) -> Iterator[RankTable]:
    """Every matroid on ``{0..n-1}`` (labelled), via basis families. Exhaustive; n <= 5."""
    if n > 5:
        raise ConnFuncError("exhaustive matroid enumeration is limited to n <= 5")
    ground = GroundSet(n)
    for r in range(n + 1):
        rsets = [sum(1 << i for i in c) for c in combinations(range(n), r)]
        for k in range(1, len(rsets) + 1):
            for fam in combinations(rsets, k):
                family = frozenset(fam)
                if _exchange_ok(family):
                    yield rank_from_bases(family, ground)
