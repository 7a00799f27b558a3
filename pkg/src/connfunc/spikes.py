"""Rank-n spikes ``S(I)``, spiky connectivity functions and their matroidality.

The ground set ``E_n`` has ``2n`` elements; ``x_i`` is bit ``2(i-1)`` and
``y_i`` is bit ``2(i-1)+1`` of a subset mask.  Transversals are also
handled as ``n``-bit words (see :mod:`connfunc.hypercube`).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

import numpy as np

from .core import CapacityError, ConnFuncError, DomainError, GroundSet, SetFunctionTable, popcount
from .hypercube import complement_word, even_parity, hn_adjacent, induced_components
from .matroids import CircuitFamily, RankTable

_EVEN_BITS = 0x5555555555555555


def spike_ground(n: int) -> GroundSet:
    if n < 1:
        raise ConnFuncError("a spike needs at least one leg")
    return GroundSet(2 * n, tuple(f"{c}{i}" for i in range(1, n + 1) for c in "xy"))


def leg(i: int) -> int:
    """Mask of leg ``L_i = {x_i, y_i}`` (1-based)."""
    return 0b11 << 2 * (i - 1)


def word_to_mask(w: int, n: int) -> int:
    x = 0
    for i in range(n):
        x |= 1 << (2 * i + (w >> i & 1))
    return x


def mask_to_word(x: int, n: int) -> int | None:
    """The transversal word of ``x``, or ``None`` if ``x`` is not a transversal."""
    lo = x & _EVEN_BITS
    hi = x >> 1 & _EVEN_BITS
    if lo & hi or (lo | hi) != _EVEN_BITS & ((1 << 2 * n) - 1):
        return None
    w = 0
    for i in range(n):
        w |= (hi >> 2 * i & 1) << i
    return w


def _leg_counts(x):
    lo = x & _EVEN_BITS
    hi = x >> 1 & _EVEN_BITS
    return lo & hi, lo | hi


@dataclass(frozen=True)
class IndependentSet:
    """An independent set of the hypercube ``H_n``; members are transversal words."""

    n: int
    members: frozenset[int] = frozenset()

    def __post_init__(self):
        if self.n < 1:
            raise ConnFuncError("n must be positive")
        ms = frozenset(int(w) for w in self.members)
        for w in ms:
            if w < 0 or w >> self.n:
                raise DomainError(f"word {w:#b} is not a transversal of {self.n} legs")
        for a, b in combinations(sorted(ms), 2):
            if hn_adjacent(a, b):
                raise DomainError(f"transversals {a:#b} and {b:#b} differ in exactly one element")
        object.__setattr__(self, "members", ms)

    def __contains__(self, w: int) -> bool:
        return w in self.members

    def __len__(self) -> int:
        return len(self.members)


def spike_rank(ind: IndependentSet, x: int) -> int:
    n = ind.n
    both, met = _leg_counts(x)
    legs_met = popcount(met)
    if both:
        return legs_met + 1 if legs_met < n else n
    if legs_met < n:
        return legs_met
    return n - 1 if mask_to_word(x, n) in ind.members else n


def spike_mu(ind: IndependentSet, x: int) -> int:
    full = (1 << 2 * ind.n) - 1
    return spike_rank(ind, x) + spike_rank(ind, full ^ x) - ind.n


def _pop(a):
    return np.bitwise_count(a.astype(np.uint64)).astype(np.int64)


def spike_rank_table(ind: IndependentSet) -> RankTable:
    n = ind.n
    ground = spike_ground(n)
    if ground.size > 20:
        raise CapacityError("full spike tables are limited to n <= 10")
    idx = np.arange(1 << 2 * n, dtype=np.int64)
    lo = idx & _EVEN_BITS
    hi = idx >> 1 & _EVEN_BITS
    both = _pop(lo & hi)
    met = _pop(lo | hi)
    rank = np.where(both > 0, np.where(met < n, met + 1, n), np.where(met < n, met, n))
    for w in ind.members:
        rank[word_to_mask(w, n)] = n - 1
    return RankTable(ground, rank)


def spike_mu_table(ind: IndependentSet) -> SetFunctionTable:
    return spike_rank_table(ind).connectivity()


def spike_circuits(ind: IndependentSet) -> CircuitFamily:
    n = ind.n
    c1 = {leg(i) | leg(j) for i, j in combinations(range(1, n + 1), 2)}
    c2 = {word_to_mask(w, n) for w in ind.members}
    small = c1 | c2
    c3 = set()
    for comb in combinations(range(2 * n), n + 1):
        x = sum(1 << b for b in comb)
        if not any(c & x == c for c in small):
            c3.add(x)
    family = small | c3
    if n < 3:
        # leg pairs are minimal only when 4 <= n + 1, i.e. from n = 3 on
        family = {c for c in family if not any(d != c and d & c == d for d in family)}
    return CircuitFamily(frozenset(family))


def lambda_n(x: int, n: int) -> int:
    """Connectivity shared by every rank-``n`` spike on a non-transversal ``x``."""
    if mask_to_word(x, n) is not None:
        raise DomainError("lambda_n is not defined on transversals")
    return spike_mu(IndependentSet(n), x)


# --------------------------------------------------------------------------
# spiky functions
# --------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SpikyTable:
    """Values on transversals; every other subset takes the value ``lambda_n``."""

    n: int
    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.int64)
        if vals.shape != (1 << self.n,):
            raise ConnFuncError(f"expected {1 << self.n} transversal values")
        vals = vals.copy()
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    def __eq__(self, other):
        if not isinstance(other, SpikyTable):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.values, other.values)

    __hash__ = None

    def __getitem__(self, w: int) -> int:
        return int(self.values[w])

    def value(self, x: int) -> int:
        w = mask_to_word(x, self.n)
        return lambda_n(x, self.n) if w is None else int(self.values[w])

    def to_table(self) -> SetFunctionTable:
        base = spike_mu_table(IndependentSet(self.n)).values.copy()
        for w in range(1 << self.n):
            base[word_to_mask(w, self.n)] = self.values[w]
        return SetFunctionTable(spike_ground(self.n), base)

    def to_json(self) -> dict:
        n = self.n
        return {
            "n": n,
            "transversals": [
                {"word": format(w, f"#0{n + 2}b"), "value": int(v)}
                for w, v in enumerate(self.values) if v != n
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> SpikyTable:
        try:
            n = int(data["n"])
            entries = data.get("transversals", [])
            vals = np.full(1 << n, n, dtype=np.int64)
            for item in entries:
                w = item["word"]
                w = int(w, 0) if isinstance(w, str) else int(w)
                if w < 0 or w >> n:
                    raise ConnFuncError(f"word {item['word']!r} out of range")
                vals[w] = int(item["value"])
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, ConnFuncError):
                raise
            raise ConnFuncError(f"bad spiky table JSON: {exc}") from None
        return cls(n, vals)

    @classmethod
    def from_set_function(cls, t: SetFunctionTable) -> SpikyTable:
        n = t.n // 2
        if t.n != 2 * n:
            raise DomainError("spiky functions live on an even ground set")
        return cls(n, np.array([t(word_to_mask(w, n)) for w in range(1 << n)]))


def is_spiky(t: SpikyTable | SetFunctionTable) -> bool:
    if isinstance(t, SetFunctionTable):
        if t.n % 2:
            return False
        n = t.n // 2
        base = spike_mu_table(IndependentSet(n)).values
        trans = np.array([word_to_mask(w, n) for w in range(1 << n)])
        keep = np.ones(len(base), dtype=bool)
        keep[trans] = False
        if not np.array_equal(base[keep], t.values[keep]):
            return False
        t = SpikyTable.from_set_function(t)
    n, vals = t.n, t.values
    words = np.arange(1 << n)
    if not np.array_equal(vals, vals[words ^ ((1 << n) - 1)]):
        return False
    if np.any((vals < n - 2) | (vals > n)):
        return False
    for i in range(n):
        if np.any(vals + vals[words ^ (1 << i)] < 2 * n - 2):
            return False
    return True


def lambda_W(W: Iterable[int], n: int) -> SpikyTable:
    ws = set(W)
    for w in ws:
        if w < 0 or w >> n:
            raise DomainError(f"word {w:#b} out of range")
        if complement_word(w, n) not in ws:
            raise DomainError("W must be closed under complementation")
    vals = np.full(1 << n, n, dtype=np.int64)
    if ws:
        vals[np.fromiter(ws, dtype=np.int64)] = n - 1
    return SpikyTable(n, vals)


@dataclass(frozen=True)
class MatroidalVerdict:
    n: int
    matroidal: bool
    independent: IndependentSet | None = None
    witness: int | None = None

    def to_json(self) -> dict:
        fmt = f"#0{self.n + 2}b"
        out: dict = {"n": self.n, "matroidal": self.matroidal}
        if self.independent is not None:
            out["independent"] = [format(w, fmt) for w in sorted(self.independent.members)]
        if self.witness is not None:
            out["witness"] = format(self.witness, fmt)
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> MatroidalVerdict:
        try:
            n = int(data["n"])
            ind = data.get("independent")
            if ind is not None:
                ind = IndependentSet(n, frozenset(int(w, 0) for w in ind))
            wit = data.get("witness")
            return cls(n, bool(data["matroidal"]), ind, None if wit is None else int(wit, 0))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, ConnFuncError):
                raise
            raise ConnFuncError(f"bad matroidality verdict JSON: {exc}") from None


def _reproduces(ind: IndependentSet, t: SpikyTable) -> bool:
    n = t.n
    for w in range(1 << n):
        hit = (w in ind.members) + (complement_word(w, n) in ind.members)
        if t.values[w] != n - hit:
            return False
    return True


def decide_matroidal(t: SpikyTable) -> MatroidalVerdict:
    """Matroidality of a spiky function, with an independent set or a bad transversal."""
    if not is_spiky(t):
        raise DomainError("input is not spiky")
    n, vals = t.n, t.values
    low = {w for w in range(1 << n) if vals[w] == n - 2}
    mid = [w for w in range(1 << n) if vals[w] == n - 1]
    if n % 2:
        chosen = low | {w for w in mid if even_parity(w, n)}
    else:
        comps = induced_components(mid, n)
        where = {w: k for k, comp in enumerate(comps) for w in comp}
        picked: set[int] = set()
        for k, comp in enumerate(comps):
            w0 = min(comp)
            partner = where[complement_word(w0, n)]
            if partner == k:
                bad = min(w for w in comp if complement_word(w, n) in comp)
                return MatroidalVerdict(n, False, witness=bad)
            if partner not in picked:
                picked.add(k)
        union = {w for k in picked for w in comps[k]}
        chosen = set(low)
        for w in mid:
            if even_parity(w, n):
                if w in union:
                    chosen.add(w)
            elif complement_word(w, n) in union:
                chosen.add(w)
    ind = IndependentSet(n, frozenset(chosen))
    if not _reproduces(ind, t):
        raise AssertionError("constructed spike does not reproduce the table")
    return MatroidalVerdict(n, True, independent=ind)


def brute_force_matroidal(t: SpikyTable, max_n: int = 4) -> MatroidalVerdict:
    """Backtracking search for an independent set reproducing ``t`` on transversals."""
    if not is_spiky(t):
        raise DomainError("input is not spiky")
    n = t.n
    if n > max_n:
        raise CapacityError(f"brute-force matroidality is limited to n <= {max_n}")
    full = (1 << n) - 1
    pairs = [w for w in range(1 << n) if w < full ^ w]
    options = []
    for w in pairs:
        v = int(t.values[w])
        if v == n:
            options.append([()])
        elif v == n - 2:
            options.append([(w, full ^ w)])
        else:
            options.append([(w,), (full ^ w,)])

    chosen: list[int] = []

    def ok(new):
        return not any(hn_adjacent(a, b) for a in new for b in chosen)

    def rec(k):
        if k == len(pairs):
            return True
        for opt in options[k]:
            if ok(opt):
                chosen.extend(opt)
                if rec(k + 1):
                    return True
                del chosen[len(chosen) - len(opt):]
        return False

    if rec(0):
        return MatroidalVerdict(n, True, independent=IndependentSet(n, frozenset(chosen)))
    return MatroidalVerdict(n, False)
