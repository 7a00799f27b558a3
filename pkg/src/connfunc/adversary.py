"""Query-set adversaries for matroidality of spiky connectivity functions.

Given the subsets an algorithm has queried, each adversary exhibits two
spiky functions that agree on every query but differ in whether they are
the connectivity function of a matroid.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Any, Iterable, Mapping, Sequence

from .core import ConnFuncError, DomainError, parse_subset
from .hypercube import buffered_path, complement_word, f, x_count
from .spikes import MatroidalVerdict, SpikyTable, decide_matroidal, lambda_W, mask_to_word, spike_ground


@dataclass(frozen=True)
class AdversaryTranscript:
    kind: str
    m: int
    query_set: tuple[int, ...]
    base_table: SpikyTable
    alternative_table: SpikyTable | None
    flipped: int | None
    inert: tuple[bool, ...]
    agreement_certified: bool
    verdicts: tuple[MatroidalVerdict, MatroidalVerdict | None]

    @property
    def n(self) -> int:
        return 2 * self.m

    @property
    def fooled(self) -> bool:
        base, alt = self.verdicts
        return (self.agreement_certified and alt is not None
                and base.matroidal != alt.matroidal)

    def to_json(self) -> dict:
        ground = spike_ground(self.n)
        fmt = f"#0{self.n + 2}b"
        return {
            "kind": self.kind,
            "m": self.m,
            "queries": [{"set": ground.members(x), "inert": inert}
                        for x, inert in zip(self.query_set, self.inert)],
            "base_table": self.base_table.to_json(),
            "alternative_table": None if self.alternative_table is None else self.alternative_table.to_json(),
            "flipped": None if self.flipped is None else format(self.flipped, fmt),
            "agreement_certified": self.agreement_certified,
            "verdicts": [None if v is None else v.to_json() for v in self.verdicts],
            "fooled": self.fooled,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> AdversaryTranscript:
        try:
            m = int(data["m"])
            ground = spike_ground(2 * m)
            queries = tuple(parse_subset(q["set"], ground) for q in data["queries"])
            inert = tuple(bool(q["inert"]) for q in data["queries"])
            alt = data.get("alternative_table")
            flipped = data.get("flipped")
            v0, v1 = data["verdicts"]
            return cls(
                str(data["kind"]), m, queries,
                SpikyTable.from_json(data["base_table"]),
                None if alt is None else SpikyTable.from_json(alt),
                None if flipped is None else int(flipped, 0),
                inert,
                bool(data["agreement_certified"]),
                (MatroidalVerdict.from_json(v0), None if v1 is None else MatroidalVerdict.from_json(v1)),
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, ConnFuncError):
                raise
            raise ConnFuncError(f"bad adversary transcript JSON: {exc}") from None


def v_partition(m: int) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Transversals of ``E_{2m}`` with fewer than, exactly, or more than ``m`` x-elements."""
    if m < 1:
        raise DomainError("m must be positive")
    n = 2 * m
    lt, eq, gt = [], [], []
    for w in range(1 << n):
        c = x_count(w, n)
        (lt if c < m else eq if c == m else gt).append(w)
    return tuple(lt), tuple(eq), tuple(gt)


def matroidal_threshold(m: int) -> float:
    """Query sets smaller than this always leave a pair of ``V_m`` untouched."""
    return comb(2 * m, m) / 2


def nonmatroidal_threshold(m: int) -> float:
    return f(m) / 2


def parse_queries(data: Any, m: int) -> list[int]:
    """Query sets from JSON: a list (or ``{"queries": [...]}``) of label lists or hex masks."""
    if isinstance(data, Mapping):
        data = data.get("queries")
    if not isinstance(data, list):
        raise ConnFuncError("queries JSON must be a list of subsets")
    ground = spike_ground(2 * m)
    return [parse_subset(q, ground) for q in data]


def _queried_words(queries: Sequence[int], n: int) -> tuple[set[int], tuple[bool, ...]]:
    ground = spike_ground(n)
    words, inert = set(), []
    for x in queries:
        ground.check(x)
        w = mask_to_word(x, n)
        inert.append(w is None)
        if w is not None:
            words.add(w)
    return words, tuple(inert)


def _transcript(kind, m, queries, base, avoid_from, make_alt):
    n = 2 * m
    words, inert = _queried_words(queries, n)
    flipped = None
    for w in sorted(avoid_from):
        if w not in words and complement_word(w, n) not in words:
            flipped = w
            break
    alt = None if flipped is None else make_alt(flipped)
    agree = alt is not None and all(base.value(x) == alt.value(x) for x in queries)
    verdicts = (decide_matroidal(base), None if alt is None else decide_matroidal(alt))
    return AdversaryTranscript(kind, m, tuple(queries), base, alt, flipped, inert, agree, verdicts)


def adversary_matroidal(m: int, queries: Iterable[int]) -> AdversaryTranscript:
    """Matroidal base function with a non-matroidal twin hidden from the queries."""
    queries = list(queries)
    n = 2 * m
    lt, eq, gt = v_partition(m)
    w_base = set(lt) | set(gt)
    base = lambda_W(w_base, n)

    def alt(x):
        return lambda_W(w_base | {x, complement_word(x, n)}, n)

    return _transcript("matroidal", m, queries, base, eq, alt)


def adversary_nonmatroidal(m: int, queries: Iterable[int]) -> AdversaryTranscript:
    """Non-matroidal base function (a buffered cycle) with a matroidal twin hidden from the queries."""
    queries = list(queries)
    n = 2 * m
    w_base = set(buffered_path(m).closure())
    base = lambda_W(w_base, n)

    def alt(x):
        return lambda_W(w_base - {x, complement_word(x, n)}, n)

    return _transcript("nonmatroidal", m, queries, base, w_base, alt)
