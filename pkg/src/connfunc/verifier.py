"""Certifying a candidate graph against a connectivity oracle, and the full recogniser.

For an edge ``e = uv`` the e-controlled sets are the unions of one
controlled subset each of ``S_u - e``, ``S_v - e`` and ``{e}``, where a
controlled subset of ``S`` is ``S`` itself, the empty set or a singleton.
A connectivity function that agrees with ``gamma_G`` on all of them, for
every edge, equals ``gamma_G``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Any

from .core import CountedOracle, GroundSet, bits
from .graphs import Edge, Multigraph
from .reconstruct import adjacency_structure, candidates, split_components


@dataclass(frozen=True)
class EControlledFamily:
    edge: str
    endpoints: tuple[Any, Any]
    sets: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.sets)


def controlled_subsets(s: int) -> list[int]:
    out = {0, s}
    out.update(1 << i for i in bits(s))
    return sorted(out)


def e_controlled_sets(g: Multigraph, e: int | str) -> EControlledFamily:
    i = g.labels.index(e) if isinstance(e, str) else e
    edge = g.edges[i]
    be = 1 << i
    su = g.star(edge.u) & ~be
    sv = g.star(edge.v) & ~be
    sets = {a | b | c for a in controlled_subsets(su) for b in controlled_subsets(sv) for c in (0, be)}
    return EControlledFamily(edge.label, edge.ends, tuple(sorted(sets)))


def agrees_on_e_controlled(o: CountedOracle, g: Multigraph) -> bool:
    """Compare oracle and ``gamma_g`` on every e-controlled set; stops at the first mismatch.

    The graph's edge labels name oracle elements, so ``g`` may cover only part
    of the ground set (one adjacency class, say).
    """
    to_ground = [o.ground.index(lab) for lab in g.labels]
    checked: set[int] = set()
    for i in range(g.n):
        for y in e_controlled_sets(g, i).sets:
            if y in checked:
                continue
            checked.add(y)
            yg = sum(1 << to_ground[j] for j in bits(y))
            if o(yg) != g.gamma(y):
                return False
    return True


def query_budget(n: int) -> int:
    """Declared bound on distinct oracle queries used by :func:`recognize_graphic`."""
    b = n + comb(n, 2) + 2 * comb(n, 3) + 2 * n * (n + 1) ** 2
    return min(b, 300 * (n + 4) ** 3)


@dataclass(frozen=True)
class GraphicVerdict:
    graphic: bool
    witness: Multigraph | None
    queries_used: int
    reason: str = ""

    def to_json(self) -> dict:
        out: dict = {"graphic": self.graphic}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        out["queries"] = self.queries_used
        if self.reason:
            out["reason"] = self.reason
        return out


def recognize_graphic(o: CountedOracle, ground: GroundSet | None = None) -> GraphicVerdict:
    """Decide whether the oracle's connectivity function is that of a graph.

    The oracle is assumed to present a connectivity function.  A GRAPHIC
    verdict carries a witness that agreed with the oracle on every
    e-controlled set, which under that assumption forces equality everywhere.
    """
    ground = ground or o.ground

    def no(reason):
        return GraphicVerdict(False, None, o.distinct_count, reason)

    for e in range(ground.size):
        v = o(1 << e)
        if v not in (0, 1, 2):
            return no(f"element {ground.label(e)} has connectivity {v}, not in {{0,1,2}}")
    adj = adjacency_structure(o, ground)
    edges: list[Edge] = []
    for k, comp in enumerate(split_components(adj)):
        chosen = None
        for cand in candidates(o, adj, comp):
            if agrees_on_e_controlled(o, cand):
                chosen = cand
                break
        if chosen is None:
            return no(f"no graph realises the class {ground.members(comp)}")
        edges.extend(Edge(e.label, (k, e.u), (k, e.v)) for e in chosen.edges)
    witness = Multigraph(tuple(edges)).reorder(ground.names())
    names = {w: i for i, w in enumerate(witness.vertices)}
    witness = witness.relabel_vertices(names)
    return GraphicVerdict(True, witness, o.distinct_count)
