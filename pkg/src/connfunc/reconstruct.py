"""Candidate graphs for a connectivity oracle.

Two edges of a graph are adjacent exactly when ``λ({e,f}) < λ({e}) + λ({f})``.
From the resulting adjacency relation every connected class is rebuilt by a
backtracking search for multigraphs with that line structure.  Edges are
placed in breadth-first order; each new edge must touch exactly its already
placed neighbours, which leaves very few endpoint choices.  Known oracle
values on singletons and pairs prune the search through monotone bounds on
the boundary size, and the surviving graphs are separated by 3-element
queries where they disagree.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

import numpy as np

from ._dsu import DisjointSets
from .core import ConnFuncError, CountedOracle, GroundSet, bits
from .graphs import Edge, Multigraph

log = logging.getLogger(__name__)

MAX_CANDIDATES = 64
NODE_LIMIT = 200_000


@dataclass(frozen=True, eq=False)
class AdjacencyStructure:
    ground: GroundSet
    adjacent: np.ndarray
    singleton_values: tuple[int, ...]

    def __post_init__(self):
        adj = np.array(self.adjacent, dtype=bool)
        n = self.ground.size
        if adj.shape != (n, n) or adj.diagonal().any() or not np.array_equal(adj, adj.T):
            raise ConnFuncError("adjacency must be an irreflexive symmetric n x n relation")
        if len(self.singleton_values) != n:
            raise ConnFuncError("need a singleton value for every element")
        adj.setflags(write=False)
        object.__setattr__(self, "adjacent", adj)

    def neighbours(self, e: int) -> list[int]:
        return [int(f) for f in np.nonzero(self.adjacent[e])[0]]

    def pairs(self) -> list[tuple[int, int]]:
        n = self.ground.size
        return [(e, f) for e in range(n) for f in range(e + 1, n) if self.adjacent[e, f]]

    def __eq__(self, other):
        if not isinstance(other, AdjacencyStructure):
            return NotImplemented
        return (self.ground == other.ground and self.singleton_values == other.singleton_values
                and np.array_equal(self.adjacent, other.adjacent))

    __hash__ = None

    def to_json(self) -> dict:
        g = self.ground
        return {
            "labels": list(g.names()),
            "singletons": {g.label(e): v for e, v in enumerate(self.singleton_values)},
            "adjacent": [[g.label(e), g.label(f)] for e, f in self.pairs()],
            "components": [g.members(c) for c in split_components(self)],
        }


def adjacent(o: CountedOracle, e: int, f: int) -> bool:
    if e == f:
        raise ConnFuncError("adjacency is only defined for distinct elements")
    return o(1 << e | 1 << f) < o(1 << e) + o(1 << f)


def adjacency_structure(o: CountedOracle, ground: GroundSet | None = None) -> AdjacencyStructure:
    ground = ground or o.ground
    n = ground.size
    single = tuple(o(1 << e) for e in range(n))
    adj = np.zeros((n, n), dtype=bool)
    for e, f in combinations(range(n), 2):
        adj[e, f] = adj[f, e] = o(1 << e | 1 << f) < single[e] + single[f]
    return AdjacencyStructure(ground, adj, single)


def split_components(a: AdjacencyStructure) -> list[int]:
    """Connected classes of the adjacency relation as masks, by least element."""
    dsu = DisjointSets(a.ground.size)
    for e, f in a.pairs():
        dsu.union(e, f)
    return [sum(1 << e for e in cls) for cls in dsu.classes()]


# --------------------------------------------------------------------------
# root-graph search
# --------------------------------------------------------------------------

class _RootSearch:
    def __init__(self, a: AdjacencyStructure, elems: list[int], constraints, node_limit: int):
        self.a = a
        nb = {e: set(a.neighbours(e)) for e in elems}
        order, seen = [], set()
        for start in elems:
            if start in seen:
                continue
            seen.add(start)
            queue = deque([start])
            while queue:
                e = queue.popleft()
                order.append(e)
                for f in sorted(nb[e]):
                    if f not in seen:
                        seen.add(f)
                        queue.append(f)
        self.order = order
        self.pos = {e: t for t, e in enumerate(order)}
        self.nb = nb
        self.complete_at = {e: max([self.pos[e]] + [self.pos[f] for f in nb[e]]) for e in elems}
        self.constraints = [(frozenset(xs), v, max(self.pos[x] for x in xs)) for xs, v in constraints]
        self.node_limit = node_limit
        self.nodes = 0
        self.aborted = False
        self.ends: dict[int, tuple[int, int]] = {}
        self.inc: list[set[int]] = []
        self.found: dict[tuple, dict[int, tuple[int, int]]] = {}

    def run(self) -> list[dict[int, tuple[int, int]]]:
        self._place(0)
        return list(self.found.values())

    def _options(self, t: int, e: int):
        if t == 0:
            return [(-1, -1)]
        placed = {f for f in self.nb[e] if self.pos[f] < t}
        cand = [w for w, s in enumerate(self.inc) if s <= placed]
        out = []
        for i, u in enumerate(cand):
            su = self.inc[u]
            if su == placed:
                out.append((u, -1))
            for v in cand[i + 1:]:
                if su | self.inc[v] == placed:
                    out.append((u, v))
        return out

    def _vertex_status(self, t: int):
        """Per vertex: will it end with degree >= 2, and is its star already final?

        A degree-1 vertex ``w`` on edge ``h = wz`` must grow if ``λ({h}) = 2``,
        or if ``λ({h}) = 1`` while ``z`` already has degree 2; it is a leaf if
        ``λ({h}) = 0``, or ``λ({h}) = 1`` while ``z`` already has degree 2.
        """
        inc, ends, single = self.inc, self.ends, self.a.singleton_values
        grow, final = [], []
        for w, s in enumerate(inc):
            g = f = False
            if any(self.complete_at[h] <= t for h in s):
                f = True
            elif len(s) == 1:
                (h,) = s
                u, v = ends[h]
                z = v if u == w else u
                lam = single[h]
                if lam == 2:
                    g = True
                elif lam == 0 or (lam == 1 and len(inc[z]) >= 2):
                    f = True
            grow.append(g)
            final.append(f)
        return grow, final

    def _consistent(self, t: int) -> bool:
        inc, ends = self.inc, self.ends
        grow = final = None
        for xs, value, ready in self.constraints:
            if ready > t:
                continue
            if grow is None:
                grow, final = self._vertex_status(t)
            lb = ub = 0
            for w in {w for x in xs for w in ends[x]}:
                if not inc[w] <= xs or grow[w]:
                    lb += 1
                    ub += 1
                elif not final[w]:
                    ub += 1
            if value < lb or value > ub:
                return False
        return True

    def _place(self, t: int):
        if self.aborted:
            return
        if t == len(self.order):
            key = tuple(sorted(tuple(sorted(s)) for s in self.inc))
            self.found.setdefault(key, dict(self.ends))
            return
        self.nodes += 1
        if self.nodes > self.node_limit:
            self.aborted = True
            return
        e = self.order[t]
        for u, v in self._options(t, e):
            created = []
            if u < 0:
                u = len(self.inc)
                self.inc.append(set())
                created.append(u)
            if v < 0:
                v = len(self.inc)
                self.inc.append(set())
                created.append(v)
            self.inc[u].add(e)
            self.inc[v].add(e)
            self.ends[e] = (u, v)
            if self._consistent(t):
                self._place(t + 1)
            del self.ends[e]
            self.inc[u].discard(e)
            self.inc[v].discard(e)
            for _ in created:
                self.inc.pop()


def _to_graph(ground: GroundSet, elems: list[int], ends: dict[int, tuple[int, int]]) -> Multigraph:
    return Multigraph(tuple(Edge(ground.label(e), *ends[e]) for e in sorted(elems)))


def _local_mask(g: Multigraph, ground: GroundSet, x: int) -> int:
    idx = {lab: i for i, lab in enumerate(g.labels)}
    return sum(1 << idx[ground.label(e)] for e in bits(x))


def root_graphs(a: AdjacencyStructure, component: int, constraints=(),
                node_limit: int = NODE_LIMIT) -> list[Multigraph] | None:
    """All loop-free multigraphs on ``component`` with the given adjacencies and values.

    ``constraints`` is an iterable of ``(elements, value)`` pairs restricting
    the connectivity of small sets.  Returns ``None`` if the search exceeds
    ``node_limit`` nodes.
    """
    elems = list(bits(component))
    search = _RootSearch(a, elems, constraints, node_limit)
    found = search.run()
    if search.aborted:
        return None
    return [_to_graph(a.ground, elems, ends) for ends in found]


def candidates(o: CountedOracle, a: AdjacencyStructure, component: int, use_values: bool = True,
               node_limit: int = NODE_LIMIT) -> list[Multigraph]:
    """Candidate realisations of the oracle on one adjacency class.

    With ``use_values=False`` the list is every root graph of the adjacency
    relation (no value filtering), which is what small examples enumerate.
    An empty list means no graph can realise the oracle on this class.
    """
    elems = list(bits(component))
    constraints = []
    if use_values:
        constraints = [((e,), a.singleton_values[e]) for e in elems]
        constraints += [((e, f), o(1 << e | 1 << f)) for e, f in combinations(elems, 2)]
    graphs = root_graphs(a, component, constraints, node_limit)
    if graphs is None:
        log.info("root search exceeded %d nodes on %s", node_limit, a.ground.members(component))
        return []
    if use_values and len(graphs) > 1:
        graphs = _split_by_triples(o, graphs, elems)
    if len(graphs) > MAX_CANDIDATES:
        log.info("%d candidates exceed the cap of %d", len(graphs), MAX_CANDIDATES)
        return []
    return graphs


def _split_by_triples(o: CountedOracle, graphs: list[Multigraph], elems: list[int]) -> list[Multigraph]:
    ground = o.ground
    for triple in combinations(elems, 3):
        if len(graphs) < 2:
            break
        x = sum(1 << e for e in triple)
        vals = [g.gamma(_local_mask(g, ground, x)) for g in graphs]
        if len(set(vals)) > 1:
            want = o(x)
            graphs = [g for g, v in zip(graphs, vals) if v == want]
    return graphs


@dataclass(frozen=True)
class CandidateList:
    components: tuple[tuple[int, tuple[Multigraph, ...]], ...]

    def __iter__(self) -> Iterator[tuple[int, tuple[Multigraph, ...]]]:
        return iter(self.components)

    @property
    def total(self) -> int:
        return sum(len(gs) for _, gs in self.components)


def candidate_list(o: CountedOracle, a: AdjacencyStructure | None = None) -> CandidateList:
    a = a or adjacency_structure(o)
    return CandidateList(tuple((c, tuple(candidates(o, a, c))) for c in split_components(a)))
