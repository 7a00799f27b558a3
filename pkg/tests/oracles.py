"""Slow reference implementations used to cross-check the package.

Nothing here imports :mod:`connfunc`; each function follows the textbook
definition with plain Python sets so it can serve as an independent oracle.
"""

from __future__ import annotations

from itertools import combinations, product

import networkx as nx


def subsets(n):
    return range(1 << n)


def members(x):
    return {i for i in range(x.bit_length()) if x >> i & 1}


# --------------------------------------------------------------------------
# graphs
# --------------------------------------------------------------------------

def gamma_by_definition(ends, x):
    """``|V(X)| + |V(E-X)| - |V(E)|`` for an edge list ``ends``; bit ``i`` is edge ``i``."""
    inside = members(x)
    outside = set(range(len(ends))) - inside

    def support(es):
        return {v for i in es for v in ends[i]}

    return len(support(inside)) + len(support(outside)) - len(support(range(len(ends))))


def gamma_table_by_definition(ends):
    return [gamma_by_definition(ends, x) for x in subsets(len(ends))]


def edges_adjacent(ends, i, j):
    return bool(set(ends[i]) & set(ends[j]))


def e_controlled_by_definition(ends, i):
    """Unions of controlled subsets of ``S_u - e``, ``S_v - e`` and ``{e}``, as frozensets."""
    u, v = ends[i]

    def star_minus(w):
        return frozenset(j for j, (a, b) in enumerate(ends) if j != i and w in (a, b))

    def controlled(s):
        return {s, frozenset()} | {frozenset([t]) for t in s}

    return {a | b | c for a, b, c in product(controlled(star_minus(u)), controlled(star_minus(v)),
                                             [frozenset(), frozenset([i])])}


# --------------------------------------------------------------------------
# set functions and matroids
# --------------------------------------------------------------------------

def is_submodular(values, n):
    full = range(1 << n)
    return all(values[x] + values[y] >= values[x | y] + values[x & y] for x in full for y in full)


def is_connectivity_function(values, n):
    top = (1 << n) - 1
    return (values[0] == 0 and all(values[x] == values[top ^ x] for x in subsets(n))
            and is_submodular(values, n))


def rank_by_independence(circuits, n):
    """``r(X)`` = largest subset of ``X`` containing no circuit."""
    circuits = list(circuits)
    independent = [j for j in subsets(n) if not any(c & j == c for c in circuits)]
    rank = []
    for x in subsets(n):
        rank.append(max(bin(j).count("1") for j in independent if j & x == j))
    return rank


def uniform_rank(r, n):
    return [min(r, bin(x).count("1")) for x in subsets(n)]


def connectivity_from_rank(rank, n):
    top = (1 << n) - 1
    return [rank[x] + rank[top ^ x] - rank[top] for x in subsets(n)]


# --------------------------------------------------------------------------
# spikes
# --------------------------------------------------------------------------

def spike_elements(n):
    """Element names in bit order: x1, y1, x2, y2, ..."""
    return [f"{c}{i}" for i in range(1, n + 1) for c in "xy"]


def spike_rank_by_cases(n, independent_words, x):
    """Rank of ``x`` in ``S(I)`` from the four-case description, using named elements."""
    names = spike_elements(n)
    chosen = {names[b] for b in members(x)}
    legs = [{f"x{i}", f"y{i}"} for i in range(1, n + 1)]
    full_legs = sum(1 for leg in legs if leg <= chosen)
    legs_met = sum(1 for leg in legs if leg & chosen)
    if full_legs == 0 and legs_met < n:
        return len(chosen)
    if full_legs > 0 and legs_met < n:
        return legs_met + 1
    if full_legs > 0:
        return n
    transversal = tuple("y" if f"y{i}" in chosen else "x" for i in range(1, n + 1))
    in_i = any(transversal == tuple("y" if w >> (i - 1) & 1 else "x" for i in range(1, n + 1))
               for w in independent_words)
    return n - 1 if in_i else n


def transversal_mask(n, word):
    return sum(1 << (2 * i + (word >> i & 1)) for i in range(n))


def hypercube_independent_sets(n):
    """Every independent vertex set of ``H_n`` (exhaustive; fine for n <= 3)."""
    out = []
    verts = range(1 << n)
    for pick in range(1 << (1 << n)):
        ws = [w for w in verts if pick >> w & 1]
        if all(bin(a ^ b).count("1") != 1 for a, b in combinations(ws, 2)):
            out.append(frozenset(ws))
    return out


def matroidal_by_enumeration(n, transversal_values):
    """Is some ``S(I)`` reproducing ``n - |I & {X, ~X}|`` on every transversal?"""
    top = (1 << n) - 1
    for ind in hypercube_independent_sets(n):
        if all(transversal_values[w] == n - (w in ind) - ((top ^ w) in ind) for w in range(1 << n)):
            return True
    return False


def all_spiky_transversal_tables(n):
    """All spiky value vectors on the ``2^n`` transversals, by brute force over pairs."""
    top = (1 << n) - 1
    reps = [w for w in range(1 << n) if w < top ^ w]
    out = []
    for choice in product((n - 2, n - 1, n), repeat=len(reps)):
        vals = [0] * (1 << n)
        for w, v in zip(reps, choice):
            vals[w] = vals[top ^ w] = v
        if all(vals[w] + vals[w ^ (1 << i)] >= 2 * n - 2 for w in range(1 << n) for i in range(n)):
            out.append(tuple(vals))
    return out


# --------------------------------------------------------------------------
# hypercube
# --------------------------------------------------------------------------

def cube_subgraph(words, n):
    g = nx.Graph()
    g.add_nodes_from(words)
    for a, b in combinations(words, 2):
        if bin(a ^ b).count("1") == 1:
            g.add_edge(a, b)
    return g


def f_by_recursion(m):
    val = 2
    for k in range(1, m):
        val = 2 * val if k % 2 else 2 * val - 2
    return val
