"""Hot inner loops over full subset tables.

Every kernel exists twice: a numba ``@njit`` version and a pure-numpy
version with the same signature and result.  The public name dispatches
to the numba version unless numba is missing or the environment variable
``CONNFUNC_DISABLE_NUMBA`` is set to a truthy value.  Tests and
``benchmarks/bench_kernels.py`` call both variants directly.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

_FLAG = os.environ.get("CONNFUNC_DISABLE_NUMBA", "").strip().lower()
USE_NUMBA = numba is not None and _FLAG not in ("1", "true", "yes", "on")


def _njit(fn):
    if numba is None:  # pragma: no cover
        return fn
    return numba.njit(cache=True)(fn)


# --------------------------------------------------------------------------
# submodularity: full pairwise definition
# --------------------------------------------------------------------------

@_njit
def _submodular_full_nb(values, n):
    size = 1 << n
    count = 0
    wx = -1
    wy = -1
    for x in range(size):
        vx = values[x]
        for y in range(x + 1, size):
            if vx + values[y] < values[x | y] + values[x & y]:
                if count == 0:
                    wx = x
                    wy = y
                count += 1
    return count, wx, wy


def _submodular_full_np(values, n):
    size = 1 << n
    idx = np.arange(size, dtype=np.int64)
    count = 0
    wx = wy = -1
    for x in range(size):
        ys = idx[x + 1:]
        bad = values[x] + values[ys] < values[x | ys] + values[x & ys]
        k = int(np.count_nonzero(bad))
        if k and count == 0:
            wx, wy = x, int(ys[np.argmax(bad)])
        count += k
    return count, wx, wy


# --------------------------------------------------------------------------
# submodularity: local (diminishing returns) form
# --------------------------------------------------------------------------

@_njit
def _submodular_local_nb(values, n):
    size = 1 << n
    count = 0
    wx = -1
    we = -1
    wf = -1
    for x in range(size):
        vx = values[x]
        for e in range(n):
            be = 1 << e
            if x & be:
                continue
            for f in range(e + 1, n):
                bf = 1 << f
                if x & bf:
                    continue
                if values[x | be] + values[x | bf] < values[x | be | bf] + vx:
                    if count == 0:
                        wx = x
                        we = e
                        wf = f
                    count += 1
    return count, wx, we, wf


def _submodular_local_np(values, n):
    size = 1 << n
    idx = np.arange(size, dtype=np.int64)
    count = 0
    best = (-1, -1, -1)
    for e in range(n):
        be = 1 << e
        for f in range(e + 1, n):
            bf = 1 << f
            xs = idx[(idx & (be | bf)) == 0]
            bad = values[xs | be] + values[xs | bf] < values[xs | be | bf] + values[xs]
            k = int(np.count_nonzero(bad))
            if k:
                x = int(xs[np.argmax(bad)])
                if count == 0 or x < best[0]:
                    best = (x, e, f)
                count += k
    return (count, *best)


# --------------------------------------------------------------------------
# graph connectivity table from vertex incidence masks
# --------------------------------------------------------------------------

@_njit
def _gamma_table_nb(incidence, n):
    size = 1 << n
    full = size - 1
    out = np.zeros(size, dtype=np.int64)
    nv = incidence.shape[0]
    for x in range(size):
        comp = full ^ x
        c = 0
        for v in range(nv):
            m = incidence[v]
            if (m & x) != 0 and (m & comp) != 0:
                c += 1
        out[x] = c
    return out


def _gamma_table_np(incidence, n):
    size = 1 << n
    full = size - 1
    out = np.zeros(size, dtype=np.int64)
    chunk = max(1, (1 << 22) // max(1, len(incidence)))
    for start in range(0, size, chunk):
        xs = np.arange(start, min(size, start + chunk), dtype=np.int64)[:, None]
        inside = (incidence[None, :] & xs) != 0
        outside = (incidence[None, :] & (full ^ xs)) != 0
        out[start:start + len(xs)] = np.count_nonzero(inside & outside, axis=1)
    return out


# --------------------------------------------------------------------------
# matroid rank from a circuit family
# --------------------------------------------------------------------------

@_njit
def _rank_from_circuits_nb(circuits, n):
    size = 1 << n
    dep = np.zeros(size, dtype=np.bool_)
    for c in circuits:
        dep[c] = True
    for e in range(n):
        be = 1 << e
        for x in range(size):
            if x & be and dep[x ^ be]:
                dep[x] = True
    rank = np.zeros(size, dtype=np.int64)
    for x in range(1, size):
        if not dep[x]:
            c = 0
            y = x
            while y:
                y &= y - 1
                c += 1
            rank[x] = c
        else:
            best = 0
            for e in range(n):
                be = 1 << e
                if x & be and rank[x ^ be] > best:
                    best = rank[x ^ be]
            rank[x] = best
    return rank


def _rank_from_circuits_np(circuits, n):
    size = 1 << n
    idx = np.arange(size, dtype=np.int64)
    dep = np.zeros(size, dtype=bool)
    dep[np.asarray(circuits, dtype=np.int64)] = True
    for e in range(n):
        be = 1 << e
        has = idx[(idx & be) != 0]
        dep[has] |= dep[has ^ be]
    pop = np.bitwise_count(idx.astype(np.uint64)).astype(np.int64)
    rank = np.where(dep, 0, pop)
    for k in range(1, n + 1):
        layer = idx[(pop == k) & dep]
        if len(layer) == 0:
            continue
        best = np.zeros(len(layer), dtype=np.int64)
        for e in range(n):
            be = 1 << e
            sel = (layer & be) != 0
            best[sel] = np.maximum(best[sel], rank[layer[sel] ^ be])
        rank[layer] = best
    return rank


# --------------------------------------------------------------------------
# connected components of an induced subgraph of the hypercube
# --------------------------------------------------------------------------

@_njit
def _cube_components_nb(member, n):
    size = 1 << n
    label = np.full(size, -1, dtype=np.int64)
    stack = np.empty(size, dtype=np.int64)
    nxt = 0
    for s in range(size):
        if not member[s] or label[s] >= 0:
            continue
        label[s] = nxt
        top = 0
        stack[top] = s
        top += 1
        while top:
            top -= 1
            w = stack[top]
            for i in range(n):
                u = w ^ (1 << i)
                if member[u] and label[u] < 0:
                    label[u] = nxt
                    stack[top] = u
                    top += 1
        nxt += 1
    return label


def _cube_components_np(member, n):
    size = 1 << n
    idx = np.arange(size, dtype=np.int64)
    big = size + 1
    lab = np.where(member, idx, big)
    while True:
        new = lab.copy()
        for i in range(n):
            new = np.minimum(new, np.where(member, lab[idx ^ (1 << i)], big))
        new = np.where(member, new, big)
        if np.array_equal(new, lab):
            break
        lab = new
    out = np.full(size, -1, dtype=np.int64)
    roots = np.unique(lab[member])
    # renumber by first appearance so both backends agree
    out[member] = np.searchsorted(roots, lab[member])
    return out


# --------------------------------------------------------------------------
# dispatch
# --------------------------------------------------------------------------

def _pick(nb, np_):
    return nb if USE_NUMBA else np_


submodular_full = _pick(_submodular_full_nb, _submodular_full_np)
submodular_local = _pick(_submodular_local_nb, _submodular_local_np)
gamma_table = _pick(_gamma_table_nb, _gamma_table_np)
rank_from_circuits = _pick(_rank_from_circuits_nb, _rank_from_circuits_np)
cube_components = _pick(_cube_components_nb, _cube_components_np)

BACKENDS = {
    "numba": {
        "submodular_full": _submodular_full_nb,
        "submodular_local": _submodular_local_nb,
        "gamma_table": _gamma_table_nb,
        "rank_from_circuits": _rank_from_circuits_nb,
        "cube_components": _cube_components_nb,
    },
    "numpy": {
        "submodular_full": _submodular_full_np,
        "submodular_local": _submodular_local_np,
        "gamma_table": _gamma_table_np,
        "rank_from_circuits": _rank_from_circuits_np,
        "cube_components": _cube_components_np,
    },
}
