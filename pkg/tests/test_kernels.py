"""The numba and numpy kernels must agree bit for bit."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from connfunc import _kernels
from connfunc._kernels import BACKENDS
from oracles import gamma_table_by_definition, is_submodular, rank_by_independence

NB, NP = BACKENDS["numba"], BACKENDS["numpy"]


def test_backends_expose_same_kernels():
    assert set(NB) == set(NP) == {
        "submodular_full", "submodular_local", "gamma_table", "rank_from_circuits", "cube_components"}


def test_dispatch_follows_flag():
    expected = NB if _kernels.USE_NUMBA else NP
    assert _kernels.gamma_table is expected["gamma_table"]


tables = st.integers(1, 6).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(0, 4), min_size=1 << n, max_size=1 << n)))


@given(tables)
def test_submodular_full(data):
    n, vals = data
    vals = np.array(vals, dtype=np.int64)
    a, b = NB["submodular_full"](vals, n), NP["submodular_full"](vals, n)
    assert tuple(map(int, a)) == tuple(map(int, b))
    assert (a[0] == 0) == is_submodular(vals, n)


@given(tables)
def test_submodular_local(data):
    n, vals = data
    vals = np.array(vals, dtype=np.int64)
    a, b = NB["submodular_local"](vals, n), NP["submodular_local"](vals, n)
    assert tuple(map(int, a)) == tuple(map(int, b))
    assert (a[0] == 0) == is_submodular(vals, n)


edge_lists = st.integers(1, 8).flatmap(
    lambda k: st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)).filter(lambda e: e[0] != e[1]),
                       min_size=k, max_size=k))


@given(edge_lists)
def test_gamma_table(ends):
    n = len(ends)
    verts = sorted({v for e in ends for v in e})
    inc = np.array([sum(1 << i for i, e in enumerate(ends) if v in e) for v in verts], dtype=np.int64)
    a, b = NB["gamma_table"](inc, n), NP["gamma_table"](inc, n)
    assert np.array_equal(a, b)
    assert list(a) == gamma_table_by_definition(ends)


circuit_families = st.integers(1, 6).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.integers(1, (1 << n) - 1), max_size=5)))


@given(circuit_families)
def test_rank_from_circuits(data):
    n, fam = data
    fam = [c for c in fam if not any(d != c and d & c == d for d in fam)]
    arr = np.array(fam, dtype=np.int64)
    a, b = NB["rank_from_circuits"](arr, n), NP["rank_from_circuits"](arr, n)
    assert np.array_equal(a, b)
    assert list(a) == rank_by_independence(fam, n)


@given(st.integers(1, 7).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.booleans(), min_size=1 << n, max_size=1 << n))))
def test_cube_components(data):
    n, member = data
    member = np.array(member, dtype=np.bool_)
    a, b = NB["cube_components"](member, n), NP["cube_components"](member, n)
    assert np.array_equal(a, b)
    # labels are numbered by least member and adjacent members share a label
    seen = []
    for w in np.nonzero(member)[0]:
        if a[w] not in seen:
            seen.append(a[w])
        for i in range(n):
            u = w ^ (1 << i)
            if member[u]:
                assert a[u] == a[w]
    assert seen == list(range(len(seen)))
    assert np.all(a[~member] == -1)


@pytest.mark.parametrize("name", ["submodular_full", "submodular_local"])
def test_reports_first_violation_identically(name):
    vals = np.array([0, 1, 1, 3, 3, 1, 1, 0], dtype=np.int64)
    a, b = NB[name](vals, 3), NP[name](vals, 3)
    assert a[0] > 0
    assert tuple(map(int, a)) == tuple(map(int, b))


def _run(code, env_flag):
    import os
    import subprocess
    import sys

    env = dict(os.environ)
    env.pop("CONNFUNC_DISABLE_NUMBA", None)
    if env_flag is not None:
        env["CONNFUNC_DISABLE_NUMBA"] = env_flag
    return subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env=env, check=True).stdout


@pytest.mark.parametrize("flag,expected", [("1", "False"), ("yes", "False"), ("0", "True"), (None, "True")])
def test_env_flag_selects_backend(flag, expected):
    out = _run("from connfunc import _kernels; print(_kernels.USE_NUMBA)", flag)
    assert out.strip() == expected


def test_numpy_backend_end_to_end():
    code = (
        "from connfunc import _kernels, CountedOracle, Multigraph, recognize_graphic\n"
        "assert _kernels.gamma_table is _kernels.BACKENDS['numpy']['gamma_table']\n"
        "g = Multigraph.from_ends([(0,1),(1,2),(2,0),(2,3)])\n"
        "v = recognize_graphic(CountedOracle(g.gamma_table()))\n"
        "print(v.graphic and v.witness.gamma_table() == g.gamma_table())\n"
    )
    assert _run(code, "1").strip() == "True"


def test_benchmark_script_runs():
    import subprocess
    import sys
    from pathlib import Path

    script = Path(__file__).resolve().parent.parent / "benchmarks" / "bench_kernels.py"
    out = subprocess.run([sys.executable, str(script), "--quick", "--repeat", "1"],
                         capture_output=True, text=True, check=True).stdout
    assert len(out.strip().splitlines()) == 1 + len(BACKENDS["numba"])
