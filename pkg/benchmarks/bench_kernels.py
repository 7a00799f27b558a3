"""Compare the numba and numpy kernel backends on representative inputs.

    python benchmarks/bench_kernels.py [--repeat 5] [--quick]

Prints one line per kernel with the best wall time of each backend and the
speed-up.  Results of both backends are compared before timing.
"""

import argparse
import time

import numpy as np

from connfunc import _kernels
from connfunc.graphs import Multigraph
from connfunc.hypercube import buffered_path
from connfunc.spikes import IndependentSet, spike_circuits, spike_mu_table


def cases(quick):
    rng = np.random.default_rng(0)
    legs = 5 if quick else 6
    spike = spike_mu_table(IndependentSet(legs, frozenset({0})))
    yield "submodular_full", (spike.values, spike.n)

    n_loc = 14 if quick else 16
    ends = [tuple(rng.choice(8, size=2, replace=False)) for _ in range(n_loc)]
    g = Multigraph.from_ends([(int(a), int(b)) for a, b in ends])
    gt = g.gamma_table()
    yield "submodular_local", (gt.values, gt.n)

    n_g = 16 if quick else 20
    ends = [tuple(rng.choice(10, size=2, replace=False)) for _ in range(n_g)]
    g = Multigraph.from_ends([(int(a), int(b)) for a, b in ends])
    yield "gamma_table", (g.incidence, g.n)

    k = 6 if quick else 8
    circ = np.array(sorted(spike_circuits(IndependentSet(k, frozenset({0})))), dtype=np.int64)
    yield "rank_from_circuits", (circ, 2 * k)

    m = 7 if quick else 9
    member = np.zeros(1 << 2 * m, dtype=np.bool_)
    member[list(buffered_path(m).closure())] = True
    member |= rng.random(member.shape) < 0.3
    yield "cube_components", (member, 2 * m)


def best_time(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--quick", action="store_true", help="smaller inputs")
    args = ap.parse_args()

    nb, np_ = _kernels.BACKENDS["numba"], _kernels.BACKENDS["numpy"]
    print(f"{'kernel':<20}{'size':>8}{'numba s':>12}{'numpy s':>12}{'speed-up':>10}")
    for name, kargs in cases(args.quick):
        a, b = nb[name](*kargs), np_[name](*kargs)  # also triggers compilation
        if isinstance(a, tuple):
            a, b = np.array(a, dtype=np.int64), np.array(b, dtype=np.int64)
        if not np.array_equal(a, b):
            raise SystemExit(f"backends disagree on {name}")
        t_nb = best_time(nb[name], kargs, args.repeat)
        t_np = best_time(np_[name], kargs, args.repeat)
        print(f"{name:<20}{kargs[1]:>8}{t_nb:>12.4f}{t_np:>12.4f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
