"""Command-line interface: ``connfunc <subcommand> ...``.

Every invocation prints one JSON object (sorted keys) on standard output.
Exit status is 0 when the question was answered, whatever the answer; 1 when
the input is invalid; 2 when a capacity limit is exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Any, Sequence

from .adversary import adversary_matroidal, adversary_nonmatroidal, parse_queries
from .core import (
    MAX_TABLE,
    CapacityError,
    ConnFuncError,
    CountedOracle,
    GroundSet,
    SetFunctionTable,
    load_json,
    parse_subset,
    validate_connectivity,
)
from .graphs import Multigraph
from .hypercube import buffered_path
from .reconstruct import adjacency_structure
from .spikes import (
    IndependentSet,
    SpikyTable,
    brute_force_matroidal,
    decide_matroidal,
    spike_circuits,
    spike_ground,
    spike_mu,
    spike_mu_table,
    spike_rank,
    spike_rank_table,
    word_to_mask,
)
from .verifier import recognize_graphic

EXIT_OK, EXIT_INVALID, EXIT_CAPACITY = 0, 1, 2


class UsageError(ConnFuncError):
    pass


def _parse_set_arg(text: str, ground: GroundSet) -> int:
    """``--set`` value: a JSON label list, a hex/binary mask, or comma-separated labels."""
    text = text.strip()
    if text in ("", "{}", "[]"):
        return 0
    if text.startswith("["):
        try:
            spec = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"bad --set value: {exc}") from None
        return parse_subset(spec, ground)
    if text.lower().startswith(("0x", "0b")):
        return parse_subset(text, ground)
    labels = [s.strip() for s in text.strip("{}").split(",") if s.strip()]
    return ground.mask(labels)


def _load_table(path: str) -> SetFunctionTable:
    data = load_json(path)
    if isinstance(data, dict) and "transversals" in data:
        return _spiky_from_json(data).to_table()
    return SetFunctionTable.from_json(data)


def _spiky_from_json(data: Any) -> SpikyTable:
    if isinstance(data, dict) and "transversals" in data:
        n = data.get("n")
        if isinstance(n, int) and n > MAX_TABLE:
            raise CapacityError(f"spiky tables are limited to n <= {MAX_TABLE}")
        return SpikyTable.from_json(data)
    t = SetFunctionTable.from_json(data)
    return SpikyTable.from_set_function(t)


def _independent(args) -> IndependentSet:
    words = []
    for w in args.word or ():
        try:
            words.append(int(w, 0) if w.lower().startswith(("0b", "0x")) else int(w, 2))
        except ValueError:
            raise UsageError(f"bad transversal word {w!r}") from None
    return IndependentSet(args.n, frozenset(words))


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------

def cmd_validate(args) -> dict:
    t = _load_table(args.table)
    rep = validate_connectivity(t, args.method)
    out: dict = {"valid": rep.valid}
    if not rep.valid:
        out["violations"] = [v.to_json(t.ground) for v in rep.violations]
    return out


def cmd_graph_conn(args) -> dict:
    g = Multigraph.from_json(load_json(args.graph))
    if args.full:
        return g.gamma_table().to_json()
    x = _parse_set_arg(args.set, g.ground)
    return {"set": g.ground.members(x), "value": g.gamma(x)}


def cmd_recognize(args) -> dict:
    t = _load_table(args.table)
    if not args.skip_validate:
        rep = validate_connectivity(t)
        if not rep.valid:
            raise ConnFuncError("table is not a connectivity function: "
                                + ", ".join(sorted(rep.axioms())))
    return recognize_graphic(CountedOracle(t)).to_json()


def cmd_adjacency(args) -> dict:
    t = _load_table(args.table)
    o = CountedOracle(t)
    out = adjacency_structure(o).to_json()
    out["queries"] = o.distinct_count
    return out


def cmd_spike(args) -> dict:
    ind = _independent(args)
    ground = spike_ground(ind.n)
    if args.what == "circuits":
        if ind.n > 8:
            raise CapacityError("circuit listing is limited to n <= 8")
        circuits = sorted(spike_circuits(ind), key=lambda c: (bin(c).count("1"), c))
        return {"n": ind.n, "circuits": [ground.members(c) for c in circuits]}
    if args.set is not None:
        x = _parse_set_arg(args.set, ground)
        fn = spike_rank if args.what == "rank" else spike_mu
        return {"set": ground.members(x), "value": fn(ind, x)}
    if args.what == "rank":
        return spike_rank_table(ind).to_json()
    return spike_mu_table(ind).to_json()


def cmd_spiky_decide(args) -> dict:
    t = _spiky_from_json(load_json(args.table))
    verdict = brute_force_matroidal(t) if args.brute_force else decide_matroidal(t)
    return verdict.to_json()


def cmd_buffered_path(args) -> dict:
    if args.m < 1:
        raise UsageError("--m must be positive")
    if 2 * args.m > 40:
        raise CapacityError("buffered paths are limited to m <= 20")
    return buffered_path(args.m).to_json()


def cmd_adversary(args) -> dict:
    m = args.m
    if m < 1:
        raise UsageError("--m must be positive")
    if 2 * m > MAX_TABLE:
        raise CapacityError(f"adversaries are limited to m <= {MAX_TABLE // 2}")
    queries = parse_queries(load_json(args.queries), m) if args.queries else []
    if args.random:
        rng = random.Random(args.seed)
        n = 2 * m
        queries += [word_to_mask(rng.randrange(1 << n), n) for _ in range(args.random)]
    fn = adversary_matroidal if args.kind == "matroidal" else adversary_nonmatroidal
    return fn(m, queries).to_json()


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="connfunc", description="Connectivity-function toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check the connectivity-function axioms of a table")
    s.add_argument("table")
    s.add_argument("--method", choices=("auto", "full", "local"), default="auto")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("graph-conn", help="connectivity values of a multigraph")
    s.add_argument("graph")
    grp = s.add_mutually_exclusive_group(required=True)
    grp.add_argument("--set", help="edge labels, e.g. 'a,b' or '[\"a\"]' or a hex mask")
    grp.add_argument("--full", action="store_true", help="emit the full table")
    s.set_defaults(func=cmd_graph_conn)

    s = sub.add_parser("recognize-graphic", help="decide whether a table is graphic")
    s.add_argument("--table", required=True)
    s.add_argument("--skip-validate", action="store_true",
                   help="trust the table to be a connectivity function")
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("adjacency", help="edge adjacency recovered from singleton and pair values")
    s.add_argument("--table", required=True)
    s.set_defaults(func=cmd_adjacency)

    s = sub.add_parser("spike", help="rank, connectivity or circuits of a spike")
    s.add_argument("what", choices=("rank", "mu", "circuits"))
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--word", action="append", help="transversal in the independent set, e.g. 0b011")
    s.add_argument("--set", help="evaluate at one subset instead of emitting a table")
    s.set_defaults(func=cmd_spike)

    s = sub.add_parser("spiky-decide", help="matroidality of a spiky function")
    s.add_argument("--table", required=True)
    s.add_argument("--brute-force", action="store_true")
    s.set_defaults(func=cmd_spiky_decide)

    s = sub.add_parser("buffered-path", help="construct a buffered path in H_2m")
    s.add_argument("--m", type=int, required=True)
    s.set_defaults(func=cmd_buffered_path)

    s = sub.add_parser("adversary", help="run a query-set adversary")
    s.add_argument("kind", choices=("matroidal", "nonmatroidal"))
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--queries", help="JSON list of queried subsets")
    s.add_argument("--random", type=int, default=0, help="add this many random transversal queries")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_adversary)
    return p


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        result = args.func(args)
    except CapacityError as exc:
        print(json.dumps({"error": str(exc), "kind": "capacity"}, sort_keys=True), file=out)
        return EXIT_CAPACITY
    except (ConnFuncError, OSError, json.JSONDecodeError) as exc:
        print(json.dumps({"error": str(exc), "kind": "invalid"}, sort_keys=True), file=out)
        return EXIT_INVALID
    print(json.dumps(result, sort_keys=True), file=out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
