"""Command-line entry point.

Exit codes: 0 success, 1 malformed input file, 2 invalid parameters,
3 oracle budget exceeded.
"""
from __future__ import annotations

import argparse
import sys

from . import generators
from .bounds import BoundsReport, universal_lower_bound
from .design import (bounded_size_intervention_set, single_multinode_intervention,
                     sink_complement_interventions)
from .essential import (BudgetExceeded, fully_orients, i_essential_graph,
                        parse_interventions, write_interventions)
from .experiments import (Exp1Config, Exp1Row, Exp2Config, Exp2Row, run_exp1, run_exp2,
                          to_csv)
from .graph import Dag, GraphError, dag_from_order, mcs_order, parse_edge_list, write_edge_list
from .oracle import DEFAULT_ORACLE_BUDGET, optimal_atomic_size

EXIT_INPUT, EXIT_PARAMS, EXIT_BUDGET = 1, 2, 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from None


def _load_dag(path: str) -> Dag:
    try:
        return Dag.from_graph(parse_edge_list(_read(path)))
    except GraphError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_interventions(path: str, d: Dag):
    try:
        return parse_interventions(_read(path), d)
    except GraphError as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_bound(args, out):
    rep = universal_lower_bound(_load_dag(args.graph))
    out.write(BoundsReport.CSV_HEADER + "\n" + rep.csv_row() + "\n")


def cmd_design(args, out):
    d = _load_dag(args.graph)
    if args.mode == "atomic":
        res = sink_complement_interventions(d)
    elif args.mode == "multinode":
        res = single_multinode_intervention(d)
    else:
        if args.k is None:
            raise ValueError("--mode chunked needs --k")
        res = bounded_size_intervention_set(d, args.k)
    out.write(write_interventions(res.interventions, d))
    out.write(res.summary() + "\n")


def cmd_optimal(args, out):
    d = _load_dag(args.graph)
    if args.budget < 1:
        raise ValueError("--budget must be positive")
    res = optimal_atomic_size(d, args.budget)
    if res.budget_hit:
        out.write(f"budget_hit=true subsets_checked={res.subsets_checked}\n")
        raise BudgetExceeded(f"oracle budget of {args.budget} exhausted")
    witness = ",".join(d.names[v] for v in res.witness_set)
    out.write(f"optimal_size={res.optimal_size} witness={witness} "
              f"subsets_checked={res.subsets_checked} budget_hit=false\n")


def cmd_essential(args, out):
    d = _load_dag(args.graph)
    iv = _load_interventions(args.interventions, d)
    out.write(write_edge_list(i_essential_graph(d, iv).graph))


def cmd_verify(args, out):
    d = _load_dag(args.graph)
    iv = _load_interventions(args.interventions, d)
    out.write(("true" if fully_orients(d, iv) else "false") + "\n")


def cmd_exp1(args, out):
    cfg = Exp1Config(count=args.count, n_min=args.nmin, n_max=args.nmax,
                     p_min=args.pmin, p_max=args.pmax, seed=args.seed, budget=args.budget)
    out.write(to_csv(run_exp1(cfg), Exp1Row))


def cmd_exp2(args, out):
    try:
        sizes = tuple(int(s) for s in args.sizes.split(",") if s.strip())
    except ValueError:
        raise ValueError(f"bad --sizes {args.sizes!r}") from None
    cfg = Exp2Config(sizes=sizes, count=args.count, min_clique_size=args.min_clique,
                     max_clique_size=args.max_clique, seed=args.seed)
    out.write(to_csv(run_exp2(cfg), Exp2Row))


def cmd_gen(args, out):
    if args.family not in generators.FAMILIES:
        raise ValueError(f"unknown family {args.family!r}; choose from {sorted(generators.FAMILIES)}")
    fn, types = generators.FAMILIES[args.family]
    if len(args.params) != len(types):
        raise ValueError(f"{args.family} takes {len(types)} parameters")
    try:
        params = [t(x) for t, x in zip(types, args.params)]
    except ValueError:
        raise ValueError(f"bad parameters {args.params}") from None
    if args.family in generators.SEEDED:
        params.append(args.seed)
    g = fn(*params)
    if args.orient and g.undirected:
        g = dag_from_order(g, mcs_order(g))
    out.write(write_edge_list(g))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ivybound", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("bound", help="lower bounds as a CSV row")
    s.add_argument("graph")
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("design", help="construct a fully orienting intervention set")
    s.add_argument("graph")
    s.add_argument("--mode", choices=("atomic", "multinode", "chunked"), default="atomic")
    s.add_argument("--k", type=int)
    s.set_defaults(func=cmd_design)

    s = sub.add_parser("optimal", help="exact optimal atomic intervention size")
    s.add_argument("graph")
    s.add_argument("--budget", type=int, default=DEFAULT_ORACLE_BUDGET)
    s.set_defaults(func=cmd_optimal)

    for name, func, help_ in (("essential", cmd_essential, "print the interventional essential graph"),
                              ("verify", cmd_verify, "does the intervention set fully orient?")):
        s = sub.add_parser(name, help=help_)
        s.add_argument("graph")
        s.add_argument("interventions")
        s.set_defaults(func=func)

    s = sub.add_parser("exp1", help="lower bound vs optimum on random DAGs (CSV)")
    s.add_argument("--count", type=int, default=200)
    s.add_argument("--nmin", type=int, default=5)
    s.add_argument("--nmax", type=int, default=14)
    s.add_argument("--pmin", type=float, default=0.1)
    s.add_argument("--pmax", type=float, default=0.3)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--budget", type=int, default=DEFAULT_ORACLE_BUDGET)
    s.set_defaults(func=cmd_exp1)

    s = sub.add_parser("exp2", help="our bound vs the clique-number bound (CSV)")
    s.add_argument("--sizes", default="10,20,30")
    s.add_argument("--count", type=int, default=200)
    s.add_argument("--min-clique", type=int, default=2)
    s.add_argument("--max-clique", type=int, default=4)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_exp2)

    s = sub.add_parser("gen", help="emit a generated graph as an edge list")
    s.add_argument("family")
    s.add_argument("params", nargs="*")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--orient", action="store_true",
                   help="orient undirected families along an MCS order")
    s.set_defaults(func=cmd_gen)
    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
