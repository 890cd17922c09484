#!/usr/bin/env python3
"""Experiment 2: universal lower bound against the clique-number bound.

    python3 scripts/run_exp2.py --sizes 10,20,30,40,50,60 --out exp2.csv
"""
import argparse
import sys

from ivybound.experiments import Exp2Config, Exp2Row, exp2_summary, run_exp2, to_csv


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="10,20,30")
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--min-clique", type=int, default=2)
    ap.add_argument("--max-clique", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="-")
    a = ap.parse_args()
    cfg = Exp2Config(sizes=tuple(int(x) for x in a.sizes.split(",")), count=a.count,
                     min_clique_size=a.min_clique, max_clique_size=a.max_clique, seed=a.seed)
    rows = run_exp2(cfg)
    text = to_csv(rows, Exp2Row)
    if a.out == "-":
        sys.stdout.write(text)
    else:
        with open(a.out, "w") as fh:
            fh.write(text)
    for n, v in exp2_summary(rows).items():
        print(f"n={n:>3} mean={v['mean']:.3f} max={v['max']:.3f} min={v['min']:.3f}", file=sys.stderr)


if __name__ == "__main__":
    main()
