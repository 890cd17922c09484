"""Scaled reproductions of the two synthetic experiments, emitted as CSV.

Experiment 1 compares the universal lower bound with the exact optimum on
random Erdos-Renyi-derived DAGs. Experiment 2 compares it with the clique
number bound on DAGs whose cliques are kept small.
"""
from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields
from fractions import Fraction
from statistics import mean

from .bounds import universal_lower_bound
from .essential import BudgetExceeded
from .generators import bounded_clique_dag, er_dag_no_vstructures, rng
from .oracle import DEFAULT_ORACLE_BUDGET, optimal_atomic_size


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("IVYBOUND_THREADS", "1")))
    except ValueError:
        return 1


def _pmap(fn, items):
    items = list(items)
    workers = min(thread_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


@dataclass
class Exp1Config:
    count: int = 200
    n_min: int = 5
    n_max: int = 14
    p_min: float = 0.1
    p_max: float = 0.3
    seed: int = 0
    budget: int = DEFAULT_ORACLE_BUDGET

    def validate(self):
        if self.count < 0 or not 1 <= self.n_min <= self.n_max:
            raise ValueError("need count >= 0 and 1 <= nmin <= nmax")
        if not 0.0 <= self.p_min <= self.p_max <= 1.0:
            raise ValueError("need 0 <= pmin <= pmax <= 1")


@dataclass
class Exp2Config:
    sizes: tuple = (10, 20, 30)
    count: int = 200
    min_clique_size: int = 2
    max_clique_size: int = 4
    seed: int = 0

    def validate(self):
        if self.count < 0 or not self.sizes:
            raise ValueError("need count >= 0 and at least one size")
        for n in self.sizes:
            if not 2 <= self.min_clique_size <= self.max_clique_size <= n:
                raise ValueError(f"clique bounds do not fit n={n}")


@dataclass(frozen=True)
class Exp1Row:
    graph_id: int
    n: int
    p: str
    lower_bound: int
    optimal: int


@dataclass(frozen=True)
class Exp2Row:
    graph_id: int
    n: int
    our_bound: int
    prior_bound: int
    ratio: str


def exp1_instances(cfg: Exp1Config) -> list:
    """``(graph_id, n, p, graph_seed)``; ``p`` is rounded to 6 places before use."""
    g = rng(cfg.seed)
    out = []
    for gid in range(cfg.count):
        n = int(g.integers(cfg.n_min, cfg.n_max + 1))
        p = f"{g.uniform(cfg.p_min, cfg.p_max):.6f}"
        out.append((gid, n, p, int(g.integers(2 ** 63))))
    return out


def _exp1_one(job):
    (gid, n, p, seed), budget = job
    d = er_dag_no_vstructures(n, float(p), seed)
    res = optimal_atomic_size(d, budget)
    if res.budget_hit:
        raise BudgetExceeded(f"graph {gid}: oracle budget of {budget} exhausted")
    return Exp1Row(gid, n, p, universal_lower_bound(d).our_bound, res.optimal_size)


def run_exp1(cfg: Exp1Config) -> list:
    cfg.validate()
    return _pmap(_exp1_one, [(inst, cfg.budget) for inst in exp1_instances(cfg)])


def exp2_instances(cfg: Exp2Config) -> list:
    g = rng(cfg.seed)
    out = []
    gid = 0
    for n in cfg.sizes:
        for _ in range(cfg.count):
            out.append((gid, n, int(g.integers(2 ** 63))))
            gid += 1
    return out


def ratio(our: int, prior: int) -> Fraction:
    """``our / prior``; taken as 1 when both bounds are zero."""
    if prior == 0:
        if our == 0:
            return Fraction(1)
        raise ZeroDivisionError("prior bound is zero while ours is positive")
    return Fraction(our, prior)


def _exp2_one(job):
    (gid, n, seed), lo, hi = job
    rep = universal_lower_bound(bounded_clique_dag(n, lo, hi, seed))
    q = ratio(rep.our_bound, rep.prior_bound)
    return Exp2Row(gid, n, rep.our_bound, rep.prior_bound, f"{float(q):.6f}")


def run_exp2(cfg: Exp2Config) -> list:
    cfg.validate()
    jobs = [(inst, cfg.min_clique_size, cfg.max_clique_size) for inst in exp2_instances(cfg)]
    return _pmap(_exp2_one, jobs)


# -- CSV ---------------------------------------------------------------------

def to_csv(rows, row_type) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f.name for f in fields(row_type)])
    for row in rows:
        w.writerow(astuple(row))
    return buf.getvalue()


def from_csv(text: str, row_type) -> list:
    reader = csv.DictReader(io.StringIO(text))
    casts = {f.name: (int if f.type in ("int", int) else str) for f in fields(row_type)}
    if reader.fieldnames != list(casts):
        raise ValueError(f"unexpected CSV header {reader.fieldnames}")
    return [row_type(**{k: casts[k](v) for k, v in rec.items()}) for rec in reader]


# -- summaries ---------------------------------------------------------------

def exp1_summary(rows) -> dict:
    bracket_violations = [r.graph_id for r in rows
                          if not r.lower_bound <= r.optimal <= 2 * r.lower_bound]
    closer = sum(1 for r in rows if r.optimal - r.lower_bound <= 2 * r.lower_bound - r.optimal)
    return {
        "rows": len(rows),
        "bracket_violations": bracket_violations,
        "fraction_closer_to_lower": closer / len(rows) if rows else float("nan"),
    }


def exp2_summary(rows) -> dict:
    by_n: dict = {}
    for r in rows:
        by_n.setdefault(r.n, []).append(ratio(r.our_bound, r.prior_bound))
    return {n: {"mean": float(mean(qs)), "max": float(max(qs)), "min": float(min(qs))}
            for n, qs in sorted(by_n.items())}
