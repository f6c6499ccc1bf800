"""Loop counters and timings for the tree against the naive array.

Counters come from the traced operations and are exact; wall times are
informational only.  For sumN, get and inc the counter is the trace length
(bounded by ``log2(N) + 1``); for find it is the number of loop bodies,
which is exactly ``log2(N)``.

Every query is run on both the tree and the oracle, so a bench doubles as a
large differential test (``mismatches`` must be 0).
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from .groups import INT64
from .oracle import NaiveArray
from .sumtree import PartialSumTree

DEFAULT_MIX = {"inc": 0.25, "sum": 0.25, "get": 0.25, "find": 0.25}


@dataclass
class BenchRow:
    op: str
    size: int
    count: int = 0
    iter_total: int = 0
    iter_max: int = 0
    tree_seconds: float = 0.0
    naive_seconds: float = 0.0
    mismatches: int = 0

    @property
    def bound(self) -> int:
        log = self.size.bit_length() - 1
        return log if self.op == "find" else log + 1

    @property
    def iter_mean(self) -> float:
        return self.iter_total / self.count if self.count else 0.0

    @property
    def within_bound(self) -> bool:
        if self.op == "find":
            return self.count == 0 or (self.iter_max == self.bound and self.iter_mean == self.bound)
        return self.iter_max <= self.bound


@dataclass
class BenchReport:
    seed: int
    mix: Dict[str, float]
    rows: List[BenchRow] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.within_bound and r.mismatches == 0 for r in self.rows)

    def lines(self) -> List[str]:
        mix = ",".join(f"{k}:{v:g}" for k, v in self.mix.items())
        out = []
        for r in self.rows:
            per = 1e6 / r.count if r.count else 0.0
            out.append(
                f"op={r.op} N={r.size} count={r.count} iter_mean={r.iter_mean:.3f} "
                f"iter_max={r.iter_max} bound={r.bound} tree_us={r.tree_seconds * per:.3f} "
                f"naive_us={r.naive_seconds * per:.3f} mismatches={r.mismatches} "
                f"seed={self.seed} mix={mix}"
            )
        return out


def run_bench(
    sizes: Sequence[int],
    ops: int,
    mix: Optional[Dict[str, float]] = None,
    seed: int = 0,
    max_weight: int = 100,
) -> BenchReport:
    """Run ``ops`` random operations per size on a full tree (M = N).

    Weights start uniform in ``[0, max_weight]`` and increments are
    nonnegative, so ``find`` always has a unique answer to compare.
    """
    mix = dict(DEFAULT_MIX if mix is None else mix)
    unknown = set(mix) - set(DEFAULT_MIX)
    if unknown:
        raise ValueError(f"unknown ops in mix: {sorted(unknown)}")
    for n in sizes:
        if n < 2 or n & (n - 1):
            raise ValueError(f"bench size {n} is not a power of two >= 2")

    report = BenchReport(seed, mix)
    names = list(mix)
    weights = [mix[k] for k in names]
    clock = time.perf_counter
    for n in sizes:
        rng = random.Random(f"{seed}:{n}")
        xs = [rng.randint(0, max_weight) for _ in range(n)]
        tree = PartialSumTree.build(xs, INT64)
        naive = NaiveArray(xs, INT64)
        rows = {op: BenchRow(op, n) for op in names}
        for op in rng.choices(names, weights, k=ops):
            row = rows[op]
            if op == "inc":
                k = rng.randrange(n)
                d = rng.randint(0, max_weight)
                t0 = clock()
                tree.inc(k, d)
                t1 = clock()
                naive.inc(k, d)
                t2 = clock()
                # identity delta: trace the walk without changing any cell
                steps = len(tree.inc_traced(k, 0).indices)
            elif op == "sum":
                k = rng.randrange(n + 1)
                t0 = clock()
                a = tree.suffix_sum(k)
                t1 = clock()
                b = naive.suffix_sum(k)
                t2 = clock()
                c, tr = tree.suffix_sum_traced(k)
                steps = len(tr.indices)
                row.mismatches += (a != b) + (c != b)
            elif op == "get":
                k = rng.randrange(n)
                t0 = clock()
                a = tree.get(k)
                t1 = clock()
                b = naive.get(k)
                t2 = clock()
                c, tr = tree.get_traced(k)
                steps = len(tr.indices)
                row.mismatches += (a != b) + (c != b)
            else:
                total = naive.total()
                if total <= 0:
                    continue
                x = rng.randrange(total)
                t0 = clock()
                a = tree.find(x)
                t1 = clock()
                b = naive.find(x)
                t2 = clock()
                c, tr = tree.find_traced(x)
                steps = tr.steps
                row.mismatches += (a != b) + (c != b)
            row.count += 1
            row.iter_total += steps
            row.iter_max = max(row.iter_max, steps)
            row.tree_seconds += t1 - t0
            row.naive_seconds += t2 - t1
        report.rows.extend(rows[op] for op in names)
    return report
