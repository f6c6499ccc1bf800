"""Brute-force reference over a plain list, and a differential checker.

:class:`NaiveArray` mirrors the :class:`~partialsums.sumtree.PartialSumTree`
interface with linear scans, so the two can be driven by the same operation
stream and compared result by result.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, List

from .groups import INT64, AbelianGroup, OrderedGroup
from .sumtree import PartialSumTree


class NaiveArray:
    """Logical values ``X[0..M-1]`` with O(M) queries and O(1) updates."""

    def __init__(self, values=(), ctx: AbelianGroup = INT64):
        self.values_ = list(values)
        self.ctx = ctx

    def __len__(self):
        return len(self.values_)

    def values(self) -> List[Any]:
        return list(self.values_)

    def _check_index(self, k, upper):
        if not 0 <= k < upper:
            raise IndexError(f"index {k} outside [0, {upper})")

    def suffix_sum(self, k):
        self._check_index(k, len(self.values_) + 1)
        return self.ctx.fold_all(self.values_[k:])

    def total(self):
        return self.suffix_sum(0)

    def range_sum(self, j, k):
        m = len(self.values_)
        if not (0 <= j <= k + 1 <= m):
            raise IndexError(f"range [{j}, {k}] invalid for size {m}")
        return self.ctx.fold_all(self.values_[j : k + 1])

    def get(self, k):
        self._check_index(k, len(self.values_))
        return self.values_[k]

    def inc(self, k, delta):
        self._check_index(k, len(self.values_))
        self.values_[k] = self.ctx.combine(self.values_[k], delta)

    def set(self, k, x):
        self._check_index(k, len(self.values_))
        self.values_[k] = x

    def append(self, x):
        self.values_.append(x)

    def find(self, x):
        """Scan downward from the end; return the first (largest) bracketing k."""
        ctx = self.ctx
        if not isinstance(ctx, OrderedGroup):
            raise TypeError(f"find needs an ordered group, got {ctx.name}")
        if not self.values_:
            raise ValueError("find on an empty array")
        lt = ctx.less_than
        if lt(x, ctx.identity):
            raise ValueError(f"find target {x} below identity")
        acc = ctx.identity
        for k in range(len(self.values_) - 1, -1, -1):
            acc = ctx.combine(acc, self.values_[k])
            if lt(x, acc):
                return k
        raise ValueError(f"find target {x} not below total {acc}")


@dataclass
class DifferentialResult:
    sequences: int = 0
    operations: int = 0
    finds: int = 0
    mismatches: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


_OPS = ("inc", "set", "get", "suffix", "range", "find", "append")


def differential_check(
    max_m: int = 64,
    cases: int = 200,
    length: int = 100,
    seed: int = 0,
    lo: int = -50,
    hi: int = 50,
    ctx: OrderedGroup = INT64,
    max_report: int = 20,
) -> DifferentialResult:
    """Drive tree and oracle with identical random operation streams.

    For every initial size ``M`` in ``1..max_m`` run ``cases`` sequences of
    ``length`` operations.  Odd-numbered cases keep every value nonnegative
    and require ``find`` to agree exactly; even-numbered cases use signed
    values in ``[lo, hi]`` and only check that ``find`` brackets its target.
    """
    rng = random.Random(seed)
    res = DifferentialResult()
    rnd = rng.random

    # Workload generation only; float-scaled draws are faster than randint.
    def randint(a, b):
        return a + int(rnd() * (b - a + 1))

    def choice(seq):
        return seq[int(rnd() * len(seq))]

    def mismatch(msg):
        if len(res.mismatches) < max_report:
            res.mismatches.append(msg)
        else:
            res.mismatches[-1] = f"... (more) last: {msg}"

    for m in range(1, max_m + 1):
        for case in range(cases):
            nonneg = case % 2 == 1
            vlo = 0 if nonneg else lo
            xs = [randint(vlo, hi) for _ in range(m)]
            tree = PartialSumTree.build(xs, ctx)
            naive = NaiveArray(xs, ctx)
            res.sequences += 1
            tag = f"M={m} case={case}"
            try:
                for step in range(length):
                    op = choice(_OPS)
                    size = len(naive.values_)
                    k = randint(0, size - 1)
                    res.operations += 1
                    if op == "inc":
                        d = randint(vlo, hi)
                        if nonneg:
                            d = max(d - hi // 2, -naive.values_[k])
                        tree.inc(k, d)
                        naive.inc(k, d)
                    elif op == "set":
                        x = randint(vlo, hi)
                        tree.set(k, x)
                        naive.set(k, x)
                    elif op == "append":
                        x = randint(vlo, hi)
                        tree.append(x)
                        naive.append(x)
                    elif op == "get":
                        a, b = tree.get(k), naive.get(k)
                        if a != b:
                            mismatch(f"{tag} step={step} get({k}): {a} != {b}")
                    elif op == "suffix":
                        k = randint(0, size)
                        a, b = tree.suffix_sum(k), naive.suffix_sum(k)
                        if a != b:
                            mismatch(f"{tag} step={step} suffix({k}): {a} != {b}")
                    elif op == "range":
                        j = randint(0, size)
                        k = randint(j - 1, size - 1)
                        a, b = tree.range_sum(j, k), naive.range_sum(j, k)
                        if a != b:
                            mismatch(f"{tag} step={step} range({j},{k}): {a} != {b}")
                    else:
                        total = naive.total()
                        if total <= 0:
                            continue
                        x = randint(0, total - 1)
                        got = tree.find(x)
                        res.finds += 1
                        if nonneg:
                            want = naive.find(x)
                            if got != want:
                                mismatch(f"{tag} step={step} find({x}): {got} != {want}")
                        elif not (naive.suffix_sum(got + 1) <= x < naive.suffix_sum(got)):
                            mismatch(f"{tag} step={step} find({x}) = {got} breaks bracket")
            except (ArithmeticError, LookupError, ValueError) as exc:
                mismatch(f"{tag} step={step} {op}: tree raised {exc!r}")
                continue
            if tree.values() != naive.values_:
                mismatch(f"{tag} final values differ")
    return res
