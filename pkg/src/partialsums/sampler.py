"""Weighted categorical sampling over weights that change between draws.

Event ``k`` is drawn with probability ``w[k] / sum(w)``: pick ``r``
uniformly in ``[0, total)`` and return the index whose suffix-sum bracket
contains it.  Updates and draws are both O(log n).

Randomness comes from numpy's PCG64 bit generator seeded with an explicit
integer, so a given seed and operation sequence always yield the same draws.
Integer draws use ``Generator.integers``, which rejects instead of taking a
modulus and therefore carries no bias.
"""
from __future__ import annotations

from typing import List, Sequence

import numpy as np

from .groups import INT64, OrderedGroup
from .sumtree import PartialSumTree

RNG_NAME = "numpy.PCG64"


class WeightedSampler:
    """Draw event indices in proportion to mutable nonnegative weights.

    Parameters
    ----------
    weights : sequence of int
        Initial weights, all ``>= 0``.
    seed : int
        Seed for the PCG64 generator (any nonnegative int; 64-bit recommended).
    ctx : OrderedGroup
        Element context.  Integer contexts give exact probabilities; a float
        context switches to an approximate mode where ``r`` is a scaled
        uniform double.
    """

    def __init__(self, weights: Sequence, seed: int = 0, ctx: OrderedGroup = INT64):
        weights = list(weights)
        for k, w in enumerate(weights):
            if ctx.less_than(w, ctx.identity):
                raise ValueError(f"weight {k} is negative: {w}")
        self.tree = PartialSumTree.build(weights, ctx)
        self.seed = seed
        self.rng = np.random.Generator(np.random.PCG64(seed))

    def __len__(self):
        return len(self.tree)

    @property
    def ctx(self) -> OrderedGroup:
        return self.tree.ctx

    def total(self):
        return self.tree.total()

    def weight(self, k: int):
        return self.tree.get(k)

    def select(self, r) -> int:
        """Map a point ``r`` in ``[0, total)`` to its event."""
        return self.tree.find(r)

    def _uniform(self, total, size=None):
        if self.ctx.exact:
            return self.rng.integers(0, total, size=size, dtype=np.int64)
        return self.rng.random(size) * total

    def _check_drawable(self):
        total = self.total()
        if not self.ctx.less_than(self.ctx.identity, total):
            raise ValueError("cannot draw: total weight is zero")
        return total

    def draw(self) -> int:
        total = self._check_drawable()
        r = self._uniform(total)
        if not self.ctx.exact and r >= total:
            # rounding can push a scaled double up to the total
            r = np.nextafter(total, 0.0)
        return self.tree.find(int(r) if self.ctx.exact else float(r))

    def update_weight(self, k: int, w) -> None:
        if self.ctx.less_than(w, self.ctx.identity):
            raise ValueError(f"weight must be nonnegative, got {w}")
        self.tree.set(k, w)

    def increment_weight(self, k: int, d) -> None:
        new = self.ctx.combine(self.tree.get(k), d)
        if self.ctx.less_than(new, self.ctx.identity):
            raise ValueError(f"weight {k} would become negative ({new})")
        self.tree.inc(k, d)

    def histogram(self, n: int) -> List[int]:
        """Tally ``n`` draws.  Draws are generated in one batch, so the
        stream differs from ``n`` separate :meth:`draw` calls (but is just as
        deterministic)."""
        total = self._check_drawable()
        counts = [0] * len(self.tree)
        if n <= 0:
            return counts
        rs = self._uniform(total, size=n)
        if not self.ctx.exact:
            rs = np.minimum(rs, np.nextafter(total, 0.0))
        find = self.tree.find
        for r in rs.tolist():
            counts[find(r)] += 1
        return counts
