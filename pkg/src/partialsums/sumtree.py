"""Partial sums in logarithmic time over an implicit binary tree.

The structure keeps a flat array ``s[0..M-1]`` in which every cell holds
the sum of a window of the logical values ``X``::

    s[k] = X[k] + X[k+1] + ... + X[k + step(k) - 1]

where ``step(k)`` is the largest power of two dividing ``k`` (the capacity
``N`` for ``k = 0``) and values at positions ``>= M`` count as zero.  Cells
with an odd index hold a single value; the others hold sums of the values
below them, which makes every operation walk at most ``log2(N) + 1`` cells.

Sums run toward the *end* of the array: ``suffix_sum(k)`` is
``X[k] + ... + X[M-1]``.

>>> t = PartialSumTree.build([14, 8, 6, 3, 8, 1, 5, 3, 20, 7, 3, 4, 6, 2, 4, 5])
>>> t.cells[:4]
[99, 8, 9, 3]
>>> t.suffix_sum(3), t.get(12), t.find(69)
(71, 6, 3)

Concurrency: read operations never mutate the tree and may share it across
threads; ``inc``, ``set`` and ``append`` need exclusive access.  There is no
internal locking.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, List, Optional, Tuple

from .groups import INT64, AbelianGroup, OrderedGroup


def gcd_pow2(k: int, n: int) -> int:
    """Largest power of two dividing ``k``, or ``n`` when ``k == 0``.

    Computed as ``(n + k) & (n - k)``; ``n`` must be a power of two.

    >>> gcd_pow2(12, 16), gcd_pow2(0, 16), gcd_pow2(3, 16)
    (4, 16, 1)
    """
    if n < 1 or n & (n - 1):
        raise ValueError(f"capacity {n} is not a power of two")
    if not 0 <= k < n:
        raise IndexError(f"index {k} outside [0, {n})")
    return (n + k) & (n - k)


def capacity_for(m: int) -> int:
    """Smallest power of two >= m (1 for m <= 1)."""
    return 1 if m <= 1 else 1 << (m - 1).bit_length()


@dataclass
class OpTrace:
    """Loop-variable history of one operation, laid out like a hand trace.

    ``indices`` are the successive values of the loop index ``i`` and
    ``values`` those of the accumulator (``sm`` for sumN, ``x`` for get,
    ``pv`` for find).  ``picks`` records ``k`` in find: its start value and
    every reassignment.  ``steps`` counts executions of the loop body.

    Row conventions: sumN and get record the index that ended the loop, inc
    records only the cells it touched; accumulators start with their initial
    value and gain one entry per loop body.
    """

    op: str
    index_label: str = "i"
    value_label: str = ""
    indices: List[int] = field(default_factory=list)
    values: List[Any] = field(default_factory=list)
    picks: List[int] = field(default_factory=list)
    steps: int = 0
    result: Any = None

    def lines(self) -> List[str]:
        out = [f"{self.index_label}: " + " ".join(str(i) for i in self.indices)]
        if self.value_label:
            out.append(f"{self.value_label}: " + " ".join(str(v) for v in self.values))
        if self.picks:
            out.append("k: " + " ".join(str(k) for k in self.picks))
        if self.result is not None:
            out.append(f"result: {self.result}")
        return out


class PartialSumTree:
    """Mutable array of group elements with O(log N) partial sums.

    Parameters
    ----------
    cells : list
        Stored window sums ``s[0..M-1]``.  Normally produced by :meth:`build`.
    capacity : int
        Power of two ``N >= M``.
    ctx : AbelianGroup
        Group the elements live in; ``find`` needs an :class:`OrderedGroup`.
    """

    __slots__ = ("cells", "capacity", "ctx")

    def __init__(self, cells: List[Any], capacity: int, ctx: AbelianGroup = INT64):
        if capacity < 1 or capacity & (capacity - 1):
            raise ValueError(f"capacity {capacity} is not a power of two")
        if len(cells) > capacity:
            raise ValueError(f"{len(cells)} cells exceed capacity {capacity}")
        self.cells = cells
        self.capacity = capacity
        self.ctx = ctx

    @classmethod
    def build(
        cls,
        values: Iterable[Any],
        ctx: AbelianGroup = INT64,
        capacity: Optional[int] = None,
    ) -> "PartialSumTree":
        """Build in linear time from logical values.

        Each cell is a difference of two running prefix sums,
        ``s[k] = P[min(k + step(k), M)] - P[k]``.  With checked integers an
        ``OverflowError`` propagates if a prefix sum leaves the range.
        """
        values = list(values)
        m = len(values)
        n = capacity_for(m) if capacity is None else capacity
        if n < m or n & (n - 1):
            raise ValueError(f"capacity {n} must be a power of two >= {m}")
        combine, invert = ctx.combine, ctx.invert
        prefix = [ctx.identity]
        acc = ctx.identity
        for v in values:
            acc = combine(acc, v)
            prefix.append(acc)
        cells = []
        for k in range(m):
            end = k + ((n + k) & (n - k))
            cells.append(combine(prefix[end if end < m else m], invert(prefix[k])))
        return cls(cells, n, ctx)

    @classmethod
    def zeros(cls, m: int, ctx: AbelianGroup = INT64) -> "PartialSumTree":
        return cls([ctx.identity] * m, capacity_for(m), ctx)

    def __len__(self) -> int:
        return len(self.cells)

    def __repr__(self) -> str:
        return f"PartialSumTree(M={len(self.cells)}, N={self.capacity}, ctx={self.ctx.name})"

    def copy(self) -> "PartialSumTree":
        return type(self)(list(self.cells), self.capacity, self.ctx)

    # -- queries ---------------------------------------------------------

    def suffix_sum(self, k: int):
        """Return ``X[k] + ... + X[M-1]`` (identity for ``k == M``)."""
        s = self.cells
        m = len(s)
        if not 0 <= k <= m:
            raise IndexError(f"index {k} outside [0, {m}]")
        n = self.capacity
        combine = self.ctx.combine
        sm = self.ctx.identity
        i = k
        while i < m:
            sm = combine(sm, s[i])
            i += (n + i) & (n - i)
        return sm

    def total(self):
        return self.suffix_sum(0)

    def range_sum(self, j: int, k: int):
        """Return ``X[j] + ... + X[k]``; ``k == j - 1`` is the empty range."""
        m = len(self.cells)
        if not (0 <= j <= k + 1 <= m):
            raise IndexError(f"range [{j}, {k}] invalid for size {m}")
        return self.ctx.subtract(self.suffix_sum(j), self.suffix_sum(k + 1))

    def get(self, k: int):
        """Return the logical value ``X[k]``."""
        s = self.cells
        m = len(s)
        if not 0 <= k < m:
            raise IndexError(f"index {k} outside [0, {m})")
        n = self.capacity
        combine, invert = self.ctx.combine, self.ctx.invert
        step = (n + k) & (n - k)
        x = s[k]
        i = 1
        while i < step and k + i < m:
            x = combine(x, invert(s[k + i]))
            i *= 2
        return x

    def values(self) -> List[Any]:
        return [self.get(k) for k in range(len(self.cells))]

    def find(self, x) -> int:
        """Return ``k`` with ``suffix_sum(k+1) <= x < suffix_sum(k)``.

        Requires an ordered group and ``identity <= x < total()``.  The answer
        is unique when no value is negative; otherwise some bracketing index
        is returned.
        """
        lt = self._find_precheck(x)
        s = self.cells
        m = len(s)
        n = self.capacity
        combine, invert = self.ctx.combine, self.ctx.invert
        e = self.ctx.identity
        # Cells past the end read as identity.
        k = 0
        i = n // 2
        pv = s[i] if i < m else e
        while i > 0:
            if lt(x, pv):
                j = k + i * 3 // 2
                hi = s[j] if j < m else e
                j = k + i
                pv = combine(pv, combine(hi, invert(s[j] if j < m else e)))
                k += i
            else:
                j = k + i // 2
                pv = combine(pv, s[j] if j < m else e)
            i //= 2
        return k

    def _find_precheck(self, x):
        ctx = self.ctx
        if not isinstance(ctx, OrderedGroup):
            raise TypeError(f"find needs an ordered group, got {ctx.name}")
        if not self.cells:
            raise ValueError("find on an empty tree")
        lt = ctx.less_than
        if lt(x, ctx.identity) or not lt(x, self.total()):
            raise ValueError(f"find target {x} outside [identity, total)")
        return lt

    # -- updates ---------------------------------------------------------

    def inc(self, k: int, delta) -> None:
        """Add ``delta`` to ``X[k]``."""
        s = self.cells
        if not 0 <= k < len(s):
            raise IndexError(f"index {k} outside [0, {len(s)})")
        n = self.capacity
        combine = self.ctx.combine
        i = k
        try:
            # 0 - step(0) = -n ends the walk; needs signed arithmetic.
            while i >= 0:
                s[i] = combine(s[i], delta)
                i -= (n + i) & (n - i)
        except ArithmeticError:
            self._undo_inc(k, i, delta)
            raise

    def _undo_inc(self, k: int, stop: int, delta) -> None:
        # Revert cells k, ..., above `stop` so a failed inc leaves no trace.
        s, n = self.cells, self.capacity
        undo = self.ctx.invert(delta)
        i = k
        while i > stop:
            s[i] = self.ctx.combine(s[i], undo)
            i -= (n + i) & (n - i)

    def set(self, k: int, x) -> None:
        """Assign ``X[k] = x``."""
        self.inc(k, self.ctx.subtract(x, self.get(k)))

    def append(self, x) -> None:
        """Grow by one element, doubling the capacity when full."""
        self.grow()
        self.cells.append(self.ctx.identity)
        self.inc(len(self.cells) - 1, x)

    def grow(self) -> None:
        """Double the capacity if the next append would not fit.

        Stored cells keep their values: step sizes of ``0 < k < N`` do not
        depend on N, and cell 0's wider window only gains identity elements.
        """
        if len(self.cells) + 1 > self.capacity:
            self.capacity *= 2

    # -- traced variants -------------------------------------------------

    def suffix_sum_traced(self, k: int) -> Tuple[Any, OpTrace]:
        s = self.cells
        m = len(s)
        if not 0 <= k <= m:
            raise IndexError(f"index {k} outside [0, {m}]")
        n = self.capacity
        combine = self.ctx.combine
        tr = OpTrace("sumN", value_label="sm")
        sm = self.ctx.identity
        i = k
        tr.indices.append(i)
        tr.values.append(sm)
        while i < m:
            sm = combine(sm, s[i])
            i += (n + i) & (n - i)
            tr.steps += 1
            tr.indices.append(i)
            tr.values.append(sm)
        tr.result = sm
        return sm, tr

    def get_traced(self, k: int) -> Tuple[Any, OpTrace]:
        s = self.cells
        m = len(s)
        if not 0 <= k < m:
            raise IndexError(f"index {k} outside [0, {m})")
        n = self.capacity
        combine, invert = self.ctx.combine, self.ctx.invert
        tr = OpTrace("get", value_label="x")
        step = (n + k) & (n - k)
        x = s[k]
        i = 1
        tr.indices.append(i)
        tr.values.append(x)
        while i < step and k + i < m:
            x = combine(x, invert(s[k + i]))
            i *= 2
            tr.steps += 1
            tr.indices.append(i)
            tr.values.append(x)
        tr.result = x
        return x, tr

    def inc_traced(self, k: int, delta) -> OpTrace:
        s = self.cells
        if not 0 <= k < len(s):
            raise IndexError(f"index {k} outside [0, {len(s)})")
        n = self.capacity
        combine = self.ctx.combine
        tr = OpTrace("inc")
        i = k
        try:
            while i >= 0:
                s[i] = combine(s[i], delta)
                tr.indices.append(i)
                tr.steps += 1
                i -= (n + i) & (n - i)
        except ArithmeticError:
            self._undo_inc(k, i, delta)
            raise
        return tr

    def find_traced(self, x) -> Tuple[int, OpTrace]:
        lt = self._find_precheck(x)
        s = self.cells
        m = len(s)
        n = self.capacity
        combine, invert = self.ctx.combine, self.ctx.invert
        e = self.ctx.identity

        def cell(i):
            return s[i] if i < m else e

        tr = OpTrace("find", value_label="pv")
        k = 0
        i = n // 2
        pv = cell(i)
        tr.indices.append(i)
        tr.values.append(pv)
        tr.picks.append(k)
        while i > 0:
            if lt(x, pv):
                pv = combine(pv, combine(cell(k + i * 3 // 2), invert(cell(k + i))))
                k += i
                tr.picks.append(k)
            else:
                pv = combine(pv, cell(k + i // 2))
            i //= 2
            tr.steps += 1
            tr.indices.append(i)
            tr.values.append(pv)
        tr.result = k
        return k, tr
