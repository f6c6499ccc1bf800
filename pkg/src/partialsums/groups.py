"""Algebraic contexts the partial-sum tree is generic over.

A context bundles an identity element with ``combine`` and ``invert``.
The tree only ever touches elements through these callables (plus
``less_than`` for searching), so anything forming an abelian group can be
stored: plain integers, fixed-width integers with overflow checks, vectors
of counts, and so on.

>>> INT64.combine(3, INT64.invert(5))
-2
>>> check_group_laws(INT64, [-3, 0, 7]).ok
True
"""
from __future__ import annotations

import itertools
import operator
from dataclasses import dataclass
from functools import reduce
from typing import Any, Callable, Iterable, Optional, Sequence


@dataclass(frozen=True)
class AbelianGroup:
    """Identity / combine / invert contract.

    ``fold`` is an optional fast path for combining a whole sequence; it must
    agree with a left fold of ``combine`` starting at ``identity``.  ``exact``
    is False for contexts whose arithmetic rounds (floats).
    """

    name: str
    identity: Any
    combine: Callable[[Any, Any], Any]
    invert: Callable[[Any], Any]
    fold: Optional[Callable[[Iterable[Any]], Any]] = None
    exact: bool = True

    def subtract(self, a, b):
        return self.combine(a, self.invert(b))

    def fold_all(self, values: Iterable[Any]):
        if self.fold is not None:
            return self.fold(values)
        return reduce(self.combine, values, self.identity)


@dataclass(frozen=True)
class OrderedGroup(AbelianGroup):
    """Abelian group with a translation-invariant total order (needed by ``find``)."""

    less_than: Callable[[Any, Any], bool] = operator.lt


def checked_integers(bits: int = 64) -> OrderedGroup:
    """Signed ``bits``-wide integers that raise ``OverflowError`` instead of wrapping."""
    lo = -(1 << (bits - 1))
    hi = (1 << (bits - 1)) - 1

    def combine(a, b):
        r = a + b
        if r > hi or r < lo:
            raise OverflowError(f"int{bits} overflow: {a} + {b}")
        return r

    def invert(a):
        if a == lo:
            raise OverflowError(f"int{bits} overflow: -({a})")
        return -a

    def fold(values):
        r = sum(values)
        if r > hi or r < lo:
            raise OverflowError(f"int{bits} overflow in fold")
        return r

    return OrderedGroup(f"int{bits}", 0, combine, invert, fold=fold)


# Unbounded Python ints: a true ordered group, no overflow possible.
INTEGERS = OrderedGroup("integers", 0, operator.add, operator.neg, fold=sum)

# The reference instantiation used by the CLI and the sampler.
INT64 = checked_integers(64)

# Not a group under rounding (addition is not associative); approximate use only.
FLOAT64 = OrderedGroup(
    "float64", 0.0, operator.add, operator.neg, fold=sum, exact=False
)


@dataclass(frozen=True)
class LawReport:
    """Outcome of :func:`check_group_laws`.  ``law`` is None on success."""

    law: Optional[str] = None
    witness: tuple = ()
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.law is None


def check_group_laws(ctx: AbelianGroup, samples: Sequence[Any]) -> LawReport:
    """Search ``samples`` for a violation of the group (and order) laws.

    Laws are checked in the order associativity, identity, inverse,
    commutativity, then for ordered contexts totality, transitivity and
    translation invariance.  The first violation found is returned with the
    witnessing elements; violations are data, never exceptions.
    """
    if not samples:
        raise ValueError("samples must be nonempty")
    samples = list(samples)
    e = ctx.identity
    op = ctx.combine

    try:
        for a, b, c in itertools.product(samples, repeat=3):
            left = op(op(a, b), c)
            right = op(a, op(b, c))
            if left != right:
                return LawReport(
                    "associativity", (a, b, c), f"({a}+{b})+{c} = {left} != {right}"
                )
        for a in samples:
            if not (op(a, e) == a and op(e, a) == a):
                return LawReport("identity", (a,), f"{a} + e != {a}")
        for a in samples:
            if op(a, ctx.invert(a)) != e:
                return LawReport("inverse", (a,), f"{a} + (-{a}) != e")
        for a, b in itertools.product(samples, repeat=2):
            if op(a, b) != op(b, a):
                return LawReport("commutativity", (a, b))
    except ArithmeticError as exc:
        return LawReport("closure", (), str(exc))

    if isinstance(ctx, OrderedGroup):
        lt = ctx.less_than
        for a, b in itertools.product(samples, repeat=2):
            if (lt(a, b) + lt(b, a) + (a == b)) != 1:
                return LawReport("totality", (a, b))
        for a, b, c in itertools.product(samples, repeat=3):
            if lt(a, b) and lt(b, c) and not lt(a, c):
                return LawReport("transitivity", (a, b, c))
        try:
            for a, b, c in itertools.product(samples, repeat=3):
                if lt(a, b) and not lt(op(a, c), op(b, c)):
                    return LawReport("translation invariance", (a, b, c))
        except ArithmeticError as exc:
            return LawReport("closure", (), str(exc))
    return LawReport()
