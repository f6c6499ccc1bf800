"""Maintain all partial sums of a mutable array in O(log N) per operation."""
from .groups import (
    FLOAT64,
    INT64,
    INTEGERS,
    AbelianGroup,
    LawReport,
    OrderedGroup,
    check_group_laws,
    checked_integers,
)
from .oracle import NaiveArray, differential_check
from .sampler import WeightedSampler
from .sumtree import OpTrace, PartialSumTree, capacity_for, gcd_pow2

__all__ = [
    "AbelianGroup",
    "FLOAT64",
    "INT64",
    "INTEGERS",
    "LawReport",
    "NaiveArray",
    "OpTrace",
    "OrderedGroup",
    "PartialSumTree",
    "WeightedSampler",
    "capacity_for",
    "check_group_laws",
    "checked_integers",
    "differential_check",
    "gcd_pow2",
]
