"""Multiplicative orders and primitive prime divisors of 2^k - 1."""

from .core import (
    ZSIGMONDY_EXCEPTIONS,
    PpdSet,
    mult_order_of_2,
    order_of_2_dividing,
    partition_law_holds,
    pi_of_mersenne,
    ppd_partition,
    ppd_set,
)

__all__ = [
    "PpdSet",
    "ZSIGMONDY_EXCEPTIONS",
    "mult_order_of_2",
    "order_of_2_dividing",
    "partition_law_holds",
    "pi_of_mersenne",
    "ppd_partition",
    "ppd_set",
]
