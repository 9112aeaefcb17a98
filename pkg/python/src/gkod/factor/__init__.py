"""
Primality, factorization of 2^k - 1 and general naturals, Lucas-Lehmer, and
the persistent factor cache.
"""

from .primality import is_prime, small_primes
from .core import (
    cyclotomic_value,
    divisors,
    factor,
    factor_mersenne,
    mersenne_exponent,
    mobius,
    verify_factorization,
)
from .cache import (
    BUNDLED_CACHE_PATH,
    FactorCache,
    bundled_cache,
    cache_load,
    cache_store,
    format_cache,
    parse_cache,
)
from .mersenne import (
    MersenneSweep,
    lucas_lehmer,
    mersenne_exponents,
    mersenne_sweep,
)

__all__ = [
    "BUNDLED_CACHE_PATH",
    "FactorCache",
    "MersenneSweep",
    "bundled_cache",
    "cache_load",
    "cache_store",
    "cyclotomic_value",
    "divisors",
    "factor",
    "factor_mersenne",
    "format_cache",
    "is_prime",
    "lucas_lehmer",
    "mersenne_exponent",
    "mersenne_exponents",
    "mersenne_sweep",
    "mobius",
    "parse_cache",
    "small_primes",
    "verify_factorization",
]
