"""Pollard rho with Brent's cycle detection."""

import logging
import math
from typing import Optional

logger = logging.getLogger(__name__)

_BATCH = 128


def brent_split(n: int, c: int, budget: int) -> Optional[int]:
    """
    Try to find a nontrivial divisor of odd composite n using x -> x^2 + c.

    Returns None when the walk exceeds `budget` iterations or collapses to
    n itself. The starting point is fixed, so the result depends only on
    (n, c, budget).
    """
    y, r, q, g = 2, 1, 1, 1
    x = ys = y
    iterations = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(_BATCH, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += _BATCH
        iterations += r
        r *= 2
        if g == 1 and iterations > budget:
            return None
    if g == n:
        # Backtrack one step at a time from the last saved point.
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    if g == n:
        logger.debug(f"rho collapsed on {n} with c={c}")
        return None
    return g
