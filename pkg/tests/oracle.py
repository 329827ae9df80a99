"""Test-only oracles, independent of the package's arithmetic.

High-precision golden-ratio values come from mpmath at 80 significant
digits, which pins every floor and every fractional-part comparison for
inputs up to about 1e30 with margin to spare; tests on 256-bit inputs use
the exact convergent sandwich instead (see test_acceptance).
"""

from __future__ import annotations

import mpmath as mp

mp.mp.dps = 80

PHI = (1 + mp.sqrt(5)) / 2


def floor_phi(x: int):
    """floor(phi * x) by high-precision arithmetic (desk-scale x only)."""
    return int(mp.floor(PHI * x))


def frac(x: int):
    """Fractional part of phi * x as an mpf in [0, 1)."""
    return PHI * x - floor_phi(x)


def argmin_frac(lo: int, hi: int) -> int:
    """Direct scan over the interior of (lo, hi) for the smallest frac."""
    return min(range(lo + 1, hi), key=frac)


def argmax_frac(lo: int, hi: int) -> int:
    return max(range(lo + 1, hi), key=frac)


def fib_list(limit: int) -> list[int]:
    """Fibonacci values 1, 1, 2, 3, ... until the last exceeds limit."""
    vals = [1, 1]
    while vals[-1] <= limit:
        vals.append(vals[-2] + vals[-1])
    return vals
