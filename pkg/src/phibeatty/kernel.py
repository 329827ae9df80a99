"""Exact arithmetic for the golden-ratio floor map on the integers.

The central map is ``beatty_f(x) = floor(phi * x)`` with phi = (1+sqrt(5))/2.
Everything in this module is decided with integer arithmetic only: the floor
goes through an integer square root, and every order decision on fractional
parts ``phi*x mod 1`` reduces to the sign of a quadratic surd p + q*sqrt(5),
which is computable from the integer pair (p, q) alone.  No floating point
participates in any decision path.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "Ordering",
    "Surd",
    "isqrt",
    "surd_sign",
    "surd_sign_pq",
    "beatty_f",
    "fbar",
    "f_inverse",
    "fbar_inverse",
    "frac_compare",
    "star_less",
    "kronecker_witness",
    "refine",
]


class Ordering(enum.IntEnum):
    """Three-way comparison result."""

    LT = -1
    EQ = 0
    GT = 1


def isqrt(n: int) -> int:
    """Integer square root: the unique k with k*k <= n < (k+1)*(k+1)."""
    if n < 0:
        raise DomainError("isqrt requires a nonnegative argument")
    return math.isqrt(n)


def surd_sign_pq(p: int, q: int) -> int:
    """Sign of the real number p + q*sqrt(5), from the raw integer pair.

    Decided by comparing p*p against 5*q*q once the signs of p and q leave
    the answer open.  p*p == 5*q*q has no integer solution besides p = q = 0,
    so the mixed-sign branches never tie.
    """
    if p >= 0:
        if q >= 0:
            return 1 if (p or q) else 0
        return 1 if p * p > 5 * q * q else -1
    if q <= 0:
        return -1
    return 1 if 5 * q * q > p * p else -1


@dataclass(frozen=True)
class Surd:
    """The real number p + q*sqrt(5), carried exactly as an integer pair."""

    p: int
    q: int

    def sign(self) -> int:
        return surd_sign_pq(self.p, self.q)

    def __neg__(self) -> "Surd":
        return Surd(-self.p, -self.q)

    def __add__(self, other: "Surd") -> "Surd":
        return Surd(self.p + other.p, self.q + other.q)

    def __sub__(self, other: "Surd") -> "Surd":
        return Surd(self.p - other.p, self.q - other.q)


def surd_sign(s: Surd) -> int:
    """Sign of a Surd: -1, 0, or +1."""
    return surd_sign_pq(s.p, s.q)


def beatty_f(x: int) -> int:
    """floor(phi * x), exactly, for any integer x.

    For x >= 0 this is (x + isqrt(5 x^2)) // 2.  Negative arguments use the
    reflection floor(-a) = -floor(a) - 1, valid because phi*x is irrational
    for x != 0.
    """
    if x < 0:
        return -((-x + math.isqrt(5 * x * x)) // 2) - 1
    return (x + math.isqrt(5 * x * x)) // 2


def fbar(x: int) -> int:
    """x + beatty_f(x); equivalently floor(phi^2 * x)."""
    return x + beatty_f(x)


def _floor_sqrt5(y: int) -> int:
    # floor(y * sqrt(5)); 5*y*y is a perfect square only at y = 0
    if y >= 0:
        return math.isqrt(5 * y * y)
    return -math.isqrt(5 * y * y) - 1


def f_inverse(y: int) -> int | None:
    """The unique x with beatty_f(x) == y, or None if y is not in the range.

    A rational bound on y/phi yields at most two candidates; each is checked
    by applying the forward map, so correctness never rests on the estimate.
    """
    x0 = (_floor_sqrt5(y) - y) // 2
    if beatty_f(x0) == y:
        return x0
    if beatty_f(x0 + 1) == y:
        return x0 + 1
    return None


def fbar_inverse(y: int) -> int | None:
    """The unique x with fbar(x) == y, or None; candidate-then-verify."""
    x0 = (3 * y + _floor_sqrt5(-y)) // 2
    if fbar(x0) == y:
        return x0
    if fbar(x0 + 1) == y:
        return x0 + 1
    return None


def frac_compare(x: int, y: int) -> Ordering:
    """Exact order of the fractional parts of phi*x and phi*y.

    The difference of the two fractional parts equals
    ((x-y) - 2*(f(x)-f(y)) + (x-y)*sqrt(5)) / 2, so its sign is a surd sign.
    EQ occurs only at x == y.
    """
    if x == y:
        return Ordering.EQ
    d = x - y
    return Ordering(surd_sign_pq(d - 2 * (beatty_f(x) - beatty_f(y)), d))


def star_less(x: int, y: int) -> bool:
    """The definitional order: x != y and f(y-x) == f(y) - f(x).

    Evaluated literally from the defining formula.  Its agreement with
    ``frac_compare(x, y) == LT`` is a verified property of the structure,
    not an implementation shortcut taken here.
    """
    return x != y and beatty_f(y - x) == beatty_f(y) - beatty_f(x)


def kronecker_witness(x: int, y: int) -> int:
    """An integer whose fractional part lies strictly between those of x and y.

    Requires frac(x) < frac(y).  The witness is beatty_f(y - x) + y, and the
    strict betweenness frac(x) < frac(witness) < frac(y) always holds.
    """
    if frac_compare(x, y) is not Ordering.LT:
        raise DomainError(
            f"kronecker_witness requires frac({x}) < frac({y})"
        )
    return beatty_f(y - x) + y


def refine(x: int, y: int, k: int) -> list[int]:
    """Iterate the witness k times toward x: w1, w2, ..., wk.

    w1 = kronecker_witness(x, y) and each w_{i+1} = kronecker_witness(x, w_i);
    the fractional parts decrease strictly toward frac(x).  Requires k >= 1
    and frac(x) < frac(y).
    """
    if k < 1:
        raise DomainError("refine requires k >= 1")
    out = [kronecker_witness(x, y)]
    for _ in range(k - 1):
        # betweenness guarantees frac(x) < frac(out[-1]), so the precondition
        # of each further witness holds; skip re-deriving it
        cur = out[-1]
        out.append(beatty_f(cur - x) + cur)
    return out
