"""Exact argmin/argmax of fractional parts of phi*t over open integer intervals.

Two routes exist for every query: a direct interior scan (the oracle, also
used outright for narrow intervals) and a fast Fibonacci-decomposition route
whose cost is logarithmic in the endpoints.  The minimum route peels
even-index Fibonacci floors off both bounds; the maximum route is its
odd-index mirror.  Intervals touching zero or lying in the negatives reduce
to these through frac(-t) = 1 - frac(t).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DomainError
from .fib import fibfloor, g_func
from .kernel import Ordering, beatty_f, frac_compare, surd_sign_pq

__all__ = [
    "BRUTE_WIDTH",
    "Interval",
    "ExtremumKind",
    "ExtremumMethod",
    "ExtremumResult",
    "arg_min_frac",
    "arg_max_frac",
    "brute_arg_min_frac",
    "brute_arg_max_frac",
    "fast_argmin_positive",
    "fast_argmax_positive",
    "constrained_min",
    "constrained_max",
    "exists_in_box",
    "extremum",
]

# interiors at most this wide are scanned directly
BRUTE_WIDTH = 64


@dataclass(frozen=True)
class Interval:
    """Open integer interval (lo, hi); its interior is lo+1 .. hi-1."""

    lo: int
    hi: int

    def interior_size(self) -> int:
        return max(self.hi - self.lo - 1, 0)

    def contains_interior(self, t: int) -> bool:
        return self.lo < t < self.hi


class ExtremumKind(enum.Enum):
    MIN = "min"
    MAX = "max"


class ExtremumMethod(enum.Enum):
    BRUTE = "brute"
    FAST = "fast"


@dataclass(frozen=True)
class ExtremumResult:
    point: int
    kind: ExtremumKind
    method: ExtremumMethod


def _validate(iv: Interval) -> None:
    if iv.hi - iv.lo < 2:
        raise DomainError(f"interval ({iv.lo}, {iv.hi}) has empty interior")


def _brute_best(lo: int, hi: int, want_max: bool) -> int:
    # 2*frac(phi*t) equals (t - 2*f(t)) + t*sqrt(5); order by surd sign
    best = lo + 1
    bp = best - 2 * beatty_f(best)
    for t in range(lo + 2, hi):
        p = t - 2 * beatty_f(t)
        s = surd_sign_pq(p - bp, t - best)
        if (s > 0) if want_max else (s < 0):
            best, bp = t, p
    return best


def brute_arg_min_frac(iv: Interval) -> int:
    """Interior scan for the minimum; the oracle the fast route is held to."""
    _validate(iv)
    return _brute_best(iv.lo, iv.hi, want_max=False)


def brute_arg_max_frac(iv: Interval) -> int:
    """Interior scan for the maximum."""
    _validate(iv)
    return _brute_best(iv.lo, iv.hi, want_max=True)


def _fast_min_pos(lo: int, hi: int) -> int:
    # argmin over (lo, hi) with lo >= 0: peel equal even-index floors off both
    # bounds (inclusive upper hi-1, so the result stays inside the open interval)
    a, b = lo, hi - 1
    shift = 0
    while True:
        fb = fibfloor(b)
        if fb > a:
            return fb + shift
        fa = fibfloor(a)  # equals fb: both bounds sit in the same even-floor window
        shift += fa
        a -= fa
        b -= fb


def _fast_max_pos(lo: int, hi: int) -> int:
    # odd-index mirror of _fast_min_pos
    a, b = lo, hi - 1
    shift = 0
    while True:
        gb = g_func(b)
        if gb > a:
            return gb + shift
        ga = g_func(a)
        shift += ga
        a -= ga
        b -= gb


def fast_argmin_positive(a: int, b: int) -> int:
    """Fibonacci-decomposition argmin over (a, b) for 0 < a, b - a >= 2."""
    if a <= 0:
        raise DomainError("fast_argmin_positive requires 0 < a")
    if b - a < 2:
        raise DomainError(f"interval ({a}, {b}) has empty interior")
    return _fast_min_pos(a, b)


def fast_argmax_positive(a: int, b: int) -> int:
    """Odd-index mirror of fast_argmin_positive: argmax over (a, b)."""
    if a <= 0:
        raise DomainError("fast_argmax_positive requires 0 < a")
    if b - a < 2:
        raise DomainError(f"interval ({a}, {b}) has empty interior")
    return _fast_max_pos(a, b)


def arg_min_frac(iv: Interval, brute_width: int = BRUTE_WIDTH) -> int:
    """The unique interior point minimizing the fractional part of phi*t.

    Dispatch: an interior zero wins outright (its fractional part is 0);
    narrow interiors are scanned; positive intervals take the fast
    decomposition; negative intervals reflect to a maximum query.
    """
    _validate(iv)
    lo, hi = iv.lo, iv.hi
    if lo < 0 < hi:
        return 0
    if hi - lo - 1 <= brute_width:
        return _brute_best(lo, hi, want_max=False)
    if lo >= 0:
        return _fast_min_pos(lo, hi)
    return -arg_max_frac(Interval(-hi, -lo), brute_width)


def arg_max_frac(iv: Interval, brute_width: int = BRUTE_WIDTH) -> int:
    """The unique interior point maximizing the fractional part of phi*t.

    Zero never wins a maximum unless it is the only interior point, so
    intervals straddling zero split into their negative and positive sides.
    """
    _validate(iv)
    lo, hi = iv.lo, iv.hi
    if hi - lo - 1 <= brute_width:
        return _brute_best(lo, hi, want_max=True)
    if lo >= 0:
        return _fast_max_pos(lo, hi)
    if hi <= 0:
        return -arg_min_frac(Interval(-hi, -lo), brute_width)
    return _best_excluding_zero(lo, hi, want_max=True, brute_width=brute_width)


def _best_excluding_zero(lo: int, hi: int, want_max: bool, brute_width: int) -> int:
    # extremum over the interior of (lo, hi) minus {0}; lo < 0 < hi
    candidates = []
    if -lo >= 2:
        side = Interval(lo, 0)
        candidates.append(
            arg_max_frac(side, brute_width) if want_max else arg_min_frac(side, brute_width)
        )
    if hi >= 2:
        side = Interval(0, hi)
        candidates.append(
            arg_max_frac(side, brute_width) if want_max else arg_min_frac(side, brute_width)
        )
    if not candidates:
        return 0  # interior is exactly {0}
    if len(candidates) == 1:
        return candidates[0]
    a, b = candidates
    cmp = frac_compare(a, b)
    if want_max:
        return a if cmp is Ordering.GT else b
    return a if cmp is Ordering.LT else b


def constrained_min(iv: Interval, c: int, brute_width: int = BRUTE_WIDTH) -> int | None:
    """Interior point of least fractional part among those exceeding frac(c).

    None when no interior fractional part exceeds frac(c).  Otherwise the
    answer is c plus the extremum of the translated interval (lo-c, hi-c):
    subtracting c turns every admissible point's fractional part into
    frac(t) - frac(c) and every inadmissible one into frac(t) - frac(c) + 1,
    so the translated minimum picks the admissible point closest above c.
    The translated zero (t == c itself) is never admissible and is excluded.
    """
    _validate(iv)
    top = arg_max_frac(iv, brute_width)
    if frac_compare(top, c) is not Ordering.GT:
        return None
    lo, hi = iv.lo - c, iv.hi - c
    if lo < 0 < hi:
        return c + _best_excluding_zero(lo, hi, want_max=False, brute_width=brute_width)
    return c + arg_min_frac(Interval(lo, hi), brute_width)


def constrained_max(iv: Interval, d: int, brute_width: int = BRUTE_WIDTH) -> int | None:
    """Interior point of greatest fractional part among those below frac(d).

    None when no interior fractional part is below frac(d); otherwise
    d plus the translated maximum, with the translated zero excluded.
    """
    _validate(iv)
    bottom = arg_min_frac(iv, brute_width)
    if frac_compare(bottom, d) is not Ordering.LT:
        return None
    lo, hi = iv.lo - d, iv.hi - d
    if lo < 0 < hi:
        return d + _best_excluding_zero(lo, hi, want_max=True, brute_width=brute_width)
    return d + arg_max_frac(Interval(lo, hi), brute_width)


def exists_in_box(iv: Interval, c: int, d: int, brute_width: int = BRUTE_WIDTH) -> bool:
    """Is there an interior point with frac(c) < frac(t) < frac(d)?

    Decided from the constrained minimum alone: the least fractional part
    above frac(c) either clears frac(d) or nothing does.
    """
    point = constrained_min(iv, c, brute_width)
    return point is not None and frac_compare(point, d) is Ordering.LT


def extremum(
    iv: Interval,
    kind: ExtremumKind,
    brute_width: int = BRUTE_WIDTH,
) -> ExtremumResult:
    """arg_min_frac / arg_max_frac with the route taken attached."""
    _validate(iv)
    method = (
        ExtremumMethod.BRUTE
        if iv.hi - iv.lo - 1 <= brute_width
        else ExtremumMethod.FAST
    )
    if kind is ExtremumKind.MIN:
        point = arg_min_frac(iv, brute_width)
    else:
        point = arg_max_frac(iv, brute_width)
    return ExtremumResult(point=point, kind=kind, method=method)
