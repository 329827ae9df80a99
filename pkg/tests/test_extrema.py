"""Interval extrema: both routes against independent high-precision scans."""

import random

import pytest

import oracle
from phibeatty.errors import DomainError
from phibeatty.extrema import (
    ExtremumKind,
    ExtremumMethod,
    Interval,
    arg_max_frac,
    arg_min_frac,
    brute_arg_max_frac,
    brute_arg_min_frac,
    constrained_max,
    constrained_min,
    exists_in_box,
    extremum,
    fast_argmax_positive,
    fast_argmin_positive,
)
from phibeatty.kernel import frac_compare


def filtered_min(lo, hi, c):
    cands = [t for t in range(lo + 1, hi) if oracle.frac(t) > oracle.frac(c)]
    return min(cands, key=oracle.frac) if cands else None


def filtered_max(lo, hi, d):
    cands = [t for t in range(lo + 1, hi) if oracle.frac(t) < oracle.frac(d)]
    return max(cands, key=oracle.frac) if cands else None


class TestInterval:
    def test_interior(self):
        assert Interval(4, 12).interior_size() == 7
        assert Interval(4, 6).interior_size() == 1
        assert Interval(4, 5).interior_size() == 0
        assert Interval(4, 12).contains_interior(5)
        assert not Interval(4, 12).contains_interior(4)

    def test_empty_interior_rejected(self):
        for fn in (arg_min_frac, arg_max_frac, brute_arg_min_frac, brute_arg_max_frac):
            with pytest.raises(DomainError):
                fn(Interval(4, 5))
        with pytest.raises(DomainError):
            constrained_min(Interval(3, 3), 1)
        with pytest.raises(DomainError):
            exists_in_box(Interval(0, 1), 1, 2)


class TestArgMin:
    def test_examples(self):
        assert arg_min_frac(Interval(4, 12)) == 5
        assert arg_min_frac(Interval(-3, 3)) == 0
        assert arg_min_frac(Interval(6, 12)) == 10

    def test_matches_oracle_all_dispatch_paths(self):
        # signed range covers the zero, positive, negative and split paths;
        # brute_width=0 forces the fast routes even on narrow interiors
        for lo in range(-50, 49):
            for hi in range(lo + 2, 51):
                want = oracle.argmin_frac(lo, hi)
                assert arg_min_frac(Interval(lo, hi)) == want
                assert arg_min_frac(Interval(lo, hi), 0) == want

    def test_wide_spans_use_fast_route(self):
        lo, hi = 10**9, 10**9 + 3000
        want = brute_arg_min_frac(Interval(lo, hi))
        assert arg_min_frac(Interval(lo, hi)) == want


class TestArgMax:
    def test_examples(self):
        assert arg_max_frac(Interval(4, 12)) == 8
        assert arg_max_frac(Interval(0, 4)) == 3
        assert arg_max_frac(Interval(-13, -4)) == -5

    def test_matches_oracle_all_dispatch_paths(self):
        for lo in range(-50, 49):
            for hi in range(lo + 2, 51):
                want = oracle.argmax_frac(lo, hi)
                assert arg_max_frac(Interval(lo, hi)) == want
                assert arg_max_frac(Interval(lo, hi), 0) == want

    def test_sole_interior_zero(self):
        assert arg_max_frac(Interval(-1, 1)) == 0
        assert arg_max_frac(Interval(-1, 1), 0) == 0


class TestFastRoutes:
    def test_examples(self):
        assert fast_argmin_positive(4, 12) == 5
        assert fast_argmin_positive(6, 12) == 10
        assert fast_argmin_positive(4, 14) == 13

    def test_preconditions(self):
        with pytest.raises(DomainError):
            fast_argmin_positive(0, 9)
        with pytest.raises(DomainError):
            fast_argmin_positive(-2, 9)
        with pytest.raises(DomainError):
            fast_argmin_positive(4, 5)
        with pytest.raises(DomainError):
            fast_argmax_positive(0, 9)

    def test_boundary_stays_interior(self):
        # the decomposition runs against the inclusive inner bound, so an
        # even-index Fibonacci at the exclusive endpoint never leaks out
        assert fast_argmin_positive(4, 13) == 5
        assert fast_argmin_positive(4, 14) == 13

    def test_exhaustive_against_oracle(self):
        for a in range(1, 90):
            for b in range(a + 2, 92):
                assert fast_argmin_positive(a, b) == oracle.argmin_frac(a, b)
                assert fast_argmax_positive(a, b) == oracle.argmax_frac(a, b)

    def test_random_wide_windows(self):
        rng = random.Random(31)
        for _ in range(60):
            lo = rng.randint(1, 10**15)
            hi = lo + rng.randint(2, 400)
            want_min = brute_arg_min_frac(Interval(lo, hi))
            want_max = brute_arg_max_frac(Interval(lo, hi))
            assert fast_argmin_positive(lo, hi) == want_min
            assert fast_argmax_positive(lo, hi) == want_max


class TestConstrained:
    def test_min_examples(self):
        assert constrained_min(Interval(4, 12), 2) == 7
        assert constrained_min(Interval(4, 12), 8) is None
        assert constrained_min(Interval(-3, 3), 0) == 2

    def test_max_examples(self):
        assert constrained_max(Interval(4, 12), 3) == 11
        assert constrained_max(Interval(4, 12), 5) is None
        assert constrained_max(Interval(0, 4), 1) == 2

    def test_threshold_inside_interval_is_not_returned(self):
        # c interior: the translated zero (t == c) must never be the answer
        for c in range(-12, 13):
            got = constrained_min(Interval(-15, 15), c)
            assert got == filtered_min(-15, 15, c)
            got = constrained_max(Interval(-15, 15), c)
            assert got == filtered_max(-15, 15, c)

    def test_matches_filtered_oracle(self):
        for lo in range(-25, 24):
            for hi in range(lo + 2, 26):
                for c in range(-8, 9):
                    assert constrained_min(Interval(lo, hi), c) == filtered_min(lo, hi, c)
                    assert constrained_max(Interval(lo, hi), c) == filtered_max(lo, hi, c)


class TestExistsInBox:
    def test_examples(self):
        assert exists_in_box(Interval(4, 12), 2, 1) is True
        assert exists_in_box(Interval(4, 12), 8, 1) is False
        assert exists_in_box(Interval(4, 12), 3, 3) is False

    def test_matches_filtered_any(self):
        for lo in range(-15, 14, 3):
            for hi in range(lo + 2, 16, 2):
                for c in range(-6, 7, 2):
                    for d in range(-6, 7, 3):
                        want = any(
                            oracle.frac(c) < oracle.frac(t) < oracle.frac(d)
                            for t in range(lo + 1, hi)
                        )
                        assert exists_in_box(Interval(lo, hi), c, d) == want


class TestExtremumResult:
    def test_route_reporting(self):
        narrow = extremum(Interval(4, 12), ExtremumKind.MIN)
        assert narrow.point == 5
        assert narrow.method is ExtremumMethod.BRUTE
        wide = extremum(Interval(1, 200), ExtremumKind.MAX)
        assert wide.method is ExtremumMethod.FAST
        assert wide.point == oracle.argmax_frac(1, 200)
        assert wide.kind is ExtremumKind.MAX

    def test_translation_law_samples(self):
        # frac(t - c) = frac(t) - frac(c) whenever frac(t) > frac(c)
        rng = random.Random(9)
        for _ in range(500):
            t, c = rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)
            if t != c and frac_compare(t, c) > 0:
                from phibeatty.kernel import beatty_f

                assert beatty_f(t - c) == beatty_f(t) - beatty_f(c)
