"""Kernel operations against high-precision and combinatorial oracles."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from phibeatty.errors import DomainError
from phibeatty.kernel import (
    Ordering,
    Surd,
    beatty_f,
    f_inverse,
    fbar,
    fbar_inverse,
    frac_compare,
    isqrt,
    kronecker_witness,
    refine,
    star_less,
    surd_sign,
    surd_sign_pq,
)


class TestIsqrt:
    def test_examples(self):
        assert isqrt(0) == 0
        assert isqrt(24) == 4
        assert isqrt(10**40) == 10**20

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            isqrt(-1)

    @given(st.integers(min_value=0, max_value=10**60))
    def test_root_bracket(self, n):
        k = isqrt(n)
        assert k * k <= n < (k + 1) * (k + 1)


class TestSurdSign:
    def test_examples(self):
        assert surd_sign(Surd(0, 0)) == 0
        assert surd_sign(Surd(-2, 1)) == 1
        assert surd_sign(Surd(9, -4)) == 1

    def test_axis_cases(self):
        assert surd_sign_pq(3, 0) == 1
        assert surd_sign_pq(-3, 0) == -1
        assert surd_sign_pq(0, 2) == 1
        assert surd_sign_pq(0, -2) == -1

    @given(
        st.integers(min_value=-10**6, max_value=10**6),
        st.integers(min_value=-10**6, max_value=10**6),
    )
    def test_matches_high_precision(self, p, q):
        value = p + q * oracle.mp.sqrt(5)
        expected = 0 if p == 0 and q == 0 else (1 if value > 0 else -1)
        assert surd_sign_pq(p, q) == expected

    def test_arithmetic(self):
        a, b = Surd(1, 2), Surd(3, -1)
        assert a + b == Surd(4, 1)
        assert a - b == Surd(-2, 3)
        assert (-a).sign() == -1


class TestBeattyF:
    def test_examples(self):
        assert beatty_f(0) == 0
        assert beatty_f(5) == 8
        assert beatty_f(-3) == -5

    def test_matches_high_precision_floor(self):
        for x in range(-3000, 3001):
            assert beatty_f(x) == oracle.floor_phi(x)

    def test_strictly_increasing(self):
        prev = beatty_f(-401)
        for x in range(-400, 401):
            cur = beatty_f(x)
            assert cur > prev
            prev = cur

    @given(st.integers(min_value=-(2**128), max_value=2**128))
    def test_near_additive(self, x):
        # f(2x) - 2 f(x) must land in {0, 1}
        assert beatty_f(2 * x) - 2 * beatty_f(x) in (0, 1)

    def test_identities(self):
        # reflection and iteration identities; the first two bend at x = 0
        for x in range(-500, 501):
            v = beatty_f(x)
            if x != 0:
                assert beatty_f(-x) == -v - 1
                assert beatty_f(v) == v + x - 1
            assert beatty_f(v + x) == 2 * v + x

    def test_pairwise_superadditive(self):
        for x in range(-80, 81):
            for y in range(-80, 81):
                assert beatty_f(x + y) - beatty_f(x) - beatty_f(y) in (0, 1)


class TestFbarAndInverses:
    def test_fbar_examples(self):
        assert fbar(0) == 0
        assert fbar(5) == 13
        assert fbar(1) == 2

    def test_f_inverse_examples(self):
        assert f_inverse(12) == 8
        assert f_inverse(2) is None
        assert f_inverse(0) == 0

    def test_fbar_inverse_examples(self):
        assert fbar_inverse(2) == 1
        assert fbar_inverse(3) is None
        assert fbar_inverse(13) == 5

    def test_round_trips(self):
        for x in range(-1500, 1501):
            assert f_inverse(beatty_f(x)) == x
            assert fbar_inverse(fbar(x)) == x

    def test_inverse_values_verify(self):
        for y in range(-1500, 1501):
            x = f_inverse(y)
            if x is not None:
                assert beatty_f(x) == y
            x = fbar_inverse(y)
            if x is not None:
                assert fbar(x) == y

    def test_range_partition(self):
        # the two ranges partition the integers, except 0 (in both) and -1
        # (in neither)
        for y in range(-1500, 1501):
            in_f = f_inverse(y) is not None
            in_fbar = fbar_inverse(y) is not None
            if y == 0:
                assert in_f and in_fbar
            elif y == -1:
                assert not in_f and not in_fbar
            else:
                assert in_f != in_fbar

    @given(st.integers(min_value=-(2**96), max_value=2**96))
    def test_round_trip_large(self, x):
        assert f_inverse(beatty_f(x)) == x
        assert fbar_inverse(fbar(x)) == x


class TestFracCompare:
    def test_examples(self):
        assert frac_compare(5, 2) is Ordering.LT
        assert frac_compare(7, 7) is Ordering.EQ
        assert frac_compare(1, 2) is Ordering.GT

    def test_matches_high_precision(self):
        for x in range(-150, 151):
            for y in range(-150, 151):
                expected = (
                    Ordering.EQ
                    if x == y
                    else (Ordering.LT if oracle.frac(x) < oracle.frac(y) else Ordering.GT)
                )
                assert frac_compare(x, y) is expected

    def test_zero_is_unique_minimum(self):
        for x in range(-400, 401):
            if x != 0:
                assert frac_compare(x, 0) is Ordering.GT


class TestStarLess:
    def test_examples(self):
        assert star_less(5, 2) is True
        assert star_less(4, 4) is False
        assert star_less(1, 2) is False

    def test_agrees_with_frac_compare(self):
        for x in range(-150, 151):
            for y in range(-150, 151):
                assert star_less(x, y) == (frac_compare(x, y) is Ordering.LT)

    def test_linear_order(self):
        values = list(range(-60, 61))
        for x in values:
            assert not star_less(x, x)
            for y in values:
                if x != y:
                    assert star_less(x, y) != star_less(y, x)

    @given(
        st.integers(min_value=-(2**64), max_value=2**64),
        st.integers(min_value=-(2**64), max_value=2**64),
        st.integers(min_value=-(2**64), max_value=2**64),
    )
    def test_transitive(self, x, y, z):
        if star_less(x, y) and star_less(y, z):
            assert star_less(x, z)


class TestKroneckerWitness:
    def test_examples(self):
        assert kronecker_witness(5, 2) == -3
        assert kronecker_witness(2, 9) == 20
        assert kronecker_witness(13, 5) == -8

    def test_precondition(self):
        with pytest.raises(DomainError):
            kronecker_witness(2, 5)  # frac(2) > frac(5)
        with pytest.raises(DomainError):
            kronecker_witness(3, 3)

    def test_strict_betweenness(self):
        for x in range(-60, 61):
            for y in range(-60, 61):
                if x != y and oracle.frac(x) < oracle.frac(y):
                    w = kronecker_witness(x, y)
                    assert oracle.frac(x) < oracle.frac(w) < oracle.frac(y)


class TestRefine:
    def test_single_step(self):
        assert refine(5, 2, 1) == [-3]

    def test_two_steps_nested(self):
        w1, w2 = refine(5, 2, 2)
        assert w1 == -3
        assert oracle.frac(5) < oracle.frac(w2) < oracle.frac(w1)

    def test_bad_count(self):
        with pytest.raises(DomainError):
            refine(5, 2, 0)

    def test_chain_strictly_nested(self):
        for x, y in [(5, 2), (13, 5), (-7, 31), (0, 1), (100, -251)]:
            if oracle.frac(x) >= oracle.frac(y):
                x, y = y, x
            chain = refine(x, y, 8)
            fracs = [oracle.frac(t) for t in [y, *chain]]
            for earlier, later in zip(fracs, fracs[1:]):
                assert oracle.frac(x) < later < earlier
