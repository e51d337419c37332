"""Tests for the special-sequence generators."""

from fractions import Fraction as F

import pytest

from btconv.exact import binom_int
from btconv.seqlib import (
    Seq,
    bernoulli_number,
    bernoulli_poly,
    catalan,
    fibonacci,
    gibonacci,
    harmonic,
    lucas,
    odd_harmonic,
)


def bernoulli_oracle(n: int) -> F:
    """Independent recurrence: B(n) = -(1/(n+1)) sum(C(n+1, k) B(k), k<n)."""
    values = []
    for m in range(n + 1):
        if m == 0:
            values.append(F(1))
            continue
        acc = sum(binom_int(m + 1, k) * values[k] for k in range(m))
        values.append(-acc / (m + 1))
    return values[n]


class TestSeqType:
    def test_requires_index_zero(self):
        with pytest.raises(ValueError):
            Seq(())

    def test_negative_index_rejected(self):
        s = Seq((1, 2, 3))
        with pytest.raises(IndexError):
            s[-1]
        with pytest.raises(IndexError):
            s[3]

    def test_coercion_and_iteration(self):
        s = Seq((1, F(1, 2)))
        assert list(s) == [F(1), F(1, 2)]
        assert len(s) == 2 and s.n_max == 1

    def test_from_func(self):
        s = Seq.from_func(lambda k: k * k, 3)
        assert s.values == (F(0), F(1), F(4), F(9))


class TestFibonacciLucas:
    def test_seeds(self):
        assert fibonacci(0) == 0 and fibonacci(1) == 1
        assert lucas(0) == 2 and lucas(1) == 1

    def test_recurrence_oracle_values(self):
        # forward recurrence, computed independently
        a, b = 0, 1
        for _ in range(6):
            a, b = b, a + b
        assert a == 8 == fibonacci(6)
        a, b = 2, 1
        for _ in range(5):
            a, b = b, a + b
        assert a == 11 == lucas(5)

    def test_negative_reflection(self):
        assert fibonacci(-4) == -3 == -fibonacci(4)
        assert lucas(-3) == -4 == -lucas(3)

    def test_recurrence_everywhere(self):
        for n in range(-32, 65):
            assert fibonacci(n) == fibonacci(n - 1) + fibonacci(n - 2)
            assert lucas(n) == lucas(n - 1) + lucas(n - 2)

    def test_reflection_everywhere(self):
        for n in range(0, 33):
            sign = 1 if n % 2 else -1
            assert fibonacci(-n) == sign * fibonacci(n)
            assert lucas(-n) == -sign * lucas(n)


class TestGibonacci:
    def test_reduces_to_fibonacci_and_lucas(self):
        for n in range(-32, 65):
            assert gibonacci(0, 1, n) == fibonacci(n)
            assert gibonacci(2, 1, n) == lucas(n)

    def test_backward_recurrence_oracle(self):
        # walking (1, 1) backward: G(-1) = G(1) - G(0) = 0, G(-2) = G(0) - G(-1) = 1
        assert gibonacci(1, 1, -1) == 0
        assert gibonacci(1, 1, -2) == 1

    def test_recurrence_everywhere(self):
        for g0, g1 in ((F(1), F(3)), (F(-1, 2), F(2, 7))):
            for n in range(-32, 65):
                assert gibonacci(g0, g1, n) == gibonacci(g0, g1, n - 1) + gibonacci(
                    g0, g1, n - 2
                )

    def test_zero_seed_warns(self):
        with pytest.warns(UserWarning):
            gibonacci(0, 0, 5)


class TestBernoulli:
    def test_listed_values(self):
        expected = [F(1), F(-1, 2), F(1, 6), F(0), F(-1, 30), F(0), F(1, 42), F(0)]
        assert [bernoulli_number(n) for n in range(8)] == expected

    def test_recurrence_oracle(self):
        assert bernoulli_oracle(12) == F(-691, 2730) == bernoulli_number(12)

    def test_odd_values_vanish(self):
        for n in range(3, 41, 2):
            assert bernoulli_number(n) == 0

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            bernoulli_number(-1)


class TestBernoulliPoly:
    def test_quadratic_at_half(self):
        # B_2(x) = x**2 - x + 1/6 evaluated at 1/2
        x = F(1, 2)
        assert x * x - x + F(1, 6) == F(-1, 12)
        assert bernoulli_poly(2, x) == F(-1, 12)

    def test_at_zero_returns_number(self):
        assert bernoulli_poly(1, 0) == F(-1, 2)
        for n in range(12):
            assert bernoulli_poly(n, 0) == bernoulli_number(n)

    def test_cubic_at_one(self):
        # shift recurrence with n=3, x=0: B_3(1) = B_0 + 3 B_1 + 3 B_2 + B_3
        expected = sum(binom_int(3, k) * bernoulli_number(k) for k in range(4))
        assert expected == 0
        assert bernoulli_poly(3, 1) == 0

    def test_shift_recurrence(self):
        # B_n(x+1) = sum(C(n, k) B_k(x))
        for n in range(13):
            for x in (F(0), F(1), F(-1), F(1, 2), F(-3, 7)):
                lhs = bernoulli_poly(n, x + 1)
                rhs = sum(binom_int(n, k) * bernoulli_poly(k, x) for k in range(n + 1))
                assert lhs == rhs


class TestCatalanHarmonic:
    def test_catalan_values(self):
        assert catalan(0) == 1
        assert binom_int(6, 3) / 4 == F(5) and catalan(3) == 5
        assert binom_int(10, 5) / 6 == F(42) and catalan(5) == 42

    def test_harmonic_values(self):
        assert harmonic(0) == 0 and odd_harmonic(0) == 0
        assert sum(F(1, k) for k in range(1, 4)) == F(11, 6) == harmonic(3)
        assert sum(F(1, 2 * k - 1) for k in range(1, 3)) == F(4, 3) == odd_harmonic(2)

    def test_increments(self):
        for n in range(1, 65):
            assert harmonic(n) - harmonic(n - 1) == F(1, n)
            assert odd_harmonic(n) - odd_harmonic(n - 1) == F(1, 2 * n - 1)

    def test_negative_rejected(self):
        for fn in (catalan, harmonic, odd_harmonic):
            with pytest.raises(ValueError):
                fn(-1)
