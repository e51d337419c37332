"""Tests for the convolution and symmetry checkers."""

from fractions import Fraction as F

import pytest

from btconv.convolve import (
    SideReport,
    check_extensions,
    check_gen1,
    check_gen2,
    check_main1,
    check_main2,
    check_mixed,
    check_nested_shift,
    check_swap,
    check_symmetry_first,
    check_symmetry_second,
    conv_alt,
    conv_plain,
)
from btconv.exact import ZERO, alt_sign, binom_int
from btconv.pairs import (
    Kind,
    KindMismatchError,
    Pair,
    catalog_pair,
    convert_kind,
    fibonacci_pair,
    lucas_pair,
    random_pair,
)
from btconv.seqlib import (
    Seq,
    bernoulli_number,
    catalan,
    fibonacci,
    harmonic,
    lucas,
    odd_harmonic,
)


def first_pairs(n_pairs=4, length=32):
    return [random_pair(Kind.FIRST, f"conv-{i}", length) for i in range(n_pairs)]


def second_pairs(n_pairs=4, length=32):
    return [random_pair(Kind.SECOND, f"conv-{i}", length) for i in range(n_pairs)]


class TestConvKernels:
    def test_alt_catalan_even(self):
        cat = Seq.from_func(catalan, 8)
        direct = sum(
            alt_sign(k) * binom_int(4, k) * catalan(k) * catalan(4 - k)
            for k in range(5)
        )
        assert direct == 12 == catalan(2) * binom_int(4, 2)
        assert conv_alt(cat, cat, 4) == 12

    def test_alt_catalan_odd_vanishes(self):
        cat = Seq.from_func(catalan, 8)
        assert conv_alt(cat, cat, 5) == 0

    def test_alt_constant_vanishes(self):
        ones = Seq((1, 1, 1, 1))
        assert conv_alt(ones, ones, 3) == 0

    def test_plain_fibonacci_bernoulli(self):
        fib = Seq.from_func(fibonacci, 6)
        bern = Seq.from_func(bernoulli_number, 6)
        assert conv_plain(fib, bern, 4) == 0

    def test_plain_delta_picks_value(self):
        delta = Seq((1, 0, 0, 0, 0))
        b = Seq((F(3), F(-1, 2), F(7), F(2, 9), F(5)))
        for n in range(5):
            assert conv_plain(delta, b, n) == b[n]

    def test_plain_lucas_bernoulli(self):
        luc = Seq.from_func(lucas, 6)
        bern = Seq.from_func(bernoulli_number, 6)
        assert conv_plain(luc, bern, 3) == 0

    def test_range_violation(self):
        short = Seq((1, 2))
        with pytest.raises(IndexError):
            conv_alt(short, short, 2)
        with pytest.raises(IndexError):
            conv_plain(short, short, -1)


class TestMain1:
    def test_power_pairs(self):
        p = catalog_pair("power", x=F(1, 2))
        for n in range(11):
            assert check_main1(p, p, n).ok

    def test_harmonic_odd_instance(self):
        p = catalog_pair("harmonic_plus_m", m=0)
        q = catalog_pair("odd_harmonic")
        rep = check_main1(p, q, 4)
        assert rep.ok
        # matches the harmonic/odd-harmonic convolution display at n=4
        display_lhs = sum(
            alt_sign(4 - k) * binom_int(4, k) * harmonic(k) * odd_harmonic(4 - k)
            for k in range(5)
        )
        assert rep.lhs == display_lhs

    def test_fibonacci_pair_odd_order_vanishes(self):
        p = fibonacci_pair()
        rep = check_main1(p, p, 3)
        assert rep.lhs == rep.rhs == 0

    def test_random_pairs(self):
        pairs = first_pairs()
        for p in pairs:
            for q in pairs:
                for n in range(9):
                    assert check_main1(p, q, n).ok

    def test_kind_guard(self):
        with pytest.raises(KindMismatchError):
            check_main1(fibonacci_pair(), catalog_pair("bernoulli"), 3)


class TestMain2:
    def test_bernoulli_with_itself(self):
        q = catalog_pair("bernoulli")
        for n in range(11):
            assert check_main2(q, q, n).ok

    def test_bernoulli_poly_shift_instance(self):
        p = catalog_pair("bernoulli_poly_shift", x=F(1, 2), y=F(3))
        q = catalog_pair("bernoulli_poly_shift", x=F(-1), y=F(1, 2))
        for n in range(9):
            assert check_main2(p, q, n).ok

    def test_binom_x_bernoulli_reproduces_column_identity(self):
        x = F(3)
        rep = check_main2(
            catalog_pair("binom_x", x=x), catalog_pair("bernoulli"), 4
        )
        assert rep.ok
        # same contents as the signed binomial-column Bernoulli identity
        direct_lhs = sum(
            alt_sign(4 - k) * binom_int(4, k) * binom_int(3, k) * bernoulli_number(4 - k)
            for k in range(5)
        )
        direct_rhs = sum(
            binom_int(4, k) * binom_int(3 + k, k) * bernoulli_number(4 - k)
            for k in range(5)
        )
        assert direct_lhs == direct_rhs

    def test_delta_degenerate(self):
        q = catalog_pair("power2", x=F(0))
        rep = check_main2(q, q, 1)
        assert rep.lhs == rep.rhs

    def test_random_pairs(self):
        pairs = second_pairs()
        for p in pairs:
            for q in pairs:
                for n in range(9):
                    assert check_main2(p, q, n).ok


class TestSwapAndMixed:
    def test_swap_harmonic_binom_instance(self):
        rep = check_swap(
            catalog_pair("harmonic_binom_m", m=3), catalog_pair("binom_x", x=F(2)), 4
        )
        assert rep.ok

    def test_swap_random(self):
        pairs = second_pairs()
        for p in pairs:
            for q in pairs:
                for n in range(9):
                    assert check_swap(p, q, n).ok

    def test_swap_power_instance(self):
        p = catalog_pair("power2", x=F(1))
        q = catalog_pair("power2", x=F(0))
        rep = check_swap(p, q, 5)
        assert rep.ok

    def test_mixed_fibonacci_bernoulli_even_vanishes(self):
        p = fibonacci_pair()
        q = catalog_pair("bernoulli")
        for n in range(0, 11, 2):
            rep = check_mixed(p, q, n)
            assert rep.lhs == rep.rhs == 0

    def test_mixed_lucas_bernoulli_odd_vanishes(self):
        p = lucas_pair()
        q = catalog_pair("bernoulli")
        for n in range(1, 11, 2):
            rep = check_mixed(p, q, n)
            assert rep.lhs == rep.rhs == 0

    def test_mixed_harmonic_power_instance(self):
        rep = check_mixed(
            catalog_pair("harmonic_plus_m", m=2), catalog_pair("power2", x=F(3)), 3
        )
        assert rep.ok

    def test_mixed_degenerate_delta(self):
        # left sequence collapses to a delta, so both sides recover the
        # original sequence of q through the inverse transform
        p = catalog_pair("power", x=F(0))
        q = random_pair(Kind.SECOND, "mixed", 12)
        for n in range(9):
            rep = check_mixed(p, q, n)
            assert rep.ok
            assert rep.lhs == q.left(n)

    def test_mixed_random(self):
        for p in first_pairs(2):
            for q in second_pairs(2):
                for n in range(9):
                    assert check_mixed(p, q, n).ok

    def test_mixed_kind_guard(self):
        with pytest.raises(KindMismatchError):
            check_mixed(catalog_pair("bernoulli"), catalog_pair("bernoulli"), 2)


class TestSymmetry:
    def test_m_zero_reduces_to_transform(self):
        p = fibonacci_pair()
        for n in range(9):
            rep = check_symmetry_first(p, 0, n)
            assert rep.ok
            assert rep.rhs == p.right(n)
        q = catalog_pair("bernoulli")
        for n in range(9):
            rep = check_symmetry_second(q, 0, n)
            assert rep.ok

    def test_fibonacci_instance(self):
        assert check_symmetry_first(fibonacci_pair(), 2, 3).ok

    def test_bernoulli_instance(self):
        assert check_symmetry_second(catalog_pair("bernoulli"), 1, 4).ok

    def test_random_sweeps(self):
        p = first_pairs(1, 24)[0]
        q = second_pairs(1, 24)[0]
        for m in range(5):
            for n in range(9):
                assert check_symmetry_first(p, m, n).ok
                assert check_symmetry_second(q, m, n).ok


class TestGeneralizations:
    def test_gen1_degenerates_at_zero_shifts(self):
        p, q = fibonacci_pair(), lucas_pair()
        for n in range(9):
            rep = check_gen1(p, q, 0, 0, n)
            assert rep.ok
            # up to the k -> n-k reflection sign, this is the base relation
            # applied to (swapped q, p)
            swapped = Pair(Kind.FIRST, q.right, q.left, label="swap")
            base = check_main1(swapped, p, n)
            assert rep.lhs == alt_sign(n) * base.lhs
            assert rep.rhs == alt_sign(n) * base.rhs

    def test_gen1_delta_instance(self):
        # window pairs built from binomial columns, n=3, m=2, r=2
        p = catalog_pair("delta_binom", j=1)
        q = catalog_pair("delta_binom", j=2)
        assert check_gen1(p, q, 2, 2, 3).ok

    def test_gen1_lucas_instance(self):
        assert check_gen1(lucas_pair(), lucas_pair(), 1, 2, 4).ok

    def test_double_window_binomial_identity_instance(self):
        # C(n,k)-weighted double-binomial sum at (n,m,r,u,j) = (3,2,2,1,2)
        n, m, r, u, j = 3, 2, 2, 1, 2
        lhs = sum(
            binom_int(n, k) * binom_int(n - k + m, u) * binom_int(r, j - k)
            for k in range(n + 1)
        )
        rhs = sum(
            binom_int(n, k) * binom_int(n - k + r, j) * binom_int(m, u - k)
            for k in range(n + 1)
        )
        assert lhs == rhs == 38

    def test_gen1_random(self):
        p, q = first_pairs(2, 24)
        for m in range(4):
            for r in range(4):
                for n in range(9):
                    assert check_gen1(p, q, m, r, n).ok

    def test_gen2_degenerates_to_gen1_shape(self):
        p, q = fibonacci_pair(), lucas_pair()
        for n in range(7):
            assert check_gen2(p, q, 0, n, 0, 0, 0).ok

    def test_gen2_power_instance(self):
        p = catalog_pair("power", x=F(1, 2))
        q = catalog_pair("power", x=F(1, 3))
        assert check_gen2(p, q, 1, 3, 1, 1, 1).ok

    def test_gen2_fib_lucas_instance(self):
        assert check_gen2(fibonacci_pair(), lucas_pair(), 2, 4, 1, 0, 1).ok

    def test_gen2_random(self):
        p, q = first_pairs(2, 24)
        for m in range(3):
            for r in range(3):
                for u in range(3):
                    for v in range(3):
                        for n in range(6):
                            assert check_gen2(p, q, m, n, r, u, v).ok

    def test_nested_shift_r_zero_matches_symmetry(self):
        p = lucas_pair()
        for m in range(4):
            for n in range(7):
                rep = check_nested_shift(p, m, 0, n)
                sym = check_symmetry_first(p, m, n)
                assert rep.ok and sym.ok
                assert rep.lhs == sym.lhs and rep.rhs == sym.rhs

    def test_nested_shift_instances(self):
        assert check_nested_shift(lucas_pair(), 1, 2, 3).ok
        assert check_nested_shift(catalog_pair("power", x=F(2, 7)), 2, 1, 2).ok

    def test_nested_shift_random(self):
        p = first_pairs(1, 32)[0]
        for m in range(4):
            for r in range(4):
                for n in range(9):
                    assert check_nested_shift(p, m, r, n).ok


class TestExtensions:
    def test_variant_i_lucas_instance(self):
        rep = check_extensions(lucas_pair(), "i", j=1, n=4)
        assert rep.ok
        direct = sum(
            alt_sign(k) * binom_int(3, k) * F(2) ** (4 - k) * lucas(k)
            for k in range(5)
        )
        assert rep.lhs == direct

    def test_variant_i_guard(self):
        with pytest.raises(ValueError):
            check_extensions(lucas_pair(), "i", j=5, n=4)

    def test_variant_ii_parity_vanishing(self):
        # transform-fixed sequence with orders of different parity
        for j, n in ((0, 3), (1, 4), (2, 5)):
            rep = check_extensions(lucas_pair(), "ii", j=j, n=n)
            assert rep.lhs == rep.rhs == 0

    def test_variant_ii_inverse_parity_vanishing(self):
        for j, n in ((0, 4), (1, 3), (2, 6)):
            rep = check_extensions(fibonacci_pair(), "ii", j=j, n=n)
            assert rep.lhs == rep.rhs == 0

    def test_variant_iii_power_instance(self):
        p = catalog_pair("power2", x=F(1))
        for n in range(8):
            rep = check_extensions(p, "iii", q=p, n=n)
            assert rep.ok
            assert rep.lhs == F(5, 2) ** n

    def test_variant_iv_lucas_value(self):
        rep = check_extensions(lucas_pair(), "iv", q=lucas_pair(), n=2)
        assert rep.lhs == rep.rhs == 2

    def test_variant_v_special_pair(self):
        # left side -1/k with harmonic transform: weights collapse to 1
        def left(k):
            return F(-1, k) if k else F(0)

        special = Pair(Kind.FIRST, left, lambda k: harmonic(k), label="neg-recip")
        special.validate(10)
        q = lucas_pair()
        for n in range(9):
            rep = check_extensions(special, "v", q=q, m=1, n=n)
            assert rep.ok
            direct_lhs = sum(
                alt_sign(n - k - 1) * binom_int(n, k) * q.left(n - k)
                for k in range(1, n + 1)
            )
            assert rep.lhs == direct_lhs

    def test_all_variants_on_random_pairs(self):
        p1, p2 = first_pairs(2, 24)
        q1, q2 = second_pairs(2, 24)
        for n in range(9):
            for j in range(n + 1):
                assert check_extensions(p1, "i", j=j, n=n).ok
                assert check_extensions(p1, "ii", j=j, n=n).ok
            assert check_extensions(q1, "iii", q=q2, n=n).ok
            assert check_extensions(p1, "iv", q=p2, n=n).ok
            for m in range(4):
                assert check_extensions(p1, "v", q=p2, m=m, n=n).ok

    def test_unknown_variant(self):
        with pytest.raises(ValueError, match="unknown extension variant"):
            check_extensions(lucas_pair(), "vi", n=2)

    def test_kind_guards(self):
        with pytest.raises(KindMismatchError):
            check_extensions(catalog_pair("bernoulli"), "i", j=0, n=2)
        with pytest.raises(KindMismatchError):
            check_extensions(lucas_pair(), "iii", n=2)


class TestParityLaw:
    """Vanishing of alternating convolutions by classification parity."""

    invariant = [
        Seq.from_func(lucas, 12),
        Seq.from_func(lambda k: k * fibonacci(k - 1) if k else F(0), 12),
        Seq.from_func(lambda k: binom_int(2 * k, k) / F(4) ** k, 12),
    ]
    inverse_invariant = [
        Seq.from_func(fibonacci, 12),
        Seq.from_func(lambda k: harmonic(k) / (k + 1), 12),
    ]

    def test_like_classifications_vanish_at_odd_order(self):
        for family in (self.invariant, self.inverse_invariant):
            for s in family:
                for t in family:
                    for n in range(1, 13, 2):
                        assert conv_alt(s, t, n) == 0

    def test_unlike_classifications_vanish_at_even_order(self):
        for s in self.invariant:
            for t in self.inverse_invariant:
                for n in range(0, 13, 2):
                    assert conv_alt(s, t, n) == 0


class TestSelfConvolution:
    def test_transform_preserves_self_convolution(self):
        for p in first_pairs(3, 16):
            s = p.left_seq(12)
            sigma = p.right_seq(12)
            for n in range(13):
                assert conv_alt(s, s, n) == conv_alt(sigma, sigma, n)
                if n % 2 == 1:
                    assert conv_alt(s, s, n) == 0


class TestDixon:
    def test_cased_closed_form(self):
        for n in range(13):
            direct = sum(alt_sign(k) * binom_int(n, k) ** 3 for k in range(n + 1))
            if n % 2:
                assert direct == 0
            else:
                h = n // 2
                assert direct == alt_sign(h) * binom_int(n, h) * binom_int(3 * h, n)
        direct2 = sum(alt_sign(k) * binom_int(2, k) ** 3 for k in range(3))
        direct4 = sum(alt_sign(k) * binom_int(4, k) ** 3 for k in range(5))
        assert direct2 == -6 and direct4 == 90


class TestSideReport:
    def test_ok_property(self):
        assert SideReport(F(1), F(1)).ok
        assert not SideReport(F(1), F(2)).ok

    def test_params_echo(self):
        rep = SideReport(ZERO, ZERO, {"n": 3})
        assert rep.params["n"] == 3
