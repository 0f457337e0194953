from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dualruns import combinat, triangles
from dualruns.polys import IntPoly, RatPoly

X = IntPoly.x()
ONE_PLUS_X = IntPoly((1, 1))


def brute_distribution(stat, objects, shift=0):
    return combinat.distribution(stat, objects, shift)


class TestMul:
    def test_binomial_square(self):
        assert ONE_PLUS_X * ONE_PLUS_X == IntPoly((1, 2, 1))

    def test_staged_flag_descent_row(self):
        # (1+x)^2 A_2 / x staged as (1+2x+x^2)(1+x), with A_2 from brute force
        a2 = brute_distribution("des", combinat.gen_perms(2), shift=1)
        assert a2 == IntPoly((0, 1, 1))
        staged = (ONE_PLUS_X * ONE_PLUS_X) * a2.divexact_x(1)
        assert staged == IntPoly((1, 3, 3, 1))
        assert staged == triangles.s_poly(2)

    def test_zero_annihilates(self):
        f = IntPoly((3, 0, 5))
        assert f * IntPoly() == IntPoly()
        assert (f * IntPoly()).coeffs == ()


class TestDerivative:
    def test_term_by_term(self):
        assert IntPoly((0, 1, 1, 1)).derivative() == IntPoly((1, 2, 3))

    def test_constant(self):
        assert IntPoly((7,)).derivative() == IntPoly()

    def test_feeds_run_recurrence(self):
        # x(2x+2) R_3 + x(1-x^2) R_3' must equal the brute-force row for S_4
        r3 = IntPoly((0, 2, 4))
        assert r3.derivative() == IntPoly((2, 8))
        r4 = IntPoly((0, 2, 2)) * r3 + IntPoly((0, 1, 0, -1)) * r3.derivative()
        assert r4 == brute_distribution("altrun", combinat.gen_perms(4))
        assert r4 == IntPoly((0, 2, 12, 10))


class TestEval:
    def test_row_sum_identity(self):
        assert triangles.t_poly(3)(1) == 15
        assert triangles.t_poly(4)(-1) == -15

    def test_zero_poly(self):
        assert IntPoly()(Fraction(22, 7)) == 0

    def test_rational_point(self):
        assert IntPoly((1, 1, 1))(Fraction(1, 2)) == Fraction(7, 4)


class TestParitySplit:
    def test_dual_peak_rows(self):
        even, odd = (ONE_PLUS_X * triangles.t_poly(2)).parity_split()
        assert even == IntPoly((0, 2, 1))  # N_2
        assert odd == IntPoly((1, 2))  # M_2

    def test_single_even_term(self):
        even, odd = IntPoly((0, 0, 1)).parity_split()
        assert even == IntPoly((0, 1))
        assert odd == IntPoly()

    def test_staged_peak_split_matches_brute_force(self):
        # (1+x)^2/(2x) R_2 = 1+2x+x^2 splits into the S_2 peak rows
        staged = IntPoly((1, 2, 1))
        even, odd = staged.parity_split()
        assert even == brute_distribution("lpk", combinat.gen_perms(2))
        assert odd == brute_distribution("ipk", combinat.gen_perms(2))


class TestReverse:
    def test_peak_row_reversal(self):
        assert IntPoly((0, 2, 1)).reversed_within(2) == IntPoly((1, 2))

    def test_symmetric_row_is_fixed(self):
        core = triangles.t_poly(3).divexact_x(1)
        assert core.reversed_within(4) == core

    def test_constant_to_monomial(self):
        assert IntPoly((1,)).reversed_within(3) == IntPoly((0, 0, 0, 1))

    def test_rejects_degree_above_window(self):
        with pytest.raises(ValueError):
            IntPoly((1, 1, 1)).reversed_within(1)


class TestRing:
    def test_int_coercion_rejects_floats(self):
        with pytest.raises(TypeError):
            IntPoly((1.5,))

    def test_rat_normalization(self):
        p = RatPoly((Fraction(2, 4), Fraction(-3, -6)))
        assert p.coeffs == (Fraction(1, 2), Fraction(1, 2))

    def test_divexact_errors(self):
        with pytest.raises(ValueError):
            IntPoly((1, 1)).divexact(IntPoly((0, 2)))
        with pytest.raises(ValueError):
            IntPoly((1, 1)).divexact_x(1)

    def test_divexact_roundtrip(self):
        f = IntPoly((2, 5, 3))
        assert f.divexact(ONE_PLUS_X) == IntPoly((2, 3))


small_polys = st.lists(st.integers(-9, 9), max_size=9).map(IntPoly)


@given(small_polys)
def test_parity_recombination(f):
    even, odd = f.parity_split()
    assert even.stretch(2) + X * odd.stretch(2) == f


@given(small_polys, small_polys)
def test_leibniz_product_rule(f, g):
    assert (f * g).derivative() == f.derivative() * g + f * g.derivative()


@given(small_polys, st.integers(0, 6))
def test_reverse_is_involution(f, extra):
    n = max(f.degree, 0) + extra
    assert f.reversed_within(n).reversed_within(n) == f


@given(small_polys, small_polys, st.integers(-3, 3))
def test_eval_is_ring_homomorphism(f, g, q):
    assert (f * g)(q) == f(q) * g(q)
    assert (f + g)(q) == f(q) + g(q)
