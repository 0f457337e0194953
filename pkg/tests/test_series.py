import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dualruns import triangles
from dualruns.polys import RatPoly
from dualruns.series import TruncSeries

ONE = RatPoly.one()
MINUS_ONE = RatPoly((-1,))
X = RatPoly((0, 1))


def row_series(order, row):
    return TruncSeries(
        order, [row(m).to_rat() * Fraction(1, math.factorial(m)) for m in range(order + 1)]
    )


class TestMul:
    def test_difference_of_squares(self):
        f = TruncSeries(2, (ONE, ONE))
        g = TruncSeries(2, (ONE, -X.one()))
        assert f * g == TruncSeries(2, (ONE, RatPoly(), RatPoly((-1,))))

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            TruncSeries(2) * TruncSeries(3)

    def test_eulerian_egf_denominator_clears(self):
        order = 4
        coeffs = [ONE] + [
            triangles.a_poly(m).to_rat() * Fraction(1, math.factorial(m))
            for m in range(1, order + 1)
        ]
        aser = TruncSeries(order, coeffs)
        e = TruncSeries(order, (RatPoly(), RatPoly((1, -1)))).exp()
        lhs = aser * (TruncSeries.from_poly(order, ONE) - e * X)
        assert lhs == TruncSeries.from_poly(order, RatPoly((1, -1)))

    def test_peak_egf_square_clears(self):
        order = 4
        nser = row_series(order, triangles.n_poly)
        e2 = TruncSeries(order, (RatPoly(), RatPoly((2, -2)))).exp()
        lhs = nser * nser * (TruncSeries.from_poly(order, ONE) - e2 * X)
        assert lhs == TruncSeries.from_poly(order, RatPoly((1, -1)))


class TestExp:
    def test_quadratic_argument(self):
        g = TruncSeries(2, (RatPoly(), RatPoly((-1, 0, 1))))
        got = g.exp()
        sq = RatPoly((-1, 0, 1)) * RatPoly((-1, 0, 1))
        assert got == TruncSeries(2, (ONE, RatPoly((-1, 0, 1)), sq * Fraction(1, 2)))

    def test_rejects_nonzero_constant(self):
        with pytest.raises(ValueError):
            TruncSeries(2, (ONE,)).exp()


class TestSqrt:
    def test_binomial_series(self):
        g = TruncSeries(2, (ONE, RatPoly((2,))))
        assert g.sqrt() == TruncSeries(
            2, (ONE, ONE, RatPoly((Fraction(-1, 2),)))
        )

    def test_rejects_wrong_constant(self):
        with pytest.raises(ValueError):
            TruncSeries(2, (RatPoly((2,)),)).sqrt()

    def test_dual_run_egf_composite(self):
        # assemble the closed dual-run generating series from exact pieces:
        # ((E+x)/(1+x)) / sqrt((E^2-x^2)/(1-x^2)) with E = e^{z(x^2-1)};
        # its z^2 coefficient times 2! is the n=2 row
        order = 4
        e = TruncSeries(order, (RatPoly(), RatPoly((-1, 0, 1)))).exp()
        e2 = e * e
        num = (e + TruncSeries.from_poly(order, X)).map_coeffs(
            lambda c: c.divexact(RatPoly((1, 1)))
        )
        inner = (e2 - TruncSeries.from_poly(order, X * X)).map_coeffs(
            lambda c: c.divexact(RatPoly((1, 0, -1)))
        )
        composite = num * inner.sqrt().reciprocal()
        for n in range(order + 1):
            got = composite.coefficient(n) * Fraction(math.factorial(n))
            assert got == triangles.t_poly(n).to_rat()


class TestReciprocal:
    def test_inverse_of_geometric(self):
        g = TruncSeries(3, (ONE, -X.one()))
        assert g.reciprocal() == TruncSeries(3, (ONE, ONE, ONE, ONE))

    def test_product_is_one(self):
        g = TruncSeries(3, (ONE, X, X * X))
        assert g * g.reciprocal() == TruncSeries.from_poly(3, ONE)


class TestDegreeCap:
    def test_constructor_rejects_overflow(self):
        with pytest.raises(ValueError):
            TruncSeries(1, (RatPoly((0,) * 5 + (1,)),))

    def test_multiplication_rejects_overflow(self):
        high = RatPoly((0,) * 3 + (1,))
        s = TruncSeries(1, (high,))
        with pytest.raises(ValueError):
            s * s


@settings(max_examples=200, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(-4, 4), max_size=3).map(RatPoly), min_size=0, max_size=3
    )
)
def test_sqrt_squares_back(tail):
    order = 3
    g = TruncSeries(order, [ONE] + tail[: order])
    root = g.sqrt()
    assert root * root == g
