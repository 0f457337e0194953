"""Truncated power series in a formal variable z with polynomial coefficients.

A series of order K stores exactly K+1 coefficients, each a RatPoly in x.
All arithmetic is exact on the retained window; nothing is ever rounded.
Coefficients may not exceed the x-degree cap 2K+2 -- exceeding it raises
instead of truncating silently, so degree drift in callers becomes a hard
error.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .polys import IntPoly, RatPoly


def _as_ratpoly(value) -> RatPoly:
    if isinstance(value, RatPoly):
        return value
    if isinstance(value, IntPoly):
        return value.to_rat()
    return RatPoly((value,))


class TruncSeries:
    """Power series in z truncated after z^order, coefficients RatPoly in x."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable = ()) -> None:
        if order < 0:
            raise ValueError("series order must be nonnegative")
        cs = [_as_ratpoly(c) for c in coeffs]
        if len(cs) > order + 1:
            raise ValueError(f"got {len(cs)} coefficients for order {order}")
        cs.extend(RatPoly() for _ in range(order + 1 - len(cs)))
        cap = 2 * order + 2
        for n, c in enumerate(cs):
            if c.degree > cap:
                raise ValueError(
                    f"x-degree {c.degree} of z^{n} coefficient exceeds cap {cap}"
                )
        self.order = order
        self.coeffs = tuple(cs)

    @property
    def x_degree_cap(self) -> int:
        return 2 * self.order + 2

    @classmethod
    def from_poly(cls, order: int, p) -> "TruncSeries":
        """Constant-in-z series whose z^0 coefficient is p."""
        return cls(order, (p,))

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls(order)

    def coefficient(self, n: int) -> RatPoly:
        if not 0 <= n <= self.order:
            raise IndexError(f"z-exponent {n} outside retained window")
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def _check_order(self, other: "TruncSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} != {other.order}")

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check_order(other)
        return TruncSeries(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        self._check_order(other)
        return TruncSeries(
            self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(self.order, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            self._check_order(other)
            out = _convolve(self.coeffs, other.coeffs, self.order + 1)
            return TruncSeries(self.order, out)
        scalar = _as_ratpoly(other)
        return TruncSeries(self.order, tuple(c * scalar for c in self.coeffs))

    def __rmul__(self, other):
        return self.__mul__(other)

    # ------------------------------------------------------------------
    # transcendental operations (exact on the window)
    # ------------------------------------------------------------------
    def exp(self) -> "TruncSeries":
        """Exponential of a series with zero constant term.

        Solves y' = g'y coefficient by coefficient; the only divisions are
        by the integer index n.
        """
        if not self.coeffs[0].is_zero():
            raise ValueError("exp requires a zero constant term")
        g = self.coeffs
        y = [RatPoly.one()]
        for n in range(1, self.order + 1):
            acc = RatPoly()
            for j in range(1, n + 1):
                if not g[j].is_zero():
                    acc = acc + (g[j] * y[n - j]) * j
            y.append(acc * Fraction(1, n))
        return TruncSeries(self.order, y)

    def sqrt(self) -> "TruncSeries":
        """Square root of a series with constant term 1.

        Newton lifting on the inverse square root u <- u(3 - g u^2)/2 with
        doubling z-precision, then sqrt = g*u; division-free except by 2.
        """
        if self.coeffs[0] != RatPoly.one():
            raise ValueError("sqrt requires constant term 1")
        k1 = self.order + 1
        half = Fraction(1, 2)
        u = [RatPoly.one()]
        prec = 1
        while prec < k1:
            prec = min(2 * prec, k1)
            g = list(self.coeffs[:prec])
            uu = _convolve(u, u, prec)
            guu = _convolve(g, uu, prec)
            w = [-c for c in guu]
            w[0] = w[0] + RatPoly((3,))
            u = [c * half for c in _convolve(u, w, prec)]
        return TruncSeries(self.order, _convolve(list(self.coeffs), u, k1))

    def reciprocal(self) -> "TruncSeries":
        """Multiplicative inverse of a series with constant term 1."""
        if self.coeffs[0] != RatPoly.one():
            raise ValueError("reciprocal requires constant term 1")
        k1 = self.order + 1
        v = [RatPoly.one()]
        prec = 1
        while prec < k1:
            prec = min(2 * prec, k1)
            g = list(self.coeffs[:prec])
            gv = _convolve(g, v, prec)
            w = [-c for c in gv]
            w[0] = w[0] + RatPoly((2,))
            v = _convolve(v, w, prec)
        return TruncSeries(self.order, v)

    def map_coeffs(self, fn) -> "TruncSeries":
        """Apply fn to every retained coefficient."""
        return TruncSeries(self.order, tuple(fn(c) for c in self.coeffs))

    def __repr__(self) -> str:
        body = " + ".join(
            f"({c})z^{n}" for n, c in enumerate(self.coeffs) if not c.is_zero()
        )
        return f"TruncSeries(order={self.order}, {body or '0'})"


def _convolve(a: Sequence[RatPoly], b: Sequence[RatPoly], length: int) -> list:
    out = [RatPoly() for _ in range(length)]
    for i, ca in enumerate(a):
        if ca.is_zero() or i >= length:
            continue
        for j, cb in enumerate(b):
            if i + j >= length:
                break
            if not cb.is_zero():
                out[i + j] = out[i + j] + ca * cb
    return out
