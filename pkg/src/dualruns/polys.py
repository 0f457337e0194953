"""Dense univariate polynomials with exact integer or rational coefficients.

A polynomial is a tuple of coefficients, index i holding the coefficient of
x^i.  The zero polynomial is the empty tuple; every constructor strips
trailing zeros, so structural equality coincides with mathematical equality.
Values are immutable and every operation returns a fresh polynomial, which
makes all of them safe to share between threads.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from typing import Iterable


class _DensePoly:
    """Arithmetic shared by the integer and rational coefficient rings."""

    __slots__ = ("coeffs",)

    coeffs: tuple

    @staticmethod
    def _coerce(value):
        raise NotImplementedError

    @staticmethod
    def _divide(a, b):
        """Ring-aware exact scalar division; raises ValueError if inexact."""
        raise NotImplementedError

    def __init__(self, coeffs: Iterable = ()) -> None:
        cs = [self._coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, coeff=1):
        if k < 0:
            raise ValueError("monomial exponent must be nonnegative")
        return cls((0,) * k + (coeff,))

    # ------------------------------------------------------------------
    # queries
    # ------------------------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int):
        """Coefficient of x^k (zero outside the stored window)."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self._coerce(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.coeffs))

    # ------------------------------------------------------------------
    # ring operations
    # ------------------------------------------------------------------
    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return type(self)(out)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return type(self)(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if type(other) is type(self):
            if not self.coeffs or not other.coeffs:
                return type(self)()
            out = [self._coerce(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return type(self)(out)
        try:
            scalar = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return type(self)(tuple(c * scalar for c in self.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = type(self).one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self):
        """Exact formal derivative."""
        return type(self)(tuple(k * c for k, c in enumerate(self.coeffs))[1:])

    def __call__(self, point):
        """Evaluate by Horner's rule; exact for int/Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    # ------------------------------------------------------------------
    # structure
    # ------------------------------------------------------------------
    def parity_split(self):
        """Split into even/odd parts: f(x) = E(x^2) + x*O(x^2).

        Returns the pair (E, O).
        """
        even = self.coeffs[0::2]
        odd = self.coeffs[1::2]
        return type(self)(even), type(self)(odd)

    def stretch(self, k: int):
        """Substitute x -> x^k."""
        if k < 1:
            raise ValueError("stretch factor must be positive")
        if not self.coeffs:
            return type(self)()
        out = [self._coerce(0)] * ((len(self.coeffs) - 1) * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return type(self)(out)

    def reversed_within(self, n: int):
        """Reverse the coefficient window [0..n]: x^n * f(1/x).

        Rejects polynomials of degree above n.
        """
        if self.degree > n:
            raise ValueError(f"degree {self.degree} exceeds reversal window {n}")
        return type(self)(tuple(self.coefficient(n - i) for i in range(n + 1)))

    def shift_up(self, k: int):
        """Multiply by x^k."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if not self.coeffs:
            return type(self)()
        return type(self)((self._coerce(0),) * k + self.coeffs)

    def divexact_x(self, k: int):
        """Exact division by x^k; the k lowest coefficients must vanish."""
        if any(self.coeffs[:k]):
            raise ValueError("polynomial is not divisible by x^%d" % k)
        return type(self)(self.coeffs[k:])

    def divexact_scalar(self, c):
        """Exact division of every coefficient by the scalar c."""
        c = self._coerce(c)
        if c == 0:
            raise ZeroDivisionError("scalar division by zero")
        return type(self)(tuple(self._divide(a, c) for a in self.coeffs))

    def divmod_poly(self, d):
        """Euclidean division self = q*d + r with deg r < deg d.

        For integer polynomials every elimination step must divide exactly,
        otherwise ValueError is raised.
        """
        if type(d) is not type(self):
            raise TypeError("mixed-ring polynomial division")
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dn = len(d.coeffs)
        if len(r) < dn:
            return type(self)(), self
        q = [self._coerce(0)] * (len(r) - dn + 1)
        lead = d.coeffs[-1]
        for i in range(len(r) - dn, -1, -1):
            c = self._divide(r[i + dn - 1], lead)
            q[i] = c
            if c:
                for j, b in enumerate(d.coeffs):
                    r[i + j] -= c * b
        return type(self)(q), type(self)(r[: dn - 1])

    def divexact(self, d):
        """Exact polynomial division; raises ValueError on nonzero remainder."""
        q, r = self.divmod_poly(d)
        if not r.is_zero():
            raise ValueError(f"{self!r} is not divisible by {d!r}")
        return q

    def try_divexact(self, d):
        """Like divexact but returns None when the division is inexact."""
        try:
            return self.divexact(d)
        except ValueError:
            return None

    # ------------------------------------------------------------------
    # rendering
    # ------------------------------------------------------------------
    def to_str(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else str(mag)
                body = f"{head}{var}" if i == 1 else f"{head}{var}^{i}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"{type(self).__name__}('{self.to_str()}')"


class IntPoly(_DensePoly):
    """Polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(value):
        return operator.index(value)

    @staticmethod
    def _divide(a, b):
        q, r = divmod(a, b)
        if r:
            raise ValueError(f"{a} is not divisible by {b}")
        return q

    def to_rat(self) -> "RatPoly":
        """Lossless embedding into the rational coefficient ring."""
        return RatPoly(self.coeffs)

    def content_sum(self):
        """Sum of all coefficients, i.e. the value at 1."""
        return sum(self.coeffs)


class RatPoly(_DensePoly):
    """Polynomial with exact rational coefficients.

    Fractions are kept normalized with positive denominator, so equality is
    plain componentwise comparison.
    """

    __slots__ = ()

    @staticmethod
    def _coerce(value):
        if isinstance(value, float):
            raise TypeError("floats are not exact; use Fraction")
        return Fraction(value)

    @staticmethod
    def _divide(a, b):
        return a / b

    @classmethod
    def from_int_poly(cls, p: IntPoly) -> "RatPoly":
        return cls(p.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_int_poly(self) -> IntPoly:
        if not self.is_integral():
            raise ValueError("polynomial has non-integer coefficients")
        return IntPoly(tuple(int(c) for c in self.coeffs))
