"""The x*(d/dx) operator on the closed family P(x)/((1-x)^a (1+x)^b sqrt(1-x^2)).

Applying x*(d/dx) to P(x) * (1-x)^(-a-1/2) * (1+x)^(-b-1/2) and clearing to
the common denominator (1-x)^(a+1) (1+x)^(b+1) sqrt(1-x^2) gives the
one-step numerator update

    P  ->  x(1-x^2) P' + x((a-b) + (a+b+1)x) P,

with both exponents stepping by one.  The result is then normalized by
cancelling any (1-x) or (1+x) factors shared with the denominator, which is
what keeps the iteration on the documented (n, n-1) exponent track: the seed
sqrt((1+x)/(1-x)) = (1+x)/sqrt(1-x^2) picks up one such cancellation on the
first step and never again, because the later numerators vanish at neither 1
nor -1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polys import IntPoly

_X = IntPoly.x()
_ONE_MINUS_X = IntPoly((1, -1))
_ONE_PLUS_X = IntPoly((1, 1))
_ONE_MINUS_X2 = IntPoly((1, 0, -1))


@dataclass(frozen=True)
class ClosedForm:
    """Value numerator / ((1-x)^minus_exp (1+x)^plus_exp sqrt(1-x^2))."""

    numerator: IntPoly
    minus_exp: int
    plus_exp: int

    def __str__(self) -> str:
        return (
            f"({self.numerator}) / "
            f"((1-x)^{self.minus_exp} (1+x)^{self.plus_exp} sqrt(1-x^2))"
        )


def initial_form() -> ClosedForm:
    """sqrt((1+x)/(1-x)), written over the common denominator sqrt(1-x^2)."""
    return ClosedForm(_ONE_PLUS_X, 0, 0)


def theta_apply(f: ClosedForm) -> ClosedForm:
    """One application of x*(d/dx), renormalized within the closed family."""
    a, b = f.minus_exp, f.plus_exp
    p = f.numerator
    q = (_X * _ONE_MINUS_X2) * p.derivative() + IntPoly((0, a - b, a + b + 1)) * p
    a += 1
    b += 1
    while a > 0 and not q.is_zero():
        reduced = q.try_divexact(_ONE_MINUS_X)
        if reduced is None:
            break
        q, a = reduced, a - 1
    while b > 0 and not q.is_zero():
        reduced = q.try_divexact(_ONE_PLUS_X)
        if reduced is None:
            break
        q, b = reduced, b - 1
    return ClosedForm(q, a, b)


def theta_iterate(n: int) -> ClosedForm:
    """n applications of the operator starting from the square-root seed."""
    if n < 0:
        raise ValueError("iteration count must be nonnegative")
    form = initial_form()
    for _ in range(n):
        form = theta_apply(form)
    return form
