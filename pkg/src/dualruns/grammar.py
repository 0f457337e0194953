"""Context-free grammar derivative calculus on a fixed finite alphabet.

A grammar maps each letter to an integer-coefficient formal sum of
monomials; the derivative D replaces letters by their rules and extends to
products by the Leibniz rule and to sums by linearity.  Iterating D from a
seed monomial and then setting all but one letter to 1 produces the
generating polynomials of the triangle layer, which is what the verifier
exploits.

Monomials are tuples of (letter, exponent) pairs sorted by letter with all
exponents positive, so they are hashable and print canonically.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping

from .polys import IntPoly

Monomial = tuple

MONOMIAL_ONE: Monomial = ()


def monomial(**exps: int) -> Monomial:
    """Build a monomial from keyword exponents, e.g. monomial(x=1, y=2)."""
    for letter, e in exps.items():
        if e < 0:
            raise ValueError(f"negative exponent for {letter!r}")
    return tuple(sorted((l, e) for l, e in exps.items() if e > 0))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    out = dict(a)
    for letter, e in b:
        out[letter] = out.get(letter, 0) + e
    return tuple(sorted(out.items()))


def mono_letters(m: Monomial) -> set:
    return {letter for letter, _ in m}


def _mono_str(m: Monomial) -> str:
    if not m:
        return "1"
    return "".join(l if e == 1 else f"{l}^{e}" for l, e in m)


class FormalSum:
    """Integer-coefficient sum of monomials; zero coefficients are dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None) -> None:
        clean = {}
        if terms:
            for mono, c in terms.items():
                if not isinstance(c, int) or isinstance(c, bool):
                    raise TypeError("coefficients must be integers")
                if c:
                    clean[mono] = c
        self.terms = clean

    @classmethod
    def zero(cls) -> "FormalSum":
        return cls()

    @classmethod
    def term(cls, coeff: int, **exps: int) -> "FormalSum":
        return cls({monomial(**exps): coeff})

    @classmethod
    def letter(cls, name: str) -> "FormalSum":
        return cls({((name, 1),): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def letters(self) -> set:
        out: set = set()
        for mono in self.terms:
            out |= mono_letters(mono)
        return out

    def term_count(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, FormalSum) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "FormalSum") -> "FormalSum":
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, 0) + c
        return FormalSum(out)

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, 0) - c
        return FormalSum(out)

    def __neg__(self) -> "FormalSum":
        return FormalSum({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return FormalSum({m: c * other for m, c in self.terms.items()})
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return FormalSum(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "FormalSum":
        if n < 0:
            raise ValueError("negative power")
        out = FormalSum({MONOMIAL_ONE: 1})
        for _ in range(n):
            out = out * self
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms):
            c = self.terms[mono]
            mag = -c if c < 0 else c
            body = _mono_str(mono)
            if body == "1":
                body = str(mag)
            elif mag != 1:
                body = f"{mag}{body}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"FormalSum('{self}')"


class Grammar:
    """Substitution rules letter -> FormalSum over a fixed alphabet."""

    __slots__ = ("alphabet", "rules")

    def __init__(self, alphabet: Iterable[str], rules: Mapping[str, FormalSum]):
        alphabet = tuple(alphabet)
        letters = set(alphabet)
        if set(rules) != letters:
            raise ValueError("every alphabet letter needs exactly one rule")
        for letter, rhs in rules.items():
            if not rhs.letters() <= letters:
                raise ValueError(f"rule for {letter!r} uses letters outside the alphabet")
        self.alphabet = alphabet
        self.rules = dict(rules)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Grammar)
            and self.alphabet == other.alphabet
            and self.rules == other.rules
        )

    def __repr__(self) -> str:
        body = ", ".join(f"{l} -> {self.rules[l]}" for l in self.alphabet)
        return f"Grammar({body})"


def derive(grammar: Grammar, s: FormalSum) -> FormalSum:
    """One application of the grammar derivation, extended by Leibniz/linearity."""
    out: dict = {}
    for mono, coeff in s.terms.items():
        for idx, (letter, e) in enumerate(mono):
            rule = grammar.rules.get(letter)
            if rule is None:
                raise ValueError(f"letter {letter!r} has no rule")
            if e == 1:
                base = mono[:idx] + mono[idx + 1 :]
            else:
                base = mono[:idx] + ((letter, e - 1),) + mono[idx + 1 :]
            factor = coeff * e
            for rmono, rc in rule.terms.items():
                m = mono_mul(base, rmono)
                out[m] = out.get(m, 0) + factor * rc
    return FormalSum(out)


def derive_n(
    grammar: Grammar, s: FormalSum, n: int, term_cap: int = 10**6
) -> FormalSum:
    """n-fold derivation with a term-count resource guard."""
    if n < 0:
        raise ValueError("derivation count must be nonnegative")
    out = s
    for _ in range(n):
        out = derive(grammar, out)
        if out.term_count() > term_cap:
            raise ValueError(f"formal sum exceeded {term_cap} terms")
    return out


def substitute_ones(s: FormalSum, ones: Iterable[str]) -> IntPoly:
    """Set the given letters to 1; at most one free letter may remain.

    The result is the univariate polynomial in the surviving letter (a
    constant polynomial when no letter survives).
    """
    ones = set(ones)
    free = s.letters() - ones
    if len(free) > 1:
        raise ValueError(f"more than one free letter after substitution: {sorted(free)}")
    var = free.pop() if free else None
    coeffs: dict[int, int] = {}
    for mono, c in s.terms.items():
        e = 0
        for letter, k in mono:
            if letter == var:
                e = k
        coeffs[e] = coeffs.get(e, 0) + c
    if not coeffs:
        return IntPoly()
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return IntPoly(out)


def diamond(grammar: Grammar, letter: str) -> Grammar:
    """Multiply every rule's right-hand side by the given letter."""
    if letter not in grammar.alphabet:
        raise ValueError(f"{letter!r} is not in the alphabet")
    lift = FormalSum.letter(letter)
    return Grammar(
        grammar.alphabet, {l: rhs * lift for l, rhs in grammar.rules.items()}
    )


def leibniz_pairs(grammar: Grammar, u: FormalSum, v: FormalSum, n: int) -> FormalSum:
    """D^n(uv) assembled as sum_k C(n,k) D^k(u) D^{n-k}(v)."""
    if n < 0:
        raise ValueError("derivation count must be nonnegative")
    du = [u]
    dv = [v]
    for _ in range(n):
        du.append(derive(grammar, du[-1]))
        dv.append(derive(grammar, dv[-1]))
    acc = FormalSum.zero()
    for k in range(n + 1):
        acc = acc + (du[k] * dv[n - k]) * math.comb(n, k)
    return acc


# The two grammars of interest: GRAMMAR_RUNS drives the plain alternating-run
# family from the seed x^2; its diamond product by z drives the dual-set family
# from the seed x.  GRAMMAR_DUAL is written out literally so that comparing it
# with diamond(GRAMMAR_RUNS, "z") stays a two-sided check.
GRAMMAR_RUNS = Grammar(
    ("x", "y", "z"),
    {
        "x": FormalSum.term(1, x=1, y=1),
        "y": FormalSum.term(1, y=1, z=1),
        "z": FormalSum.term(1, y=2),
    },
)

GRAMMAR_DUAL = Grammar(
    ("x", "y", "z"),
    {
        "x": FormalSum.term(1, x=1, y=1, z=1),
        "y": FormalSum.term(1, y=1, z=2),
        "z": FormalSum.term(1, y=2, z=1),
    },
)
