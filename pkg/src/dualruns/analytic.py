"""Numerical root finding plus the structural polynomial checks.

Roots are found by the Ehrlich-Aberth simultaneous iteration in mpmath
multiprecision arithmetic, started from convex-hull (Newton polygon) radii,
under a precision ladder: the working precision doubles until the residual
target is met or the hard cap is reached, in which case the root set is
returned marked unverified -- never silently trusted.

Realness questions are also answered exactly where it matters: an integer
pseudo-remainder Sturm chain counts distinct real roots with no rounding at
all, so a "this polynomial has a real zero" verdict is a certificate, not a
float comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import mpmath
from mpmath import mp

from .polys import IntPoly


class Verdict(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    INDETERMINATE = "indeterminate"

    def __bool__(self) -> bool:
        return self is Verdict.HOLDS


@dataclass(frozen=True)
class RootSet:
    """All complex roots of an integer polynomial, with quality metadata.

    residual_bound is max|f(root)| / (1 + max|coeff|); the set is verified
    when that bound meets the requested tolerance.  root_error is a Newton
    correction estimate of the worst per-root error, used to derive the
    real/non-real classification tolerance (10x that estimate).
    """

    roots: tuple
    residual_bound: float
    root_error: float
    tolerance: float
    precision_bits: int
    verified: bool

    @property
    def classification_tol(self) -> float:
        floor = math.ldexp(1.0, -(self.precision_bits // 2))
        return max(10.0 * self.root_error, floor)

    def real_roots(self) -> list:
        ctol = self.classification_tol
        return [z for z in self.roots if abs(z.imag) <= ctol]

    def upper_half(self) -> list:
        ctol = self.classification_tol
        return [z for z in self.roots if z.imag > ctol]


def _upper_hull(points: list) -> list:
    hull: list = []
    for p in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) >= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def _hull_starts(coeffs: tuple) -> list:
    """Initial points on circles whose radii come from the Newton polygon."""
    pts = [(i, math.log(abs(c))) for i, c in enumerate(coeffs) if c]
    hull = _upper_hull(pts)
    starts = []
    segments = max(len(hull) - 1, 1)
    for a in range(len(hull) - 1):
        (k1, y1), (k2, y2) = hull[a], hull[a + 1]
        r = math.exp((y1 - y2) / (k2 - k1))
        m = k2 - k1
        for j in range(m):
            th = 2 * math.pi * (j / m + a / segments) + 0.6959
            starts.append(mp.mpc(r * math.cos(th), r * math.sin(th)))
    return starts


def _aberth_once(coeffs: tuple, prec: int, max_iter: int = 300):
    """One Ehrlich-Aberth sweep sequence at fixed precision.

    Returns the best iterate; the caller judges it by residual.  Iteration
    stops when every point's correction reaches rounding level or when the
    largest correction stops shrinking (multiple roots plateau at about the
    square root of the working precision -- their residual is tiny long
    before the corrections are).
    """
    with mp.workprec(prec):
        desc = [mp.mpf(c) for c in reversed(coeffs)]
        ddesc = [c * (len(desc) - 1 - k) for k, c in enumerate(desc[:-1])]
        zs = _hull_starts(coeffs)
        m = len(zs)
        eps = mp.mpf(2) ** (-prec + 12)
        frozen = [False] * m
        best = mp.inf
        stagnant = 0
        for _ in range(max_iter):
            maxcorr = mp.mpf(0)
            moved = False
            for i in range(m):
                if frozen[i]:
                    continue
                z = zs[i]
                fz = mpmath.polyval(desc, z)
                if fz == 0:
                    frozen[i] = True
                    continue
                fpz = mpmath.polyval(ddesc, z)
                if fpz == 0:
                    zs[i] = z + (abs(z) + 1) * eps
                    moved = True
                    continue
                newton = fz / fpz
                repel = mp.mpc(0)
                for j in range(m):
                    if j != i:
                        repel += 1 / (z - zs[j])
                den = 1 - newton * repel
                w = newton / den if den != 0 else newton
                zs[i] = z - w
                corr = abs(w)
                if corr <= (abs(z) + 1) * eps:
                    frozen[i] = True
                else:
                    moved = True
                    if corr > maxcorr:
                        maxcorr = corr
            if not moved:
                break
            if maxcorr < best * 0.5:
                best = maxcorr
                stagnant = 0
            else:
                stagnant += 1
                if stagnant >= 10:
                    break
        return zs


def _sort_key(z):
    return (z.real, z.imag)


def _deflate_linear(coeffs: list, root: int) -> tuple:
    """Split off (x - root)^m exactly over the integers; returns (quotient, m)."""
    mult = 0
    while len(coeffs) > 1:
        q = [0] * (len(coeffs) - 1)
        q[-1] = coeffs[-1]
        for k in range(len(coeffs) - 2, 0, -1):
            q[k - 1] = coeffs[k] + root * q[k]
        if coeffs[0] + root * q[0] != 0:
            break
        coeffs = q
        mult += 1
    return coeffs, mult


@lru_cache(maxsize=None)
def _find_roots_cached(
    coeffs: tuple, precision_bits: int, tol: float, max_precision_bits: int
) -> RootSet:
    degree = len(coeffs) - 1
    # structural rational roots (0 and +-1 occur with multiplicity in these
    # families) are deflated exactly so the iteration only sees simple roots
    k0 = 0
    while coeffs[k0] == 0:
        k0 += 1
    reduced, m_minus = _deflate_linear(list(coeffs[k0:]), -1)
    reduced, m_plus = _deflate_linear(reduced, 1)
    reduced = tuple(reduced)
    exact_roots = [mp.mpc(0)] * k0 + [mp.mpc(-1)] * m_minus + [mp.mpc(1)] * m_plus
    scale = 1 + max(abs(c) for c in coeffs)
    bits = precision_bits
    while True:
        zs = _aberth_once(reduced, bits) if len(reduced) > 1 else []
        with mp.workprec(bits):
            zs = exact_roots + list(zs)
            zs.sort(key=_sort_key)
            desc = [mp.mpf(c) for c in reversed(coeffs)]
            ddesc = [c * (len(desc) - 1 - k) for k, c in enumerate(desc[:-1])]
            resid = mp.mpf(0)
            err = mp.mpf(0)
            for z in zs:
                fz = abs(mpmath.polyval(desc, z))
                if fz > resid:
                    resid = fz
                fpz = abs(mpmath.polyval(ddesc, z))
                if fpz > 0:
                    e = degree * fz / fpz
                else:
                    e = mpmath.sqrt(fz / abs(desc[0]))
                if e > err:
                    err = e
            bound = resid / scale
            best = RootSet(
                roots=tuple(zs),
                residual_bound=float(bound),
                root_error=float(err),
                tolerance=tol,
                precision_bits=bits,
                verified=bool(bound <= tol),
            )
        if best.verified or bits >= max_precision_bits:
            return best
        bits = min(2 * bits, max_precision_bits)


def find_roots(
    f: IntPoly,
    precision_bits: int = 128,
    tol: float = 1e-20,
    max_precision_bits: int = 1024,
) -> RootSet:
    """All complex roots of f, refined on a doubling precision ladder.

    Deterministic for fixed arguments.  If the residual target cannot be met
    at the precision cap the returned set carries verified=False.
    """
    if f.degree < 1:
        raise ValueError("root finding needs degree >= 1")
    return _find_roots_cached(f.coeffs, precision_bits, tol, max_precision_bits)


# ----------------------------------------------------------------------
# exact real-root counting (integer Sturm chain via pseudo-remainders)
# ----------------------------------------------------------------------
def _pseudo_rem(a: list, b: list) -> list:
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        for j in range(len(a)):
            if j != i + db:
                a[j] *= lead
        c = a[i + db]
        a[i + db] = 0
        for j in range(db):
            a[i + j] -= c * b[j]
    out = a[:db]
    while out and out[-1] == 0:
        out.pop()
    return out


def _content(p: list) -> int:
    g = 0
    for c in p:
        g = math.gcd(g, abs(c))
    return g or 1


@lru_cache(maxsize=None)
def count_real_roots(f: IntPoly) -> int:
    """Number of DISTINCT real roots of f, computed exactly.

    Sturm chain with integer pseudo-remainders; each element is the true
    Sturm element times a positive constant, so sign variations agree.
    """
    if f.is_zero():
        raise ValueError("the zero polynomial has no Sturm chain")
    p = list(f.coeffs)
    g = _content(p)
    p = [c // g for c in p]
    if len(p) == 1:
        return 0
    dp = [k * c for k, c in enumerate(p)][1:]
    g = _content(dp)
    chain = [p, [c // g for c in dp]]
    while len(chain[-1]) > 1:
        a, b = chain[-2], chain[-1]
        r = _pseudo_rem(a, b)
        if not r:
            break
        delta = len(a) - len(b)
        flip = 1 if (b[-1] > 0 or (delta + 1) % 2 == 0) else -1
        r = [-c * flip for c in r]
        g = _content(r)
        chain.append([c // g for c in r])

    def variations(sign_at: int) -> int:
        v, prev = 0, None
        for q in chain:
            s = (1 if q[-1] > 0 else -1) * (sign_at ** ((len(q) - 1) % 2))
            if prev is not None and s != prev:
                v += 1
            prev = s
        return v

    return variations(-1) - variations(1)


# ----------------------------------------------------------------------
# exact structural checks
# ----------------------------------------------------------------------
def is_symmetric(f: IntPoly, support_shift: int = 0) -> bool:
    """Palindromic on the window [support_shift .. degree], exactly."""
    if f.is_zero():
        return True
    if any(f.coeffs[:support_shift]):
        return False
    window = f.coeffs[support_shift:]
    return window == window[::-1]


def is_unimodal(f: IntPoly) -> bool:
    """Coefficients rise then fall (weakly), over the whole stored window."""
    cs = f.coeffs
    i = 1
    while i < len(cs) and cs[i - 1] <= cs[i]:
        i += 1
    while i < len(cs) and cs[i - 1] >= cs[i]:
        i += 1
    return i >= len(cs)


# ----------------------------------------------------------------------
# root-based checks
# ----------------------------------------------------------------------
def check_real_rooted_interval(
    f: IntPoly,
    lo,
    hi,
    tol: float = 1e-20,
    precision_bits: int = 256,
) -> Verdict:
    """Are all roots real (|Im| <= tol) and inside [lo-tol, hi+tol]?"""
    rs = find_roots(f, precision_bits, tol)
    if not rs.verified:
        return Verdict.INDETERMINATE
    # compare differences: subtracting tol from an endpoint directly would
    # round it away entirely at these magnitudes
    for z in rs.roots:
        if abs(z.imag) > tol:
            return Verdict.FAILS
        if z.real - lo < -tol or hi - z.real < -tol:
            return Verdict.FAILS
    return Verdict.HOLDS


def _weak_interlace(outer: list, inner: list, tol) -> bool:
    """outer[0] >= inner[0] >= outer[1] >= ... within tol, all descending.

    Tolerances are applied to differences, never to the endpoints, so ties
    that differ only at rounding level survive.
    """
    if len(outer) != len(inner) + 1:
        return False
    for i, v in enumerate(inner):
        if outer[i] - v < -tol or v - outer[i + 1] < -tol:
            return False
    return True


def check_interlace_real(
    f: IntPoly,
    big: IntPoly,
    tol: float = 1e-20,
    precision_bits: int = 256,
) -> Verdict:
    """Do the real roots of f weakly interlace those of big (degree f + 1)?"""
    if big.degree != f.degree + 1:
        raise ValueError("interlacing needs deg big = deg f + 1")
    rf = find_roots(f, precision_bits, tol)
    rF = find_roots(big, precision_bits, tol)
    if not (rf.verified and rF.verified):
        return Verdict.INDETERMINATE
    if any(abs(z.imag) > tol for z in rf.roots) or any(
        abs(z.imag) > tol for z in rF.roots
    ):
        return Verdict.FAILS
    small = sorted((z.real for z in rf.roots), reverse=True)
    large = sorted((z.real for z in rF.roots), reverse=True)
    return Verdict.HOLDS if _weak_interlace(large, small, tol) else Verdict.FAILS


def check_separation_complex(
    f: IntPoly,
    big: IntPoly,
    tol: float = 1e-20,
    precision_bits: int = 256,
) -> Verdict:
    """Conjugate-pair separation for polynomials with degree gap two.

    Both polynomials must be free of real zeros; a real zero is a
    counterexample and yields FAILS (it is reported, not raised).  Writing
    the factors as (x + p +/- q i) -- so p is the negated real part and q
    the imaginary magnitude -- the sorted p-sequence of f must weakly
    interlace the sorted s-sequence of big, and likewise q against t, each
    within tol.

    Realness is decided exactly by the Sturm count; the interlacing
    inequalities use the numerically refined roots.
    """
    if big.degree != f.degree + 2:
        raise ValueError("separation needs deg big = deg f + 2")
    if count_real_roots(f) > 0 or count_real_roots(big) > 0:
        return Verdict.FAILS
    rf = find_roots(f, precision_bits, tol)
    rF = find_roots(big, precision_bits, tol)
    if not (rf.verified and rF.verified):
        return Verdict.INDETERMINATE
    uf, uF = rf.upper_half(), rF.upper_half()
    if 2 * len(uf) != f.degree or 2 * len(uF) != big.degree:
        # numerical classification disagrees with the exact count
        return Verdict.INDETERMINATE
    p = sorted((-z.real for z in uf), reverse=True)
    q = sorted((z.imag for z in uf), reverse=True)
    s = sorted((-z.real for z in uF), reverse=True)
    t = sorted((z.imag for z in uF), reverse=True)
    ok = _weak_interlace(s, p, tol) and _weak_interlace(t, q, tol)
    return Verdict.HOLDS if ok else Verdict.FAILS
