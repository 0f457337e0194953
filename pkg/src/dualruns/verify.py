"""Runnable catalogue of every identity the workbench checks.

Each identity binds a stable id to an executable check with two
independently computed sides (recurrence vs. brute force, grammar engine
vs. triangle rows, series machinery vs. recurrence rows, ...), and reports
pass/fail/indeterminate per row index.  Exact checks are binary; numerical
checks are tri-state, and the separation check is flagged as conjecture
evidence -- a numerical outcome there is never presented as a theorem.

Reports are deterministic: identities run in registry order and all values
are either exact or produced by the deterministic root finder.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import mpmath
from mpmath import mp

from . import analytic, combinat, triangles
from .grammar import (
    GRAMMAR_DUAL,
    GRAMMAR_RUNS,
    FormalSum,
    derive_n,
    substitute_ones,
)
from .polys import IntPoly, RatPoly
from .series import TruncSeries
from .theta import theta_iterate

PASS = "pass"
FAIL = "fail"
INDETERMINATE = "indeterminate"

_X = IntPoly.x()
_ONE_PLUS_X = IntPoly((1, 1))

ROOT_TOL = 1e-20
ROOT_BITS = 256
EQ5_RELTOL_EXP = -25  # relative error bound 10^-25
EQ5_BITS = 256
EQ5_POINTS = (Fraction(3, 10), Fraction(1, 2), Fraction(7, 10))


@dataclass
class IdentityCheck:
    """Outcome of one identity over a row range."""

    id: str
    anchor: str
    kind: str
    conjecture: bool
    lo: int
    hi: int
    statuses: list = field(default_factory=list)  # (n, status)
    witnesses: list = field(default_factory=list)  # dicts, one per failure

    @property
    def overall(self) -> str:
        states = {s for _, s in self.statuses}
        if FAIL in states:
            return FAIL
        if INDETERMINATE in states:
            return INDETERMINATE
        return PASS

    @property
    def verdict(self) -> str:
        """Tri-state wording used for numerical checks."""
        return {PASS: "holds", FAIL: "fails", INDETERMINATE: "indeterminate"}[
            self.overall
        ]

    def to_dict(self) -> dict:
        out = {
            "id": self.id,
            "anchor": self.anchor,
            "kind": self.kind,
            "conjecture": self.conjecture,
            "range": [self.lo, self.hi],
            "status": [{"n": n, "status": s} for n, s in self.statuses],
            "overall": self.overall,
            "witnesses": self.witnesses,
        }
        if self.kind == "numerical":
            out["verdict"] = self.verdict
            if self.conjecture:
                out["note"] = "numerical evidence for an open conjecture, not proof"
        return out


def _cmp(n: int, left, right, render=str):
    if left == right:
        return n, PASS, None
    return n, FAIL, {"n": n, "left": render(left), "right": render(right)}


def _per_n(fn: Callable[[int], tuple]) -> Callable[[int, int], list]:
    def run(lo: int, hi: int) -> list:
        return [fn(n) for n in range(lo, hi + 1)]

    return run


# ----------------------------------------------------------------------
# exact recurrence cross-checks
# ----------------------------------------------------------------------
def _run_eq1_vs_eq2(n: int):
    return _cmp(n, triangles.t_poly(n), IntPoly(triangles.t_row_coeffs(n)))


def _run_eq3_vs_eq4(n: int):
    return _cmp(n, triangles.r_poly(n), IntPoly(triangles.r_row_coeffs(n)))


def _run_thm1_oracle(n: int):
    oracle = combinat.distribution("altrun", combinat.gen_dual_perms(n))
    return _cmp(n, triangles.t_poly(n), oracle)


def _run_thm2(n: int):
    t = triangles.t_poly(n)
    ok = analytic.is_symmetric(t, support_shift=1) and analytic.is_unimodal(t)
    if ok:
        return n, PASS, None
    return n, FAIL, {"n": n, "left": str(t), "right": "symmetric+unimodal"}


def _run_rel_peak_runs(n: int):
    w, what = triangles.w_pair(n)
    w_oracle = combinat.distribution("ipk", combinat.gen_perms(n))
    what_oracle = combinat.distribution("lpk", combinat.gen_perms(n))
    return _cmp(n, (w, what), (w_oracle, what_oracle), render=lambda p: f"W={p[0]}, What={p[1]}")


def _run_eq5(n: int):
    r = triangles.r_poly(n)
    a = triangles.a_poly(n)
    with mp.workprec(EQ5_BITS):
        reltol = mp.mpf(10) ** EQ5_RELTOL_EXP
        for xq in EQ5_POINTS:
            x = mp.mpf(xq.numerator) / xq.denominator
            lhs = r(x)
            w = mpmath.sqrt((1 - x) / (1 + x))
            rhs = ((1 + x) / 2) ** (n - 1) * (1 + w) ** (n + 1) * a((1 - w) / (1 + w))
            if abs(lhs - rhs) > reltol * abs(lhs):
                return n, FAIL, {
                    "n": n,
                    "x": str(xq),
                    "left": mpmath.nstr(lhs, 30),
                    "right": mpmath.nstr(rhs, 30),
                }
    return n, PASS, None


def _run_eq6(n: int):
    lhs = _ONE_PLUS_X * triangles.t_poly(n)
    rhs = _X * triangles.m_poly(n).stretch(2) + triangles.n_poly(n).stretch(2)
    return _cmp(n, lhs, rhs)


# ----------------------------------------------------------------------
# exact truncated-series checks
# ----------------------------------------------------------------------
def _series_from_rows(order: int, row) -> TruncSeries:
    coeffs = [row(m).to_rat() * Fraction(1, math.factorial(m)) for m in range(order + 1)]
    return TruncSeries(order, coeffs)


def _run_egf_n(lo: int, hi: int) -> list:
    order = hi
    ns = _series_from_rows(order, triangles.n_poly)
    e2 = TruncSeries(order, (RatPoly(), RatPoly((2, -2)))).exp()
    lhs = ns * ns * (TruncSeries.from_poly(order, RatPoly.one()) - e2 * RatPoly((0, 1)))
    rhs = TruncSeries.from_poly(order, RatPoly((1, -1)))
    return [_cmp(m, lhs.coefficient(m), rhs.coefficient(m)) for m in range(lo, hi + 1)]


def _run_egf_a(lo: int, hi: int) -> list:
    order = hi
    coeffs = [RatPoly.one()] + [
        triangles.a_poly(m).to_rat() * Fraction(1, math.factorial(m))
        for m in range(1, order + 1)
    ]
    aser = TruncSeries(order, coeffs)
    e1 = TruncSeries(order, (RatPoly(), RatPoly((1, -1)))).exp()
    lhs = aser * (TruncSeries.from_poly(order, RatPoly.one()) - e1 * RatPoly((0, 1)))
    rhs = TruncSeries.from_poly(order, RatPoly((1, -1)))
    return [_cmp(m, lhs.coefficient(m), rhs.coefficient(m)) for m in range(lo, hi + 1)]


def _run_egf_t(lo: int, hi: int) -> list:
    order = hi
    ts = _series_from_rows(order, triangles.t_poly)
    expo = TruncSeries(order, (RatPoly(), RatPoly((-1, 0, 1)))).exp()
    xhat = TruncSeries.from_poly(order, RatPoly((0, 1)))
    lhs = (ts * ts * (expo - xhat)) * RatPoly((1, 2, 1))
    rhs = (expo + xhat) * RatPoly((1, 0, -1))
    return [_cmp(m, lhs.coefficient(m), rhs.coefficient(m)) for m in range(lo, hi + 1)]


# ----------------------------------------------------------------------
# convolution identities
# ----------------------------------------------------------------------
def _run_cor1_a(n: int):
    lhs = (_ONE_PLUS_X ** (n - 1) * triangles.a_poly(n)) * 2
    rhs = IntPoly()
    for k in range(n + 1):
        rhs = rhs + (triangles.t_poly(k) * triangles.t_poly(n - k)) * math.comb(n, k)
    return _cmp(n, lhs, rhs)


def _run_cor1_b(n: int):
    acc = IntPoly()
    for k in range(n + 1):
        acc = acc + (
            triangles.t_poly(k) * triangles.b_poly(n - k).stretch(2)
        ) * math.comb(n, k)
    return _cmp(n, triangles.t_poly(n + 1), _X * acc)


def _run_cor1_c(n: int):
    acc = IntPoly()
    for k in range(n + 1):
        acc = acc + (
            triangles.s_poly(k) * triangles.n_poly(n - k).stretch(2)
        ) * math.comb(n, k)
    return _cmp(n, triangles.t_poly(n + 1), _X * acc)


# ----------------------------------------------------------------------
# grammar checks
# ----------------------------------------------------------------------
def _fs_from_terms(terms) -> FormalSum:
    acc = FormalSum.zero()
    for coeff, exps in terms:
        if coeff:
            acc = acc + FormalSum.term(coeff, **exps)
    return acc


def _run_prop1(n: int):
    lhs = derive_n(GRAMMAR_RUNS, FormalSum.term(1, x=2), n)
    row = triangles.r_poly(n + 1)
    rhs = _fs_from_terms(
        (row.coefficient(k), {"x": 2, "y": k, "z": n - k}) for k in range(n + 1)
    )
    res = _cmp(n, lhs, rhs)
    if res[1] != PASS:
        return res
    return _cmp(n, substitute_ones(lhs, ("x", "z")), row)


def _run_prop2(n: int):
    s_row = triangles.s_poly(n)
    b_row = triangles.b_poly(n)
    n_row = triangles.n_poly(n)
    a_row = triangles.a_poly(n)
    displays = (
        (
            FormalSum.term(1, x=1, y=1),
            _fs_from_terms(
                (s_row.coefficient(k - 1), {"x": 1, "y": 2 * n - k + 1, "z": k})
                for k in range(1, 2 * n + 1)
            ),
        ),
        (
            FormalSum.term(1, y=1, z=1),
            _fs_from_terms(
                (b_row.coefficient(k), {"y": 2 * n - 2 * k + 1, "z": 2 * k + 1})
                for k in range(n + 1)
            ),
        ),
        (
            FormalSum.letter("y"),
            _fs_from_terms(
                (n_row.coefficient(k), {"y": 2 * n - 2 * k + 1, "z": 2 * k})
                for k in range(1, n + 1)
            ),
        ),
        (
            FormalSum.letter("z"),
            _fs_from_terms(
                (n_row.coefficient(n - k + 1), {"y": 2 * n - 2 * k + 2, "z": 2 * k - 1})
                for k in range(1, n + 1)
            ),
        ),
        (
            FormalSum.term(1, y=2),
            _fs_from_terms(
                ((1 << n) * a_row.coefficient(k), {"y": 2 * n - 2 * k + 2, "z": 2 * k})
                for k in range(1, n + 1)
            ),
        ),
    )
    for seed, expected in displays:
        got = derive_n(GRAMMAR_DUAL, seed, n)
        if got != expected:
            return n, FAIL, {
                "n": n,
                "seed": str(seed),
                "left": str(got),
                "right": str(expected),
            }
    return n, PASS, None


def _run_thm3(n: int):
    t_row = triangles.t_poly(n)
    a_row = triangles.a_poly(n)
    dx = derive_n(GRAMMAR_DUAL, FormalSum.letter("x"), n)
    expect_dx = _fs_from_terms(
        (t_row.coefficient(k), {"x": 1, "y": k, "z": 2 * n - k})
        for k in range(1, 2 * n)
    )
    res = _cmp(n, dx, expect_dx)
    if res[1] != PASS:
        return res
    res = _cmp(n, substitute_ones(dx, ("x", "z")), t_row)
    if res[1] != PASS:
        return res
    dx2 = derive_n(GRAMMAR_DUAL, FormalSum.term(1, x=2), n)
    y_plus_z = FormalSum.letter("y") + FormalSum.letter("z")
    inner = _fs_from_terms(
        (a_row.coefficient(k), {"y": k, "z": n - k + 1}) for k in range(1, n + 1)
    )
    expect_dx2 = FormalSum.term(2, x=2) * y_plus_z ** (n - 1) * inner
    res = _cmp(n, dx2, expect_dx2)
    if res[1] != PASS:
        return res
    return _cmp(
        n,
        substitute_ones(dx2, ("x", "z")),
        (_ONE_PLUS_X ** (n - 1) * a_row) * 2,
    )


def _run_adin(n: int):
    lhs = triangles.s_poly(n)
    rhs = (_ONE_PLUS_X ** n * triangles.a_poly(n)).divexact_x(1)
    return _cmp(n, lhs, rhs)


def _run_theta(n: int):
    form = theta_iterate(n)
    got = (form.numerator, form.minus_exp, form.plus_exp)
    want = (triangles.t_poly(n), n, n - 1)
    return _cmp(n, got, want, render=lambda v: f"({v[0]}, {v[1]}, {v[2]})")


def _run_t_from_m(n: int):
    return _cmp(n, triangles.t_from_m(n), triangles.t_poly(n))


# ----------------------------------------------------------------------
# oracle equalities over object streams
# ----------------------------------------------------------------------
def _run_n_models(n: int):
    rec = triangles.n_poly(n)
    models = {
        "left peaks over the dual set": combinat.distribution(
            "lpk", combinat.gen_dual_perms(n)
        ),
        "ascent plateaux": combinat.distribution(
            "asc_plateau", combinat.gen_stirling_perms(n)
        ),
        "odd-minimum matchings": combinat.distribution(
            "odd_min_pairs", combinat.gen_matchings(n)
        ),
        "2-inversion sequences": combinat.distribution(
            "asc_inv", combinat.gen_invseqs(n, 2)
        ).reversed_within(n),
    }
    for label, value in models.items():
        if value != rec:
            return n, FAIL, {"n": n, "model": label, "left": str(value), "right": str(rec)}
    return n, PASS, None


def _run_bona(n: int):
    d = combinat.distribution("des", combinat.gen_stirling_perms(n))
    a = combinat.distribution("asc", combinat.gen_stirling_perms(n))
    p = combinat.distribution("plat", combinat.gen_stirling_perms(n))
    if d == a == p:
        return n, PASS, None
    return n, FAIL, {"n": n, "left": f"des={d}, asc={a}", "right": f"plat={p}"}


def _run_carlitz(k: int):
    trunc = 2 * k + 6
    series = IntPoly([triangles.stirling2(m + k, m) for m in range(trunc + 1)])
    product = series * IntPoly((1, -1)) ** (2 * k + 1)
    c_row = triangles.c_poly(k)
    got = [product.coefficient(j) for j in range(trunc + 1)]
    want = [c_row.coefficient(j) for j in range(trunc + 1)]
    return _cmp(k, got, want)


# ----------------------------------------------------------------------
# numerical checks
# ----------------------------------------------------------------------
def _run_conj1(n: int):
    f = triangles.t_poly(n).divexact_x(1)
    big = triangles.t_poly(n + 1).divexact_x(1)
    real_f = analytic.count_real_roots(f)
    real_big = analytic.count_real_roots(big)
    if real_f or real_big:
        which = f"T_{n}/x" if real_f else f"T_{n + 1}/x"
        count = real_f or real_big
        return n, FAIL, {
            "n": n,
            "left": f"{which} has {count} real zeros (exact Sturm count)",
            "right": "all zeros non-real",
        }
    verdict = analytic.check_separation_complex(f, big, ROOT_TOL, ROOT_BITS)
    if verdict is analytic.Verdict.HOLDS:
        return n, PASS, None
    if verdict is analytic.Verdict.INDETERMINATE:
        return n, INDETERMINATE, None
    return n, FAIL, {
        "n": n,
        "left": "sorted real/imaginary parts do not interlace",
        "right": "separation",
    }


def _run_r_zeros(n: int):
    rooted = analytic.check_real_rooted_interval(
        triangles.r_poly(n), -1, 0, ROOT_TOL, ROOT_BITS
    )
    inter = analytic.check_interlace_real(
        triangles.r_poly(n), triangles.r_poly(n + 1), ROOT_TOL, ROOT_BITS
    )
    if rooted is analytic.Verdict.FAILS or inter is analytic.Verdict.FAILS:
        return n, FAIL, {
            "n": n,
            "left": f"real-rooted in [-1,0]: {rooted.value}",
            "right": f"interlaces next row: {inter.value}",
        }
    if rooted is analytic.Verdict.HOLDS and inter is analytic.Verdict.HOLDS:
        return n, PASS, None
    return n, INDETERMINATE, None


# ----------------------------------------------------------------------
# registry
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class _Identity:
    id: str
    anchor: str
    kind: str
    lo: int
    hi: int
    run: Callable[[int, int], list]
    conjecture: bool = False


EXACT = "exact-polynomial"
SERIES = "exact-series"
ORACLE = "oracle-equality"
NUMERICAL = "numerical"

REGISTRY: tuple = (
    _Identity("eq1-vs-eq2", "polynomial and coefficient recurrences for the dual-run triangle agree", EXACT, 0, 12, _per_n(_run_eq1_vs_eq2)),
    _Identity("eq3-vs-eq4", "polynomial and coefficient recurrences for the run triangle agree", EXACT, 1, 12, _per_n(_run_eq3_vs_eq4)),
    _Identity("thm1-oracle", "recurrence rows equal brute-force alternating-run counts over the dual set", ORACLE, 1, 6, _per_n(_run_thm1_oracle)),
    _Identity("thm2", "dual-run rows are symmetric and unimodal", EXACT, 1, 12, _per_n(_run_thm2)),
    _Identity("rel-peak-runs", "(1+x)^2 R/(2x) splits into the interior- and left-peak rows", ORACLE, 2, 8, _per_n(_run_rel_peak_runs)),
    _Identity("eq5-numeric", "run polynomial matches its Eulerian closed form under w = sqrt((1-x)/(1+x))", NUMERICAL, 2, 10, _per_n(_run_eq5)),
    _Identity("eq6", "(1+x)T = x M(x^2) + N(x^2) with M the reversal of N", EXACT, 1, 12, _per_n(_run_eq6)),
    _Identity("egf-N", "left-peak EGF: N(x,z)^2 (1 - x e^{2z(1-x)}) = 1 - x", SERIES, 0, 8, _run_egf_n),
    _Identity("egf-A", "Eulerian EGF: A(x,t)(1 - x e^{t(1-x)}) = 1 - x", SERIES, 0, 8, _run_egf_a),
    _Identity("egf-T", "dual-run EGF, radical-free: (1+x)^2 T(x,z)^2 (E - x) = (E + x)(1 - x^2) with E = e^{z(x^2-1)}", SERIES, 0, 8, _run_egf_t),
    _Identity("cor1-a", "2(1+x)^(n-1) A_n = sum_k C(n,k) T_k T_{n-k}", EXACT, 1, 12, _per_n(_run_cor1_a)),
    _Identity("cor1-b", "T_{n+1} = x sum_k C(n,k) T_k B_{n-k}(x^2)", EXACT, 1, 12, _per_n(_run_cor1_b)),
    _Identity("cor1-c", "T_{n+1} = x sum_k C(n,k) S_k N_{n-k}(x^2)", EXACT, 1, 12, _per_n(_run_cor1_c)),
    _Identity("prop1", "run grammar: D^n(x^2) expands over the next run row", EXACT, 0, 8, _per_n(_run_prop1)),
    _Identity("prop2", "dual grammar: D^n of xy, yz, y, z, y^2 expand over the S, B, N, reversed-N and doubled Eulerian rows", EXACT, 1, 8, _per_n(_run_prop2)),
    _Identity("thm3", "dual grammar: D^n(x) and D^n(x^2) expand over the T and Eulerian rows", EXACT, 1, 8, _per_n(_run_thm3)),
    _Identity("adin", "S_n = (1+x)^n A_n / x", EXACT, 1, 12, _per_n(_run_adin)),
    _Identity("n-models", "four combinatorial models of the left-peak rows match the recurrence", ORACLE, 1, 6, _per_n(_run_n_models)),
    _Identity("bona-equidistribution", "descents, ascents and plateaux are equidistributed over Stirling permutations", ORACLE, 1, 6, _per_n(_run_bona)),
    _Identity("carlitz", "(1-x)^(2k+1) sum_m S2(m+k,m) x^m reproduces the Stirling-descent row C_k", ORACLE, 0, 6, _per_n(_run_carlitz)),
    _Identity("t-from-m", "T rebuilt from the M family plus binomial boundary terms", EXACT, 1, 12, _per_n(_run_t_from_m)),
    _Identity("theta", "iterated x d/dx on sqrt((1+x)/(1-x)) yields the T numerators with exponents (n, n-1)", EXACT, 1, 10, _per_n(_run_theta)),
    _Identity("conj1", "all zeros of T_n/x non-real and consecutive rows separate (open conjecture)", NUMERICAL, 2, 25, _per_n(_run_conj1), conjecture=True),
    _Identity("r-zeros", "R rows real-rooted in [-1,0], consecutive rows interlace", NUMERICAL, 2, 25, _per_n(_run_r_zeros)),
)

_BY_ID = {ident.id: ident for ident in REGISTRY}


def identity_ids() -> list:
    return [ident.id for ident in REGISTRY]


def run_identity(identity_id: str, n_max: int | None = None) -> IdentityCheck:
    """Execute one identity up to n_max (default: its registered range)."""
    ident = _BY_ID.get(identity_id)
    if ident is None:
        raise KeyError(f"unknown identity {identity_id!r}")
    hi = ident.hi if n_max is None else max(ident.lo, n_max)
    check = IdentityCheck(
        id=ident.id,
        anchor=ident.anchor,
        kind=ident.kind,
        conjecture=ident.conjecture,
        lo=ident.lo,
        hi=hi,
    )
    for n, status, witness in ident.run(ident.lo, hi):
        check.statuses.append((n, status))
        if witness is not None:
            check.witnesses.append(witness)
    return check


def run_all(n_max_overrides: dict | None = None, ids: list | None = None) -> list:
    """Run the registry in order; failures are data, not exceptions."""
    overrides = n_max_overrides or {}
    selected = ids if ids is not None else identity_ids()
    return [run_identity(i, overrides.get(i)) for i in selected]


def theorem_failures(checks: list) -> list:
    """Identities that failed and are not conjecture evidence."""
    return [c for c in checks if not c.conjecture and c.overall == FAIL]


def report_json(checks: list) -> str:
    return json.dumps([c.to_dict() for c in checks], indent=2) + "\n"


def report_text(checks: list) -> str:
    lines = []
    for c in checks:
        label = c.verdict if c.kind == NUMERICAL else c.overall
        if c.conjecture:
            label += " (conjecture evidence; numerical, not proof)"
        lines.append(f"{c.id:<24} {c.kind:<18} n={c.lo}..{c.hi:<4} {label}")
        for w in c.witnesses:
            detail = ", ".join(f"{k}={v}" for k, v in w.items())
            lines.append(f"    witness: {detail}")
    return "\n".join(lines) + "\n"
