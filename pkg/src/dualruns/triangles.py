"""Recurrence-driven construction of the named polynomial families.

Each family is built row by row from its own recurrence and memoized in an
append-only list.  Where the literature gives two independent routes (a
polynomial recurrence and a coefficient-level one) both are implemented so
the verifier can compare them; the coefficient routes live in the
``*_row_coeffs`` functions.

Families
--------
T      alternating runs over the dual Stirling set (support {1..2n-1})
R      alternating runs over plain permutations
N, M   left/interior peaks over the dual Stirling set
A, B   Eulerian polynomials of types A and B
S      flag descents over signed permutations
C      descents over Stirling permutations (built by brute force)
W, What  interior/left peaks over plain permutations, derived from R
stirling2  Stirling set-partition numbers
"""

from __future__ import annotations

import math

from . import combinat
from .polys import IntPoly

_X = IntPoly.x()
_ONE_MINUS_X2 = IntPoly((1, 0, -1))
_ONE_PLUS_X = IntPoly((1, 1))


def _window_check(name: str, n: int, p: IntPoly, lo: int, hi: int) -> IntPoly:
    """Enforce that row n is supported exactly on {lo..hi} with positive entries."""
    ok = p.degree == hi and all(
        (c > 0 if lo <= k <= hi else c == 0) for k, c in enumerate(p.coeffs)
    )
    if not ok:
        raise AssertionError(f"{name} row {n} escaped its support window [{lo},{hi}]: {p!r}")
    return p


# ----------------------------------------------------------------------
# T: the headline family
# ----------------------------------------------------------------------
_T_ROWS = [IntPoly((1,)), IntPoly((0, 1))]


def t_poly(n: int) -> IntPoly:
    """Row n via the polynomial recurrence
    T_{n+1} = (2nx+1)x T_n + x(1-x^2) T_n'."""
    if n < 0:
        raise ValueError("row index must be nonnegative")
    while len(_T_ROWS) <= n:
        m = len(_T_ROWS) - 1
        prev = _T_ROWS[-1]
        nxt = (IntPoly((0, 1, 2 * m))) * prev + (_X * _ONE_MINUS_X2) * prev.derivative()
        _window_check("T", m + 1, nxt, 1, 2 * (m + 1) - 1)
        _T_ROWS.append(nxt)
    return _T_ROWS[n]


_T_COEFF_ROWS = [[1]]


def t_row_coeffs(n: int) -> list[int]:
    """Row n via the independent coefficient recurrence
    T(n+1,k) = k T(n,k) + T(n,k-1) + (2n-k+2) T(n,k-2)."""
    if n < 0:
        raise ValueError("row index must be nonnegative")
    while len(_T_COEFF_ROWS) <= n:
        m = len(_T_COEFF_ROWS) - 1
        prev = _T_COEFF_ROWS[-1]

        def at(k: int) -> int:
            return prev[k] if 0 <= k < len(prev) else 0

        row = [
            k * at(k) + at(k - 1) + (2 * m - k + 2) * at(k - 2)
            for k in range(2 * (m + 1))
        ]
        _T_COEFF_ROWS.append(row)
    return list(_T_COEFF_ROWS[n])


# ----------------------------------------------------------------------
# R: alternating runs over the symmetric group
# ----------------------------------------------------------------------
_R_ROWS = [None, IntPoly((1,))]


def r_poly(n: int) -> IntPoly:
    """Row n via R_{n+2} = x(nx+2) R_{n+1} + x(1-x^2) R_{n+1}', R_1 = 1."""
    if n < 1:
        raise ValueError("rows start at 1")
    while len(_R_ROWS) <= n:
        m = len(_R_ROWS) - 1  # next row index is m+1
        prev = _R_ROWS[-1]
        nxt = IntPoly((0, 2, m - 1)) * prev + (_X * _ONE_MINUS_X2) * prev.derivative()
        if m + 1 >= 2:
            _window_check("R", m + 1, nxt, 1, m)
        _R_ROWS.append(nxt)
    return _R_ROWS[n]


_R_COEFF_ROWS = [None, [1]]


def r_row_coeffs(n: int) -> list[int]:
    """Row n via R(n,k) = k R(n-1,k) + 2 R(n-1,k-1) + (n-k) R(n-1,k-2)."""
    if n < 1:
        raise ValueError("rows start at 1")
    while len(_R_COEFF_ROWS) <= n:
        m = len(_R_COEFF_ROWS)  # index of the row being built
        prev = _R_COEFF_ROWS[-1]

        def at(k: int) -> int:
            return prev[k] if 0 <= k < len(prev) else 0

        row = [
            k * at(k) + 2 * at(k - 1) + (m - k) * at(k - 2) for k in range(max(m, 2))
        ]
        while row and row[-1] == 0:
            row.pop()
        _R_COEFF_ROWS.append(row)
    return list(_R_COEFF_ROWS[n])


# ----------------------------------------------------------------------
# N: left peaks over the dual set
# ----------------------------------------------------------------------
_N_ROWS = [IntPoly((1,))]


def n_poly(n: int) -> IntPoly:
    """Row n via N_{n+1} = (2n+1)x N_n + 2x(1-x) N_n', N_0 = 1."""
    if n < 0:
        raise ValueError("row index must be nonnegative")
    while len(_N_ROWS) <= n:
        m = len(_N_ROWS) - 1
        prev = _N_ROWS[-1]
        nxt = IntPoly((0, 2 * m + 1)) * prev + IntPoly((0, 2, -2)) * prev.derivative()
        _window_check("N", m + 1, nxt, 1, m + 1)
        _N_ROWS.append(nxt)
    return _N_ROWS[n]


# ----------------------------------------------------------------------
# A and B: the two classical Eulerian triangles
# ----------------------------------------------------------------------
_A_ROWS = [None, IntPoly((0, 1))]


def a_poly(n: int) -> IntPoly:
    """Eulerian polynomial A_n = sum x^(des+1), by the classical triangle
    recurrence a(n,k) = k a(n-1,k) + (n-k+1) a(n-1,k-1)."""
    if n < 1:
        raise ValueError("rows start at 1")
    while len(_A_ROWS) <= n:
        m = len(_A_ROWS)  # row being built
        prev = _A_ROWS[-1]

        def at(k: int) -> int:
            return prev.coefficient(k)

        row = [k * at(k) + (m - k + 1) * at(k - 1) for k in range(m + 1)]
        _A_ROWS.append(_window_check("A", m, IntPoly(row), 1, m))
    return _A_ROWS[n]


_B_ROWS = [IntPoly((1,))]


def b_poly(n: int) -> IntPoly:
    """Type-B Eulerian polynomial, by
    B(n,k) = (2k+1) B(n-1,k) + (2n-2k+1) B(n-1,k-1)."""
    if n < 0:
        raise ValueError("row index must be nonnegative")
    while len(_B_ROWS) <= n:
        m = len(_B_ROWS)
        prev = _B_ROWS[-1]

        def at(k: int) -> int:
            return prev.coefficient(k)

        row = [
            (2 * k + 1) * at(k) + (2 * m - 2 * k + 1) * at(k - 1)
            for k in range(m + 1)
        ]
        _B_ROWS.append(_window_check("B", m, IntPoly(row), 0, m))
    return _B_ROWS[n]


# ----------------------------------------------------------------------
# S: flag descents
# ----------------------------------------------------------------------
_S_ROWS = [IntPoly((1,)), IntPoly((1, 1))]


def s_poly(n: int) -> IntPoly:
    """Flag-descent polynomial sum_k S(n,k) x^(k-1), k = 1..2n, by
    S(n,k) = k S(n-1,k) + S(n-1,k-1) + (2n-k+1) S(n-1,k-2).

    S_0 = 1 (the empty signed permutation), as the convolution identities
    require.
    """
    if n < 0:
        raise ValueError("row index must be nonnegative")
    while len(_S_ROWS) <= n:
        m = len(_S_ROWS)
        prev = _S_ROWS[-1]

        def at(k: int) -> int:  # S(m-1, k) with the paper's 1-based k
            return prev.coefficient(k - 1)

        row = [
            k * at(k) + at(k - 1) + (2 * m - k + 1) * at(k - 2)
            for k in range(1, 2 * m + 1)
        ]
        _S_ROWS.append(_window_check("S", m, IntPoly(row), 0, 2 * m - 1))
    return _S_ROWS[n]


# ----------------------------------------------------------------------
# C and the Stirling partition numbers
# ----------------------------------------------------------------------
_C_ROWS: dict[int, IntPoly] = {}


def c_poly(n: int) -> IntPoly:
    """Descent polynomial over the order-n Stirling permutations.

    Deliberately built by brute force; the Carlitz series identity is a
    check on it, not its constructor.
    """
    if n < 0:
        raise ValueError("row index must be nonnegative")
    if n not in _C_ROWS:
        _C_ROWS[n] = combinat.distribution("des", combinat.gen_stirling_perms(n))
    return _C_ROWS[n]


_S2_ROWS = [[1]]


def stirling2(n: int, k: int) -> int:
    """Stirling partition number via S2(n,k) = k S2(n-1,k) + S2(n-1,k-1)."""
    if n < 0:
        raise ValueError("row index must be nonnegative")
    while len(_S2_ROWS) <= n:
        m = len(_S2_ROWS)
        prev = _S2_ROWS[-1]

        def at(j: int) -> int:
            return prev[j] if 0 <= j < len(prev) else 0

        _S2_ROWS.append([j * at(j) + at(j - 1) for j in range(m + 1)])
    if not 0 <= k <= n:
        return 0
    return _S2_ROWS[n][k]


def stirling2_row(n: int) -> IntPoly:
    """Row n of the partition-number triangle as a polynomial."""
    stirling2(n, 0)
    return IntPoly(_S2_ROWS[n])


def bell_number(n: int) -> int:
    """Bell number via the Bell triangle; independent of stirling2."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


# ----------------------------------------------------------------------
# derived pairs
# ----------------------------------------------------------------------
def w_pair(n: int) -> tuple[IntPoly, IntPoly]:
    """(W_n, What_n) from the identity (1+x)^2 R_n / (2x) = x W(x^2) + What(x^2).

    Defined for n >= 2: at n = 1 the left side is not a polynomial.  The
    exactness of the division by 2x is checked, so a broken R row upstream
    surfaces here as an error.
    """
    if n < 2:
        raise ValueError("the peak/run relation needs n >= 2")
    f = (_ONE_PLUS_X * _ONE_PLUS_X) * r_poly(n)
    g = f.divexact_x(1).divexact_scalar(2)
    even, odd = g.parity_split()
    return odd, even


def mn_pair(n: int) -> tuple[IntPoly, IntPoly]:
    """(M_n, N_n) by parity-splitting (1+x) T_n = x M(x^2) + N(x^2)."""
    if n < 0:
        raise ValueError("row index must be nonnegative")
    even, odd = (_ONE_PLUS_X * t_poly(n)).parity_split()
    return odd, even


def m_poly(n: int) -> IntPoly:
    """M_n as the degree-n reversal of N_n (independent of mn_pair)."""
    return n_poly(n).reversed_within(n)


def t_from_m(n: int) -> IntPoly:
    """Rebuild T_n from the M family:
    T_n = M_n(x^2) + sum_{k<n} C(n,k) M_k(x^2) (x-1)^(n-k) (x+1)^(n-k-1)."""
    if n < 1:
        raise ValueError("rows start at 1")
    acc = m_poly(n).stretch(2)
    x_minus_1 = IntPoly((-1, 1))
    for k in range(n):
        term = (
            m_poly(k).stretch(2) if k else IntPoly((1,))
        ) * math.comb(n, k)
        acc = acc + term * x_minus_1 ** (n - k) * _ONE_PLUS_X ** (n - k - 1)
    return acc


# ----------------------------------------------------------------------
# family registry for the CLI and the row cache
# ----------------------------------------------------------------------
FAMILY_NAMES = ("T", "R", "N", "A", "B", "S", "C", "stirling2", "W", "What", "M")


def family_row(family: str, n: int) -> IntPoly:
    if family == "T":
        return t_poly(n)
    if family == "R":
        return r_poly(n)
    if family == "N":
        return n_poly(n)
    if family == "A":
        return a_poly(n)
    if family == "B":
        return b_poly(n)
    if family == "S":
        return s_poly(n)
    if family == "C":
        return c_poly(n)
    if family == "stirling2":
        return stirling2_row(n)
    if family == "W":
        return w_pair(n)[0]
    if family == "What":
        return w_pair(n)[1]
    if family == "M":
        return mn_pair(n)[0]
    raise ValueError(f"unknown family {family!r}")


def family_first_row(family: str) -> int:
    """Smallest row index the CLI emits for a family."""
    return 2 if family in ("W", "What") else 1


def family_row_sum(family: str, n: int) -> int:
    """Independent closed-form row sum used to validate cached rows."""
    if family in ("T", "N", "C", "M"):
        return combinat.double_factorial_odd(n)
    if family in ("R", "A", "W", "What"):
        return math.factorial(n)
    if family in ("B", "S"):
        return (1 << n) * math.factorial(n)
    if family == "stirling2":
        return bell_number(n)
    raise ValueError(f"unknown family {family!r}")
