"""Brute-force enumeration of combinatorial objects and their statistics.

Everything here is an oracle: generators stream every object of a family
exactly once in lexicographic order, statistics are computed directly from
the definitions, and ``distribution`` folds a statistic over a stream into
an exact generating polynomial.  No recurrence from the triangle layer is
ever consulted, so these values are independent ground truth.

Objects are plain tuples:

* permutation of [m]          -- tuple of distinct entries
* Stirling permutation        -- tuple over {1,1,...,n,n} with the nesting
                                 property (entries between the two copies of
                                 i all exceed i)
* signed permutation          -- tuple whose absolute values permute [n]
* perfect matching of [2n]    -- tuple of (min,max) pairs sorted by min
* trapezoidal word            -- tuple w with 1 <= w[i] <= 2i+1 (0-indexed)
* inversion sequence          -- InvSeq(e, k) with 0 <= e[i] <= i*k
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Iterator, NamedTuple

from .polys import IntPoly

# Generators refuse to enumerate families bigger than this; override per
# call via the ``cap`` argument or globally by assignment.
ENUMERATION_CAP = 10_000_000


class InvSeq(NamedTuple):
    e: tuple
    k: int


def double_factorial_odd(n: int) -> int:
    """(2n-1)!! = 1*3*5*...*(2n-1); equals 1 for n = 0."""
    out = 1
    for i in range(1, n + 1):
        out *= 2 * i - 1
    return out


def _guard(count: int, cap: int | None) -> None:
    limit = ENUMERATION_CAP if cap is None else cap
    if count > limit:
        raise ValueError(f"stream of {count} objects exceeds enumeration cap {limit}")


# ----------------------------------------------------------------------
# generators
# ----------------------------------------------------------------------
def gen_perms(n: int, cap: int | None = None) -> Iterator[tuple]:
    """All permutations of [n] in lexicographic order; n! objects."""
    _guard(math.factorial(n), cap)
    return iter(itertools.permutations(range(1, n + 1)))


def gen_stirling_perms(n: int, cap: int | None = None) -> Iterator[tuple]:
    """All Stirling permutations of order n in lexicographic order.

    Built by inserting the adjacent pair (m,m) into every gap of each
    order-(m-1) object -- the two copies of the maximum are always adjacent,
    so each object is produced exactly once -- then sorted.  (2n-1)!! objects.
    """
    _guard(double_factorial_odd(n), cap)

    def build() -> list:
        level = [()]
        for m in range(1, n + 1):
            level = [
                s[:gap] + (m, m) + s[gap:]
                for s in level
                for gap in range(2 * m - 1)
            ]
        return level

    return iter(sorted(build()))


def is_stirling_perm(seq: tuple) -> bool:
    """Validate the multiset content and the nesting invariant directly."""
    n, rem = divmod(len(seq), 2)
    if rem:
        return False
    if sorted(seq) != sorted(list(range(1, n + 1)) * 2):
        return False
    for i in range(1, n + 1):
        first = seq.index(i)
        second = seq.index(i, first + 1)
        if any(seq[j] < i for j in range(first + 1, second)):
            return False
    return True


def gen_signed_perms(n: int, cap: int | None = None) -> Iterator[tuple]:
    """All signed permutations of [n]; 2^n * n! objects.

    Absolute values run lexicographically; inside each, sign patterns run in
    binary-counter order where the last position flips fastest and + sorts
    before -.
    """
    _guard((1 << n) * math.factorial(n), cap)

    def run() -> Iterator[tuple]:
        if n == 0:
            yield ()
            return
        for absperm in itertools.permutations(range(1, n + 1)):
            for mask in range(1 << n):
                yield tuple(
                    -v if (mask >> (n - 1 - i)) & 1 else v
                    for i, v in enumerate(absperm)
                )

    return run()


def gen_matchings(n: int, cap: int | None = None) -> Iterator[tuple]:
    """All perfect matchings of [2n] as sorted (min,max) pairs; (2n-1)!!."""
    _guard(double_factorial_odd(n), cap)

    def rec(remaining: tuple) -> Iterator[tuple]:
        if not remaining:
            yield ()
            return
        a = remaining[0]
        for i in range(1, len(remaining)):
            b = remaining[i]
            rest = remaining[1:i] + remaining[i + 1 :]
            for tail in rec(rest):
                yield ((a, b),) + tail

    return rec(tuple(range(1, 2 * n + 1)))


def gen_invseqs(n: int, k: int, cap: int | None = None) -> Iterator[InvSeq]:
    """All k-inversion sequences of length n: 0 <= e_i <= (i-1)k."""
    count = 1
    for i in range(1, n + 1):
        count *= (i - 1) * k + 1
    _guard(count, cap)

    def run() -> Iterator[InvSeq]:
        ranges = [range((i - 1) * k + 1) for i in range(1, n + 1)]
        for e in itertools.product(*ranges):
            yield InvSeq(e, k)

    return run()


def gen_trapwords(n: int, cap: int | None = None) -> Iterator[tuple]:
    """All trapezoidal words of length n: 1 <= w_i <= 2i-1; (2n-1)!!."""
    _guard(double_factorial_odd(n), cap)
    ranges = [range(1, 2 * i) for i in range(1, n + 1)]
    return iter(itertools.product(*ranges))


# ----------------------------------------------------------------------
# the dual map
# ----------------------------------------------------------------------
def phi(sigma: tuple) -> tuple:
    """Send the first copy of j to 2j and the second copy to 2j-1."""
    seen = set()
    out = []
    for v in sigma:
        if v in seen:
            out.append(2 * v - 1)
        else:
            seen.add(v)
            out.append(2 * v)
    return tuple(out)


def gen_dual_perms(n: int, cap: int | None = None) -> Iterator[tuple]:
    """The image of the order-n Stirling permutations under the dual map."""
    return (phi(s) for s in gen_stirling_perms(n, cap))


# ----------------------------------------------------------------------
# statistics
# ----------------------------------------------------------------------
def _has_repeats(seq: tuple) -> bool:
    return len(set(seq)) != len(seq)


def des(seq: tuple) -> int:
    """Descents.

    Multiset sequences (Stirling permutations) use the boundary convention
    sigma(2n+1) = 0, so the final entry always descends; plain permutations
    count interior descents only.
    """
    if _has_repeats(seq):
        return sum(1 for i in range(len(seq) - 1) if seq[i] > seq[i + 1]) + (
            1 if seq else 0
        )
    return sum(1 for i in range(len(seq) - 1) if seq[i] > seq[i + 1])


def asc(seq: tuple) -> int:
    """Ascents with the left boundary value 0, for either object kind."""
    prev = 0
    count = 0
    for v in seq:
        if prev < v:
            count += 1
        prev = v
    return count


def plat(seq: tuple) -> int:
    """Plateaux: adjacent equal entries."""
    return sum(1 for i in range(len(seq) - 1) if seq[i] == seq[i + 1])


def altrun(seq: tuple) -> int:
    """Number of alternating runs; 0 for sequences of length <= 1."""
    if len(seq) <= 1:
        return 0
    runs = 1
    for i in range(1, len(seq) - 1):
        if seq[i - 1] < seq[i] > seq[i + 1] or seq[i - 1] > seq[i] < seq[i + 1]:
            runs += 1
    return runs


def ipk(seq: tuple) -> int:
    """Interior peaks: 1 < i < len with neighbours smaller on both sides."""
    return sum(
        1
        for i in range(1, len(seq) - 1)
        if seq[i - 1] < seq[i] > seq[i + 1]
    )


def lpk(seq: tuple) -> int:
    """Left peaks: like interior peaks but index 1 qualifies via pi(0)=0."""
    count = 0
    prev = 0
    for i in range(len(seq) - 1):
        if prev < seq[i] > seq[i + 1]:
            count += 1
        prev = seq[i]
    return count


def asc_plateau(seq: tuple) -> int:
    """Ascent plateaux of a Stirling permutation: pi(i-1) < pi(i) = pi(i+1)."""
    count = 0
    prev = 0
    for i in range(len(seq) - 1):
        if prev < seq[i] == seq[i + 1]:
            count += 1
        prev = seq[i]
    return count


def des_a(pi: tuple) -> int:
    """Type-A descents of a signed permutation (no boundary)."""
    return sum(1 for i in range(len(pi) - 1) if pi[i] > pi[i + 1])


def des_b(pi: tuple) -> int:
    """Type-B descents: boundary pi(0) = 0, so a negative first entry counts."""
    return des_a(pi) + (1 if pi and pi[0] < 0 else 0)


def fdes(pi: tuple) -> int:
    """Flag descents: 2*desA + 1 when the first entry is negative."""
    return 2 * des_a(pi) + (1 if pi and pi[0] < 0 else 0)


def asc_inv(obj: InvSeq) -> int:
    """Ascents of a k-inversion sequence, by exact cross-multiplication.

    Position i ascends when e_i/((i-1)k+1) < e_{i+1}/(ik+1).
    """
    e, k = obj
    count = 0
    for i in range(1, len(e)):
        if e[i - 1] * (i * k + 1) < e[i] * ((i - 1) * k + 1):
            count += 1
    return count


def odd_min_pairs(pairs: tuple) -> int:
    """Matching pairs whose minimal element is odd."""
    return sum(1 for p in pairs if min(p) % 2 == 1)


def distinct(word: tuple) -> int:
    """Number of distinct letters of a trapezoidal word."""
    return len(set(word))


STATS = {
    "des": des,
    "asc": asc,
    "plat": plat,
    "altrun": altrun,
    "ipk": ipk,
    "lpk": lpk,
    "asc_plateau": asc_plateau,
    "desA": des_a,
    "desB": des_b,
    "fdes": fdes,
    "asc_inv": asc_inv,
    "odd_min_pairs": odd_min_pairs,
    "distinct": distinct,
}


def stat(name: str, obj) -> int:
    """Evaluate a named statistic on one object."""
    try:
        fn = STATS[name]
    except KeyError:
        raise ValueError(f"unknown statistic {name!r}") from None
    return fn(obj)


def distribution(stat_name: str, objects: Iterable, shift: int = 0) -> IntPoly:
    """Generating polynomial sum(x^(stat+shift)) over a stream.

    Polynomial addition is associative and commutative, so folding partial
    streams and merging gives bit-identical results for any partitioning.
    """
    fn = STATS.get(stat_name)
    if fn is None:
        raise ValueError(f"unknown statistic {stat_name!r}")
    counts: dict[int, int] = {}
    for obj in objects:
        e = fn(obj) + shift
        if e < 0:
            raise ValueError(f"negative exponent {e} after shift {shift}")
        counts[e] = counts.get(e, 0) + 1
    if not counts:
        return IntPoly()
    out = [0] * (max(counts) + 1)
    for e, c in counts.items():
        out[e] = c
    return IntPoly(out)
