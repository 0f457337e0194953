"""Persistent row cache: one CSV file per family, validated on read.

Files use the same ``n,k,value`` format the CLI prints.  A cached row is
trusted only after it passes two independent checks: its support must be a
contiguous positive window and its coefficient sum must match the family's
closed-form row sum.  Anything that fails validation is recomputed with a
warning -- corrupt data is never silently used.
"""

from __future__ import annotations

import csv
import os
import sys
from pathlib import Path

from . import triangles
from .polys import IntPoly

ENV_VAR = "DUALRUNS_CACHE"
DEFAULT_DIR = ".dualruns_cache"
HEADER = ("n", "k", "value")


def resolve_cache_dir(flag_value: str | None) -> Path:
    """Precedence: explicit flag, then the environment, then the default."""
    if flag_value:
        return Path(flag_value)
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else Path(DEFAULT_DIR)


def _family_path(cache_dir: Path, family: str) -> Path:
    return cache_dir / f"{family}.csv"


def write_rows(cache_dir: Path, family: str, max_n: int) -> Path:
    """Compute and persist rows first..max_n for a family."""
    if family not in triangles.FAMILY_NAMES:
        raise ValueError(f"unknown family {family!r}")
    cache_dir.mkdir(parents=True, exist_ok=True)
    path = _family_path(cache_dir, family)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(HEADER)
        for n in range(triangles.family_first_row(family), max_n + 1):
            row = triangles.family_row(family, n)
            for k, c in enumerate(row.coeffs):
                if c:
                    writer.writerow((n, k, str(c)))
    return path


def _row_is_valid(family: str, n: int, poly: IntPoly) -> bool:
    if poly.is_zero():
        return False
    support = [k for k, c in enumerate(poly.coeffs) if c]
    lo, hi = support[0], support[-1]
    if support != list(range(lo, hi + 1)):
        return False
    if any(c <= 0 for c in poly.coeffs[lo:]):
        return False
    try:
        expected = triangles.family_row_sum(family, n)
    except ValueError:
        return False
    return sum(poly.coeffs) == expected


def _parse_cached(path: Path) -> dict:
    rows: dict[int, dict[int, int]] = {}
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or tuple(header) != HEADER:
            raise ValueError("bad cache header")
        for record in reader:
            if len(record) != 3:
                raise ValueError(f"bad cache record {record!r}")
            n, k, value = int(record[0]), int(record[1]), int(record[2])
            rows.setdefault(n, {})[k] = value
    return rows


def read_rows(cache_dir: Path, family: str, max_n: int) -> list:
    """Rows first..max_n, from cache where valid, recomputed where not.

    Returns a list of (n, IntPoly).  Missing rows are computed
    transparently; invalid rows trigger a warning on stderr and are
    recomputed.
    """
    if family not in triangles.FAMILY_NAMES:
        raise ValueError(f"unknown family {family!r}")
    path = _family_path(cache_dir, family)
    cached: dict = {}
    if path.exists():
        try:
            cached = _parse_cached(path)
        except (ValueError, OSError) as exc:
            print(f"warning: unreadable cache {path}: {exc}; recomputing", file=sys.stderr)
            cached = {}
    out = []
    for n in range(triangles.family_first_row(family), max_n + 1):
        poly = None
        if n in cached:
            coeffs = [0] * (max(cached[n]) + 1)
            for k, v in cached[n].items():
                coeffs[k] = v
            candidate = IntPoly(coeffs)
            if _row_is_valid(family, n, candidate):
                poly = candidate
            else:
                print(
                    f"warning: cached {family} row {n} failed validation; recomputing",
                    file=sys.stderr,
                )
        if poly is None:
            poly = triangles.family_row(family, n)
        out.append((n, poly))
    return out
