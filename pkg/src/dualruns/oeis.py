"""Comparison of triangle families against OEIS b-files.

A b-file holds one ``index value`` pair per line, with '#' comments.  The
triangle side is read row by row, left to right, rows concatenated.  Since
published offsets vary, the caller may pin which b-file index lines up with
our first term; by default the file's own first index does.
"""

from __future__ import annotations

from pathlib import Path

from . import triangles


class BFileError(ValueError):
    """Unreadable or malformed b-file."""


def read_bfile(path: Path) -> list:
    """Parse to a list of (index, value); strict about the line format."""
    entries = []
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise BFileError(f"cannot read {path}: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileError(f"{path}:{lineno}: expected 'index value', got {raw!r}")
        try:
            entries.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise BFileError(f"{path}:{lineno}: non-integer field in {raw!r}") from exc
    if not entries:
        raise BFileError(f"{path}: no data lines")
    for (i, _), (j, _) in zip(entries, entries[1:]):
        if j != i + 1:
            raise BFileError(f"{path}: indices jump from {i} to {j}")
    return entries


def flatten_family(family: str, max_terms: int) -> list:
    """The family's triangle read left to right, rows concatenated."""
    out = []
    n = triangles.family_first_row(family)
    while len(out) < max_terms:
        row = triangles.family_row(family, n)
        out.extend(c for c in row.coeffs if c)
        n += 1
    return out[:max_terms]


def diff_family(
    family: str, path: Path, max_terms: int, start_offset: int | None = None
) -> tuple[int, str]:
    """Compare a family against a b-file prefix.

    Returns (exit_code, message): 0 on agreement over the overlap, 1 with
    the first mismatch described, 2 on unreadable input.
    """
    try:
        entries = read_bfile(path)
    except BFileError as exc:
        return 2, str(exc)
    offset = entries[0][0] if start_offset is None else start_offset
    ours = flatten_family(family, max_terms)
    compared = 0
    for index, value in entries:
        pos = index - offset
        if pos < 0:
            return 2, f"index {index} precedes the configured start offset {offset}"
        if pos >= len(ours):
            break
        if ours[pos] != value:
            return 1, (
                f"first mismatch at b-file index {index} (term {pos}): "
                f"file has {value}, family {family} has {ours[pos]}"
            )
        compared += 1
    if compared == 0:
        return 2, "no overlapping terms to compare"
    return 0, f"{compared} terms agree"
