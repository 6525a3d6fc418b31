"""Small GF(2) linear-algebra helpers on integer bitmask vectors.

Vectors are plain Python ints (bit k = coordinate k).  Everything here is
exact and used for code construction and circuit validation, not for the
Monte Carlo hot path.
"""

from __future__ import annotations


def parity(x: int) -> int:
    return bin(x).count("1") & 1


def popcount(x: int) -> int:
    return bin(x).count("1")


def row_reduce(rows: list[int]) -> list[int]:
    """Return a row-reduced basis (list of pivot rows, descending pivot)."""
    basis: list[int] = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
            basis.sort(reverse=True)
    return basis


def rank(rows: list[int]) -> int:
    return len(row_reduce(rows))


def in_span(vec: int, rows: list[int]) -> bool:
    """True iff vec is a GF(2) combination of rows."""
    for b in row_reduce(rows):
        vec = min(vec, vec ^ b)
    return vec == 0


def span(rows: list[int]) -> list[int]:
    """All 2^rank elements spanned by rows (small spaces only)."""
    basis = row_reduce(rows)
    out = [0]
    for b in basis:
        out += [v ^ b for v in out]
    return out
