"""Exact rank computation over Q.

Boundary matrices here are sparse with tiny integer entries, so the
persistence-style column reduction (reduce each column against earlier
pivots by its lowest nonzero row) is both simple and fast, and it is exact
over Fractions.  Dense inputs are converted on the way in.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def rank_of_columns(columns: Sequence[dict[int, Fraction]]) -> int:
    """Rank over Q of a matrix given as a list of sparse columns."""
    pivots: dict[int, dict[int, Fraction]] = {}  # low row -> reduced column
    rank = 0
    for col in columns:
        cur = dict(col)
        while cur:
            low = max(cur)
            other = pivots.get(low)
            if other is None:
                break
            factor = cur[low] / other[low]
            for r, v in other.items():
                nv = cur.get(r, Fraction(0)) - factor * v
                if nv:
                    cur[r] = nv
                else:
                    cur.pop(r, None)
        if cur:
            pivots[max(cur)] = cur
            rank += 1
    return rank


def rank_of_int_matrix(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of a dense integer matrix (rows-major)."""
    if not rows:
        return 0
    ncols = len(rows[0])
    columns: list[dict[int, Fraction]] = []
    for j in range(ncols):
        col = {i: Fraction(row[j]) for i, row in enumerate(rows) if row[j]}
        columns.append(col)
    return rank_of_columns(columns)
