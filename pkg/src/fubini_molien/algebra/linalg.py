"""Exact rank by fraction-free (Bareiss) elimination."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import List, Sequence


def _integer_rows(rows: Sequence[Sequence]) -> List[List[int]]:
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        scale = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * scale) for x in row])
    return out


def bareiss_rank(rows: Sequence[Sequence]) -> int:
    """Rank of a rational matrix.

    Rows are scaled to integers, then reduced with Bareiss' one-step
    fraction-free scheme, where every division is exact.
    """
    a = _integer_rows(rows)
    if not a:
        return 0
    n_rows, n_cols = len(a), len(a[0])
    prev = 1
    rank = 0
    for c in range(n_cols):
        if rank == n_rows:
            break
        pivot = next((r for r in range(rank, n_rows) if a[r][c] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][c]
        for r in range(rank + 1, n_rows):
            f = a[r][c]
            row_r, row_p = a[r], a[rank]
            for k in range(c, n_cols):
                row_r[k] = (p * row_r[k] - f * row_p[k]) // prev
        prev = p
        rank += 1
    return rank
