"""Exact rank via fraction-free (Bareiss) elimination."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Dict, Hashable, List, Sequence


def integer_rows(rows: Sequence[Dict[Hashable, object]]) -> List[List[int]]:
    """Turn sparse rational rows into dense integer rows over a common
    column order, scaling each row by the lcm of its denominators."""
    cols = sorted({k for r in rows for k in r}, key=repr)
    index = {k: j for j, k in enumerate(cols)}
    out = []
    for r in rows:
        den = 1
        for v in r.values():
            den = lcm(den, Fraction(v).denominator)
        row = [0] * len(cols)
        for k, v in r.items():
            row[index[k]] = int(Fraction(v) * den)
        out.append(row)
    return out


def bareiss_rank(matrix: List[List[int]]) -> int:
    a = [list(r) for r in matrix if any(r)]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if a[r][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, nrows):
            f = a[r][col]
            a[r] = [(p * a[r][j] - f * a[rank][j]) // prev for j in range(ncols)]
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_of(rows: Sequence[Dict[Hashable, object]]) -> int:
    if not rows:
        return 0
    return bareiss_rank(integer_rows(rows))
