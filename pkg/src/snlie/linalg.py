"""Exact linear algebra over the rationals.

Nullspace and rank go through fraction-free (Bareiss) elimination on
denominator-cleared integer matrices, so intermediate entries stay integral;
small square solves use plain exact Gaussian elimination.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple

Row = List[Fraction]


def _clear_denominators(rows: Sequence[Sequence[Fraction]]) -> List[List[int]]:
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        lcm = 1
        for x in row:
            lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        ints = [int(x * lcm) for x in row]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


def _bareiss_echelon(rows: Sequence[Sequence[Fraction]]) -> Tuple[List[List[int]], List[int]]:
    """Fraction-free row echelon form; returns (matrix, pivot column list)."""
    m = _clear_denominators(rows)
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: List[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            if all(v == 0 for v in m[i]):
                continue
            fac = m[i][c]
            for j in range(ncols):
                m[i][j] = (m[i][j] * piv - fac * m[r][j]) // prev
        prev = piv
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows or not rows[0]:
        return 0
    return len(_bareiss_echelon(rows)[1])


def nullspace(rows: Sequence[Sequence[Fraction]]) -> List[Row]:
    """Basis of the right kernel of the matrix, one vector per free column."""
    if not rows:
        return []
    ncols = len(rows[0])
    m, pivots = _bareiss_echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        # back-substitute through the echelon rows
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            s = sum((Fraction(m[r][j]) * vec[j] for j in range(c + 1, ncols)), Fraction(0))
            vec[c] = -s / m[r][c]
        basis.append(vec)
    return basis


def solve(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Optional[Row]:
    """One exact solution of A x = b, or None if the system is inconsistent.

    Free variables (if any) are set to zero.
    """
    nrows = len(a)
    if nrows == 0:
        return [] if all(x == 0 for x in b) else None
    ncols = len(a[0])
    m = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    pivots: List[Tuple[int, int]] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                fac = m[i][c]
                m[i] = [x - fac * y for x, y in zip(m[i], m[r])]
        pivots.append((r, c))
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if m[i][ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for pr, pc in pivots:
        x[pc] = m[pr][ncols]
    return x


def in_span(basis: Sequence[Sequence[Fraction]], vec: Sequence[Fraction]) -> bool:
    """Whether vec lies in the row span of `basis`."""
    if all(x == 0 for x in vec):
        return True
    if not basis:
        return False
    cols = [[row[j] for row in basis] for j in range(len(vec))]
    return solve(cols, list(vec)) is not None
