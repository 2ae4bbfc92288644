"""Dense exact-rational simplex (phase I) for small feasibility problems.

Used by the polytope vertex oracle, which must not share code paths with
the network simplex it cross-checks.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from gmpy2 import mpq


def find_feasible(A: Sequence[Sequence], b: Sequence):
    """Return some x >= 0 with A x = b, or None when no such x exists.

    Phase-I tableau simplex with one artificial per row and Bland's rule
    for both the entering and the leaving variable.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    rows = []
    for i in range(m):
        row = [mpq(v) for v in A[i]]
        rhs = mpq(b[i])
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        art = [mpq(0)] * m
        art[i] = mpq(1)
        rows.append(row + art + [rhs])
    width = n + m
    basis = [n + i for i in range(m)]
    # reduced costs of the phase-I objective (sum of artificials)
    obj = [mpq(0)] * (width + 1)
    for j in range(n):
        obj[j] = -sum((r[j] for r in rows), mpq(0))
    obj[width] = -sum((r[width] for r in rows), mpq(0))

    while True:
        entering = next((j for j in range(width) if obj[j] < 0), None)
        if entering is None:
            break
        best = None
        for i, r in enumerate(rows):
            a = r[entering]
            if a > 0:
                ratio = r[width] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:  # unbounded phase I cannot happen; objective is >= 0
            raise AssertionError("phase-I objective unbounded")
        pr = best[1]
        prow = rows[pr]
        piv = prow[entering]
        if piv != 1:
            prow = [v / piv for v in prow]
            rows[pr] = prow
        nz = [j for j, p in enumerate(prow) if p]
        for i, r in enumerate(rows):
            c = r[entering]
            if i != pr and c:
                for j in nz:
                    r[j] -= c * prow[j]
        c = obj[entering]
        if c:
            for j in nz:
                obj[j] -= c * prow[j]
        basis[pr] = entering

    if obj[width] != 0:
        return None
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = Fraction(int(rows[i][width].numerator), int(rows[i][width].denominator))
    return x
