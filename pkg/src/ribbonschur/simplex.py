"""Exact phase-one simplex for linear feasibility.

Pivoting follows Bland's rule (lowest-index entering column, lowest-index
leaving variable among ratio ties), so the method terminates without any
numerical tolerance.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def find_nonnegative_solution(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Return x >= 0 with A x = b, or None if there is none."""
    m = len(A)
    n = len(A[0]) if m else 0
    rows = []
    for i in range(m):
        sign = -1 if b[i] < 0 else 1
        rows.append([Fraction(sign * a) for a in A[i]] + [Fraction(int(j == i)) for j in range(m)]
                    + [Fraction(sign * b[i])])
    basis = [n + i for i in range(m)]
    width = n + m

    # phase-one objective: minimise the sum of artificials
    cost = [Fraction(0)] * n + [Fraction(1)] * m + [Fraction(0)]
    for row in rows:
        cost = [c - r for c, r in zip(cost, row)]

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i, row in enumerate(rows):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:  # cannot happen for a bounded phase-one problem
            raise RuntimeError("phase-one problem unbounded")
        _pivot(rows, cost, leave, enter)
        basis[leave] = enter

    if cost[-1] != 0:
        return None
    x = [Fraction(0)] * width
    for i, j in enumerate(basis):
        x[j] = rows[i][-1]
    x = x[:n]
    for i in range(m):
        if sum(Fraction(a) * xi for a, xi in zip(A[i], x)) != b[i]:
            raise AssertionError("simplex produced an invalid certificate")
    return x


def _pivot(rows, cost, r, c):
    inv = 1 / rows[r][c]
    rows[r] = [v * inv for v in rows[r]]
    for i, row in enumerate(rows):
        if i != r and row[c]:
            f = row[c]
            rows[i] = [v - f * w for v, w in zip(row, rows[r])]
    if cost[c]:
        f = cost[c]
        cost[:] = [v - f * w for v, w in zip(cost, rows[r])]
