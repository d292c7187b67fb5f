"""Exact rational simplex for small linear programs.

Solves  maximize c.x  subject to  A x <= b,  x >= 0  with b >= 0, entirely in
Fraction arithmetic.  Bland's anti-cycling rule guarantees termination; the
problems solved here have a handful of variables and constraints, so exactness
matters far more than speed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class LPResult:
    status: str
    optimum: Fraction | None
    witness: tuple[Fraction, ...] | None


def simplex_max(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    """Primal simplex from the slack basis (requires b >= 0)."""
    m = len(A)
    k = len(c)
    c = [Fraction(x) for x in c]
    b = [Fraction(x) for x in b]
    if any(x < 0 for x in b):
        raise DomainError("simplex_max requires b >= 0 (slack start)")
    if any(len(row) != k for row in A):
        raise DomainError("ragged constraint matrix")

    # Tableau columns: k structural variables then m slacks.
    rows = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(m)] + [b[i]]
            for i, row in enumerate(A)]
    cost = c + [Fraction(0)] * m + [Fraction(0)]
    basis = list(range(k, k + m))

    while True:
        enter = next((j for j in range(k + m) if cost[j] > 0), None)
        if enter is None:
            break
        # Ratio test; Bland: among the tight rows pick the smallest basic index.
        leave = None
        best = None
        for i in range(m):
            a = rows[i][enter]
            if a > 0:
                ratio = rows[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            return LPResult(UNBOUNDED, None, None)
        piv = rows[leave][enter]
        rows[leave] = [x / piv for x in rows[leave]]
        for i in range(m):
            if i != leave and rows[i][enter]:
                f = rows[i][enter]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[leave])]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, rows[leave])]
        basis[leave] = enter

    x = [Fraction(0)] * (k + m)
    for i, bi in enumerate(basis):
        x[bi] = rows[i][-1]
    optimum = sum((ci * xi for ci, xi in zip(c, x[:k])), Fraction(0))
    return LPResult(OPTIMAL, optimum, tuple(x[:k]))
