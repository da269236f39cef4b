"""Exact primal simplex for packing LPs.

Solves  max 1.c  s.t.  A c <= b,  c >= 0  with A, b non-negative, entirely in
``fractions.Fraction``. The origin is feasible (b >= 0), so the slack basis is
a valid start and no phase one is needed. Pivoting follows Bland's rule, which
rules out cycling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
THRESHOLD = "threshold"


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Fraction | None
    primal: tuple[Fraction, ...]
    # Only meaningful when status == OPTIMAL.
    dual: tuple[Fraction, ...]
    pivots: int


def max_packing(
    columns: Sequence[Sequence[int]],
    rhs: Sequence[int],
    stop_at: Fraction | int | None = None,
) -> LPResult:
    """Maximize the sum of the coefficients of ``columns`` packed under ``rhs``.

    ``columns[i]`` is the i-th column of A (length ``len(rhs)``). If ``stop_at``
    is given, the method returns as soon as a feasible point of that objective
    value is reached (status ``THRESHOLD``); the primal is then feasible but
    not necessarily optimal and no dual is reported.
    """
    m = len(columns)
    rows = len(rhs)
    width = m + rows
    tab = [
        [Fraction(columns[j][i]) for j in range(m)] + [Fraction(int(i == k)) for k in range(rows)] + [Fraction(rhs[i])]
        for i in range(rows)
    ]
    basis = list(range(m, width))
    reduced = [Fraction(1)] * m + [Fraction(0)] * rows
    value = Fraction(0)
    pivots = 0

    def primal() -> tuple[Fraction, ...]:
        x = [Fraction(0)] * m
        for i, var in enumerate(basis):
            if var < m:
                x[var] = tab[i][-1]
        return tuple(x)

    while True:
        if stop_at is not None and value >= stop_at:
            return LPResult(THRESHOLD, value, primal(), (), pivots)
        entering = next((j for j in range(width) if reduced[j] > 0), None)
        if entering is None:
            dual = tuple(-reduced[m + i] for i in range(rows))
            return LPResult(OPTIMAL, value, primal(), dual, pivots)

        leave = None
        best = None
        for i in range(rows):
            coef = tab[i][entering]
            if coef > 0:
                ratio = tab[i][-1] / coef
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return LPResult(UNBOUNDED, None, primal(), (), pivots)

        pivot_row = tab[leave]
        p = pivot_row[entering]
        if p != 1:
            pivot_row[:] = [v / p for v in pivot_row]
        for i in range(rows):
            if i != leave:
                f = tab[i][entering]
                if f:
                    row = tab[i]
                    for k in range(width + 1):
                        if pivot_row[k]:
                            row[k] -= f * pivot_row[k]
        f = reduced[entering]
        for k in range(width):
            if pivot_row[k]:
                reduced[k] -= f * pivot_row[k]
        value += f * pivot_row[-1]
        basis[leave] = entering
        pivots += 1
