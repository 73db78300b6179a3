"""
Exact two-phase simplex method over the rationals.

Solves problems in equality form  A x = b, x >= 0  with fractions.Fraction
tableaux. Bland's rule (smallest-index entering column, ratio ties broken by
the smallest basic variable) keeps every run finite and reproducible.

Phase 1 minimises the sum of artificial variables. When that optimum is
positive the problem is infeasible and the terminal tableau yields a Farkas
vector y with y.A <= 0 and y.b > 0.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpSolution:
    status: str
    x: Tuple[Fraction, ...] = ()
    objective: Optional[Fraction] = None
    farkas: Optional[Tuple[Fraction, ...]] = None
    pivots: int = 0


class ExactSimplex:
    """Tableau simplex for A x = b, x >= 0 with exact arithmetic."""

    def __init__(self, a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]):
        self.m = len(a)
        self.n = len(a[0]) if a else 0
        if len(b) != self.m:
            raise ValueError(f"right-hand side has {len(b)} entries for {self.m} rows")
        self.signs = [(-1 if Fraction(bi) < 0 else 1) for bi in b]
        # Row i of the tableau: [A_i | artificial block | rhs], with rhs >= 0.
        self.rows: List[List[Fraction]] = []
        for i in range(self.m):
            s = self.signs[i]
            row = [Fraction(v) * s for v in a[i]]
            row += [Fraction(1 if k == i else 0) for k in range(self.m)]
            row.append(Fraction(b[i]) * s)
            self.rows.append(row)
        self.basis = [self.n + i for i in range(self.m)]
        self.pivots = 0

    # ---- Tableau mechanics ----
    def _pivot(self, objective: List[Fraction], r: int, c: int) -> None:
        pivot_row = self.rows[r]
        p = pivot_row[c]
        if p != 1:
            pivot_row[:] = [v / p for v in pivot_row]
        for i, row in enumerate(self.rows):
            if i == r:
                continue
            f = row[c]
            if f:
                row[:] = [v - f * w for v, w in zip(row, pivot_row)]
        f = objective[c]
        if f:
            objective[:] = [v - f * w for v, w in zip(objective, pivot_row)]
        self.basis[r] = c
        self.pivots += 1

    def _run(self, objective: List[Fraction], allowed: int) -> bool:
        """Bland iterations over columns < allowed. False means unbounded."""
        while True:
            entering = next((j for j in range(allowed) if objective[j] < 0), None)
            if entering is None:
                return True
            best: Optional[Tuple[Fraction, int, int]] = None
            for i, row in enumerate(self.rows):
                coef = row[entering]
                if coef > 0:
                    key = (row[-1] / coef, self.basis[i], i)
                    if best is None or key < best:
                        best = key
            if best is None:
                return False
            self._pivot(objective, best[2], entering)

    def _solution(self) -> Tuple[Fraction, ...]:
        x = [Fraction(0)] * self.n
        for i, var in enumerate(self.basis):
            if var < self.n:
                x[var] = self.rows[i][-1]
        return tuple(x)

    # ---- Phase 1 ----
    def _phase_one(self) -> Tuple[List[Fraction], Fraction]:
        width = self.n + self.m + 1
        objective = [Fraction(0)] * width
        for row in self.rows:
            for j in range(self.n):
                objective[j] -= row[j]
            objective[-1] -= row[-1]
        self._run(objective, self.n + self.m)
        value = -objective[-1]
        logger.debug(f"phase 1 finished after {self.pivots} pivots with value {value}")
        return objective, value

    def find_feasible(self) -> LpSolution:
        """Phase 1 only: a feasible x, or a Farkas certificate of infeasibility."""
        objective, value = self._phase_one()
        if value > 0:
            # Reduced cost of artificial i is 1 - y_i for the sign-adjusted rows.
            y = tuple(self.signs[i] * (1 - objective[self.n + i]) for i in range(self.m))
            return LpSolution(INFEASIBLE, farkas=y, objective=value, pivots=self.pivots)
        return LpSolution(OPTIMAL, x=self._solution(), objective=Fraction(0), pivots=self.pivots)

    # ---- Phase 2 ----
    def _drive_out_artificials(self) -> None:
        keep = []
        for i, var in enumerate(self.basis):
            if var < self.n:
                keep.append(i)
                continue
            col = next((j for j in range(self.n) if self.rows[i][j] != 0), None)
            if col is None:
                continue  # redundant row
            self._pivot([Fraction(0)] * (self.n + self.m + 1), i, col)
            keep.append(i)
        self.rows = [self.rows[i] for i in keep]
        self.basis = [self.basis[i] for i in keep]

    def minimize(self, c: Sequence[Fraction]) -> LpSolution:
        """Minimise c.x subject to A x = b, x >= 0."""
        if len(c) != self.n:
            raise ValueError(f"cost vector has {len(c)} entries for {self.n} columns")
        phase_one = self.find_feasible()
        if phase_one.status == INFEASIBLE:
            return phase_one
        self._drive_out_artificials()
        cost = [Fraction(v) for v in c]
        objective = cost + [Fraction(0)] * self.m + [Fraction(0)]
        for i, var in enumerate(self.basis):
            cb = cost[var]
            if cb:
                objective = [v - cb * w for v, w in zip(objective, self.rows[i])]
        if not self._run(objective, self.n):
            return LpSolution(UNBOUNDED, pivots=self.pivots)
        x = self._solution()
        return LpSolution(OPTIMAL, x=x, objective=sum(ci * xi for ci, xi in zip(cost, x)),
                          pivots=self.pivots)
