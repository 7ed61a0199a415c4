"""Two-phase simplex and branch-and-bound over exact rationals.

Problems have the form ``min c.x`` subject to linear rows with sense
``>=``, ``<=`` or ``==`` and ``x >= 0``.  Pivoting follows Bland's
least-index rule, so the method terminates and is deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Sequence

GE, LE, EQ = ">=", "<=", "=="


@dataclass(frozen=True)
class Row:
    coeffs: tuple[Fraction, ...]
    sense: str
    rhs: Fraction


@dataclass
class LPResult:
    status: str                      # "optimal" or "infeasible"
    value: Fraction | None = None
    x: tuple[Fraction, ...] = ()
    basis: tuple[int, ...] = ()      # basic structural columns, sorted
    duals: tuple[Fraction, ...] = ()  # one multiplier per input row


def make_row(coeffs, sense, rhs) -> Row:
    if sense not in (GE, LE, EQ):
        raise ValueError(f"unknown constraint sense {sense!r}")
    return Row(tuple(Fraction(a) for a in coeffs), sense, Fraction(rhs))


class _Tableau:
    """Dense tableau; column layout is structural | slack/surplus | artificial."""

    def __init__(self, c: Sequence[Fraction], rows: Sequence[Row]):
        n = len(c)
        self.n = n
        self.rows_in = rows
        m = len(rows)
        flipped = []
        for r in rows:
            coeffs, sense, rhs = list(r.coeffs), r.sense, r.rhs
            if rhs < 0:
                coeffs = [-a for a in coeffs]
                rhs = -rhs
                sense = {GE: LE, LE: GE, EQ: EQ}[sense]
            flipped.append((coeffs, sense, rhs, r.rhs < 0))
        self.flip = [f[3] for f in flipped]
        n_slack = sum(1 for f in flipped if f[1] != EQ)
        self.slack0 = n
        self.art0 = n + n_slack
        width = self.art0 + m
        self.width = width
        # identity column for row i: slack (<=) or artificial (>=, ==)
        self.unit_col = [0] * m
        self.A: list[list[Fraction]] = []
        self.b: list[Fraction] = []
        self.basis: list[int] = []
        self.artificial_used = []
        k = 0
        for i, (coeffs, sense, rhs, _) in enumerate(flipped):
            row = list(coeffs) + [Fraction(0)] * (width - n)
            art = self.art0 + i
            if sense == LE:
                row[self.slack0 + k] = Fraction(1)
                self.basis.append(self.slack0 + k)
                self.unit_col[i] = self.slack0 + k
                k += 1
            else:
                if sense == GE:
                    row[self.slack0 + k] = Fraction(-1)
                    k += 1
                row[art] = Fraction(1)
                self.basis.append(art)
                self.unit_col[i] = art
                self.artificial_used.append(art)
            self.A.append(row)
            self.b.append(rhs)
        self.banned: set[int] = set()

    def _reduced_costs(self, cost: list[Fraction]):
        z = [Fraction(0)] * self.width
        obj = Fraction(0)
        for i, bv in enumerate(self.basis):
            cb = cost[bv]
            if cb:
                row = self.A[i]
                for j in range(self.width):
                    if row[j]:
                        z[j] += cb * row[j]
                obj += cb * self.b[i]
        return [cost[j] - z[j] for j in range(self.width)], obj

    def _pivot(self, r: int, col: int):
        piv = self.A[r][col]
        row = [a / piv for a in self.A[r]]
        self.A[r] = row
        self.b[r] /= piv
        for i in range(len(self.A)):
            if i != r:
                f = self.A[i][col]
                if f:
                    other = self.A[i]
                    for j in range(self.width):
                        if row[j]:
                            other[j] -= f * row[j]
                    self.b[i] -= f * self.b[r]
        self.basis[r] = col

    def optimize(self, cost: list[Fraction]):
        while True:
            d, _ = self._reduced_costs(cost)
            entering = next((j for j in range(self.width)
                             if j not in self.banned and d[j] < 0), None)
            if entering is None:
                return
            best = None
            for i in range(len(self.A)):
                a = self.A[i][entering]
                if a > 0:
                    key = (self.b[i] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                raise ArithmeticError("unbounded linear program")
            self._pivot(best[1], entering)

    def solve(self, c: Sequence[Fraction]) -> LPResult:
        phase1 = [Fraction(0)] * self.width
        for j in self.artificial_used:
            phase1[j] = Fraction(1)
        self.optimize(phase1)
        _, infeas = self._reduced_costs(phase1)
        if infeas > 0:
            return LPResult("infeasible")
        # drive remaining (zero-valued) artificials out of the basis
        arts = set(range(self.art0, self.width))
        for i in range(len(self.A)):
            if self.basis[i] in arts:
                col = next((j for j in range(self.art0) if self.A[i][j] != 0), None)
                if col is not None:
                    self._pivot(i, col)
        self.banned = arts
        cost = [Fraction(x) for x in c] + [Fraction(0)] * (self.width - self.n)
        self.optimize(cost)
        d, value = self._reduced_costs(cost)
        x = [Fraction(0)] * self.n
        for i, bv in enumerate(self.basis):
            if bv < self.n:
                x[bv] = self.b[i]
        # row i's identity column carries B^-1 e_i, so its reduced cost is -y_i
        duals = []
        for i, col in enumerate(self.unit_col):
            y = -d[col]
            duals.append(-y if self.flip[i] else y)
        basis = tuple(sorted(bv for bv in self.basis if bv < self.n))
        return LPResult("optimal", value, tuple(x), basis, tuple(duals))


def solve(c: Sequence, rows: Sequence[Row]) -> LPResult:
    """Minimize ``c.x`` over ``x >= 0`` and ``rows``."""
    c = [Fraction(x) for x in c]
    for r in rows:
        if len(r.coeffs) != len(c):
            raise ValueError("row length does not match objective")
    return _Tableau(c, rows).solve(c)


@dataclass
class ILPResult:
    status: str
    value: int | None = None
    x: tuple[int, ...] = ()
    lp_value: Fraction | None = None
    nodes: int = 0


def solve_integer(c: Sequence[int], rows: Sequence[Row],
                  incumbent: Sequence[int] | None = None,
                  max_nodes: int = 200_000) -> ILPResult:
    """Branch-and-bound for integer ``c`` and integer ``x >= 0``.

    ``incumbent`` is an optional feasible integer point used as the initial
    upper bound.  Children branch on the first fractional coordinate, floor
    side first.  Only strict improvements replace the incumbent.
    """
    c = [int(v) for v in c]
    n = len(c)
    best_x = tuple(int(v) for v in incumbent) if incumbent is not None else None
    best = sum(a * b for a, b in zip(c, best_x)) if best_x is not None else None
    root_value = None
    nodes = 0
    stack: list[tuple[Row, ...]] = [()]
    while stack:
        extra = stack.pop()
        nodes += 1
        if nodes > max_nodes:
            raise RuntimeError("branch-and-bound node limit reached")
        res = solve(c, list(rows) + list(extra))
        if res.status != "optimal":
            continue
        if root_value is None:
            root_value = res.value
        # integral objective at integer points
        if best is not None and ceil(res.value) >= best:
            continue
        frac = next((i for i, v in enumerate(res.x) if v.denominator != 1), None)
        if frac is None:
            best_x = tuple(int(v) for v in res.x)
            best = int(res.value)
            continue
        v = res.x[frac]
        unit = [0] * n
        unit[frac] = 1
        up = extra + (make_row(unit, GE, ceil(v)),)
        down = extra + (make_row(unit, LE, floor(v)),)
        stack.append(up)
        stack.append(down)
    if best_x is None:
        return ILPResult("infeasible", lp_value=root_value, nodes=nodes)
    return ILPResult("optimal", best, best_x, root_value, nodes)
