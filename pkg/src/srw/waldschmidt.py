"""Exact Waldschmidt constants of squarefree monomial ideals.

α(I^(m)) is the integer optimum of ``min Σ a_i`` subject to ``Σ_{i∈P} a_i ≥ m``
for every minimal prime P.  Dividing by m and letting m grow, the ratio
converges to the optimum of the same program over the rationals with
right-hand side 1 (the cover LP below), which is computed exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import exact_lp
from .errors import DomainError
from .monomial_algebra import MonomialIdeal, VariablePrime, primary_decomposition
from .symbolic_powers import alpha_symbolic

# Fraction is the package's exact rational type
BigRational = Fraction


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


@dataclass(frozen=True)
class CoverLP:
    """min 1ᵀy subject to A y ≥ 1, y ≥ 0, with one 0/1 row per prime."""

    num_variables: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        for r in rows:
            if len(r) != self.num_variables:
                raise DomainError("cover row has the wrong length")
            if any(v not in (0, 1) for v in r):
                raise DomainError("cover rows must be 0/1 vectors")
            if not any(r):
                raise DomainError("cover row with empty support is infeasible")
        if len(set(rows)) != len(rows):
            raise DomainError("duplicate cover rows")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_primes(cls, primes: Sequence[VariablePrime], num_variables: int) -> "CoverLP":
        rows = []
        for P in primes:
            r = [0] * num_variables
            for i in P.support:
                r[i] = 1
            rows.append(tuple(r))
        return cls(num_variables, tuple(rows))

    def to_json(self) -> dict:
        return {"num_variables": self.num_variables, "rows": [list(r) for r in self.rows]}


@dataclass(frozen=True)
class LPSolution:
    optimum: Fraction
    point: tuple[Fraction, ...]
    basis_certificate: tuple[int, ...]
    dual: tuple[Fraction, ...]

    def to_json(self) -> dict:
        return {
            "optimum": format_rational(self.optimum),
            "point": [format_rational(v) for v in self.point],
            "basis": list(self.basis_certificate),
            "dual": [format_rational(v) for v in self.dual],
        }


def check_certificate(p: CoverLP, sol: LPSolution) -> None:
    """Assert primal feasibility, dual feasibility and equal objectives, exactly."""
    y, z = sol.point, sol.dual
    if any(v < 0 for v in y) or any(v < 0 for v in z):
        raise ArithmeticError("negative entry in LP certificate")
    for row in p.rows:
        if sum(v for v, a in zip(y, row) if a) < 1:
            raise ArithmeticError("primal point violates a cover row")
    for j in range(p.num_variables):
        if sum(zi for zi, row in zip(z, p.rows) if row[j]) > 1:
            raise ArithmeticError("dual point violates a packing column")
    if sum(y) != sol.optimum or sum(z) != sol.optimum:
        raise ArithmeticError("primal and dual objectives differ")


def solve_lp(p: CoverLP) -> LPSolution:
    rows = [exact_lp.make_row(r, exact_lp.GE, 1) for r in p.rows]
    res = exact_lp.solve([1] * p.num_variables, rows)
    sol = LPSolution(res.value, res.x, res.basis, res.duals)
    check_certificate(p, sol)
    return sol


def _cover_lp(I: MonomialIdeal) -> CoverLP:
    if not I.is_squarefree():
        raise DomainError("Waldschmidt constants implemented for squarefree ideals only")
    if I.is_zero() or I.is_unit():
        raise DomainError("need a proper non-zero ideal")
    return CoverLP.from_primes(primary_decomposition(I), I.num_variables)


def waldschmidt(I: MonomialIdeal) -> Fraction:
    return solve_lp(_cover_lp(I)).optimum


def waldschmidt_with_certificate(I: MonomialIdeal) -> tuple[CoverLP, LPSolution]:
    p = _cover_lp(I)
    return p, solve_lp(p)


def waldschmidt_sequence(I: MonomialIdeal, max_m: int) -> list[Fraction]:
    """[α(I^(m))/m for m = 1..max_m]."""
    if max_m < 1:
        raise DomainError("max_m must be ≥ 1")
    return [Fraction(alpha_symbolic(I, m).value, m) for m in range(1, max_m + 1)]


def closed_form_bipyramid(n: int) -> Fraction:
    if n < 3:
        raise DomainError("bipyramid requires n ≥ 3")
    return Fraction(2) if n == 3 else Fraction(n, n - 2)


def closed_form_bipyramidal_graph(n: int) -> Fraction:
    if n < 3:
        raise DomainError("bipyramidal graph requires n ≥ 3")
    return Fraction(n + 2, n)
