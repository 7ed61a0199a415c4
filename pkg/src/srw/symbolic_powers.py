"""Symbolic powers of squarefree monomial ideals and the containment problem.

For a squarefree monomial ideal with minimal primes P_1..P_s the m-th
symbolic power is P_1^m ∩ ... ∩ P_s^m, so a monomial x^a lies in it exactly
when the exponents over every prime sum to at least m.  The initial degree
of that ideal is therefore a small covering integer program, which is how
:func:`alpha_symbolic` computes it without expanding any generators.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Sequence

import numpy as np

from . import exact_lp
from .errors import DomainError
from .monomial_algebra import (
    DEFAULT_MAX_GENERATORS,
    Monomial,
    MonomialIdeal,
    VariablePrime,
    format_monomial,
    top_up_candidates,
    monomial_in_power,
    primary_decomposition,
)

log = logging.getLogger(__name__)


def _require_squarefree(I: MonomialIdeal):
    if not I.is_squarefree():
        raise DomainError("symbolic powers implemented for squarefree ideals only")


def _require_order(m: int):
    if not isinstance(m, int) or m < 1:
        raise DomainError("symbolic power order must be an integer ≥ 1")


def _primes(I: MonomialIdeal) -> list[VariablePrime]:
    _require_squarefree(I)
    if I.is_zero() or I.is_unit():
        raise DomainError("need a proper non-zero ideal")
    return primary_decomposition(I)


def symbolic_power(I: MonomialIdeal, m: int,
                   max_gens: int = DEFAULT_MAX_GENERATORS) -> MonomialIdeal:
    """I^(m) as the intersection of m-th powers of the minimal primes.

    Raises ResourceError once an intermediate intersection would exceed
    ``max_gens`` candidate generators; use :func:`alpha_symbolic` when only
    the initial degree is needed.
    """
    _require_order(m)
    _require_squarefree(I)
    if m == 1 or I.is_zero() or I.is_unit():
        return I
    primes = primary_decomposition(I)
    n = I.num_variables
    incidence = np.zeros((len(primes), n), dtype=np.int64)
    for row, P in enumerate(primes):
        incidence[row, list(P.support)] = 1
    gens = primes[0].power(m).as_array()
    for k in range(1, len(primes)):
        cands = np.unique(top_up_candidates(gens, primes[k].support, m, max_gens), axis=0)
        # the partial intersection is upward closed, so a candidate is minimal
        # iff each variable it uses sits in some prime whose sum is exactly m
        A = incidence[:k + 1]
        tight = (cands @ A.T == m).astype(np.int64)
        covered = tight @ A
        gens = cands[np.all((cands == 0) | (covered > 0), axis=1)]
    return MonomialIdeal.from_array(n, gens, minimal=True)


def alpha(I: MonomialIdeal) -> int:
    """Initial degree: least degree of a nonzero element."""
    if I.is_zero():
        raise DomainError("initial degree of the zero ideal is undefined")
    return min(g.degree for g in I.generators)


@dataclass(frozen=True)
class AlphaCertificate:
    value: int
    witness: Monomial
    dual_bound: Fraction

    def to_json(self) -> dict:
        from .waldschmidt import format_rational
        return {"value": self.value, "witness": format_monomial(self.witness),
                "dual_bound": format_rational(self.dual_bound)}


def _cover_rows(primes: Sequence[VariablePrime], n: int, m: int):
    rows = []
    for P in primes:
        coeffs = [0] * n
        for i in P.support:
            coeffs[i] = 1
        rows.append(exact_lp.make_row(coeffs, exact_lp.GE, m))
    return rows


def satisfies_primes(exponents: Sequence[int], primes: Sequence[VariablePrime], m: int) -> bool:
    return all(sum(exponents[i] for i in P.support) >= m for P in primes)


def _balanced_lex_witness(rows, n: int, value: int, start: Sequence[int]) -> tuple[int, ...]:
    """Tie-break among optimal points: least maximum exponent, then lex-least vector."""
    ones = [1] * n
    total = exact_lp.make_row(ones, exact_lp.EQ, value)
    base = list(rows) + [total]
    t = max(1, -(-value // n))
    while t < max(start):
        caps = [exact_lp.make_row(_unit(n, i), exact_lp.LE, t) for i in range(n)]
        if exact_lp.solve_integer([0] * n, base + caps).status == "optimal":
            break
        t += 1
    caps = [exact_lp.make_row(_unit(n, i), exact_lp.LE, t) for i in range(n)]
    fixed: list = []
    point = []
    for i in range(n):
        res = exact_lp.solve_integer(_unit(n, i), base + caps + fixed)
        point.append(res.value)
        fixed.append(exact_lp.make_row(_unit(n, i), exact_lp.EQ, res.value))
    return tuple(point)


def _unit(n: int, i: int) -> list[int]:
    v = [0] * n
    v[i] = 1
    return v


def alpha_symbolic(I: MonomialIdeal, m: int) -> AlphaCertificate:
    """α(I^(m)) via branch-and-bound on the covering LP, with a witness.

    The returned witness is canonical: among all monomials of least degree
    in I^(m) it has the smallest largest exponent, and among those the
    lexicographically smallest exponent vector.
    """
    _require_order(m)
    primes = _primes(I)
    n = I.num_variables
    rows = _cover_rows(primes, n, m)
    relax = exact_lp.solve([1] * n, rows)
    incumbent = [ceil(v) for v in relax.x]
    res = exact_lp.solve_integer([1] * n, rows, incumbent=incumbent)
    witness = _balanced_lex_witness(rows, n, res.value, res.x)
    assert satisfies_primes(witness, primes, m) and sum(witness) == res.value
    return AlphaCertificate(res.value, Monomial(witness), relax.value / m)


def containment_check(I: MonomialIdeal, m: int, r: int,
                      max_gens: int = DEFAULT_MAX_GENERATORS) -> bool:
    """Decide I^(m) ⊆ I^r generator by generator."""
    _require_order(m)
    if not isinstance(r, int) or r < 1:
        raise DomainError("ordinary power exponent must be an integer ≥ 1")
    _primes(I)
    Im = symbolic_power(I, m, max_gens)
    # elements of I^r have degree ≥ r·α(I)
    if alpha(Im) < r * alpha(I):
        return False
    return all(monomial_in_power(I, g, r) for g in Im.generators)


def big_height(I: MonomialIdeal) -> int:
    return max(P.height for P in _primes(I))


def verify_els_hh(I: MonomialIdeal, r: int,
                  max_gens: int = DEFAULT_MAX_GENERATORS) -> bool:
    """Check I^(h·r) ⊆ I^r with h the big height; False means a bug here."""
    h = big_height(I)
    ok = containment_check(I, h * r, r, max_gens)
    if not ok:
        log.error("I^(%d) ⊄ I^%d contradicts the uniform containment theorem; "
                  "this is an implementation bug", h * r, r)
    return ok
