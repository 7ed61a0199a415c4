"""Exact arithmetic on monomials and monomial ideals.

Monomials are exponent vectors of fixed length.  Ideals are kept as their
unique minimal generating set, sorted by total degree and then in lex order
with ``x0`` most significant (so ``x0*x5`` precedes ``x1*x3``).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

import numpy as np

from .complex_core import SimplicialComplex, minimal_nonfaces
from .errors import DomainError, ResourceError

DEFAULT_MAX_GENERATORS = 200_000

# bounded memory for the broadcast divisibility test in minimalize
_CHUNK_CELLS = 4_000_000


@dataclass(frozen=True, order=False)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise DomainError("exponents must be non-negative")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def unit(cls, num_variables: int) -> "Monomial":
        return cls((0,) * num_variables)

    @classmethod
    def from_support(cls, support: Iterable[int], num_variables: int) -> "Monomial":
        exps = [0] * num_variables
        for i in support:
            exps[i] += 1
        return cls(tuple(exps))

    @property
    def num_variables(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def sort_key(self):
        return (self.degree, tuple(-e for e in self.exponents))

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_lengths(self, other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: "Monomial") -> "Monomial":
        _check_lengths(self, other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def __str__(self) -> str:
        return format_monomial(self)


def _check_lengths(a: Monomial, b: Monomial):
    if len(a.exponents) != len(b.exponents):
        raise DomainError(
            f"monomials live in different rings ({len(a.exponents)} vs {len(b.exponents)} variables)")


def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m.exponents):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, num_variables: int) -> Monomial:
    """Inverse of :func:`format_monomial`; repeated factors multiply."""
    text = text.strip()
    exps = [0] * num_variables
    if text == "1":
        return Monomial(tuple(exps))
    for factor in text.split("*"):
        match = _FACTOR.match(factor.strip())
        if not match:
            raise DomainError(f"cannot parse monomial factor {factor!r}")
        idx = int(match.group(1))
        if idx >= num_variables:
            raise DomainError(f"variable x{idx} outside a ring of {num_variables} variables")
        exps[idx] += int(match.group(2) or 1)
    return Monomial(tuple(exps))


def divides(a: Monomial, b: Monomial) -> bool:
    _check_lengths(a, b)
    return all(x <= y for x, y in zip(a.exponents, b.exponents))


def canonical_rows(arr: np.ndarray) -> np.ndarray:
    """Distinct rows sorted by degree, then by exponent vector descending."""
    if len(arr) == 0:
        return arr
    arr = np.unique(arr, axis=0)
    order = np.lexsort(tuple(-arr[:, j] for j in reversed(range(arr.shape[1])))
                       + (arr.sum(axis=1),))
    return arr[order]


def _minimal_rows(arr: np.ndarray) -> np.ndarray:
    """Rows of ``arr`` not divisible by another row, in canonical order."""
    if len(arr) == 0:
        return arr
    arr = canonical_rows(arr)
    degrees = arr.sum(axis=1)
    kept = np.empty((0, arr.shape[1]), dtype=arr.dtype)
    for d in np.unique(degrees):
        bucket = arr[degrees == d]
        if len(kept):
            bucket = bucket[~_divisible_rows(bucket, kept)]
        # equal-degree distinct monomials never divide each other
        kept = np.vstack([kept, bucket])
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its canonical minimal generators.

    No generators is the zero ideal; the unit monomial alone is the unit ideal.
    """

    num_variables: int
    generators: tuple[Monomial, ...]

    @classmethod
    def from_array(cls, num_variables: int, arr: np.ndarray,
                   minimal: bool = False) -> "MonomialIdeal":
        """Build from exponent rows; ``minimal=True`` trusts the caller on minimality."""
        arr = np.asarray(arr, dtype=np.int64).reshape(-1, num_variables)
        rows = canonical_rows(arr) if minimal else _minimal_rows(arr)
        return cls(num_variables, tuple(Monomial(tuple(int(x) for x in r)) for r in rows))

    @classmethod
    def zero(cls, num_variables: int) -> "MonomialIdeal":
        return cls(num_variables, ())

    @classmethod
    def unit(cls, num_variables: int) -> "MonomialIdeal":
        return cls(num_variables, (Monomial.unit(num_variables),))

    def as_array(self) -> np.ndarray:
        return np.array([g.exponents for g in self.generators],
                        dtype=np.int64).reshape(-1, self.num_variables)

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(g.degree == 0 for g in self.generators)

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.generators)

    def __contains__(self, m: Monomial) -> bool:
        return contains_monomial(self, m)

    def __str__(self) -> str:
        return format_ideal(self)


def format_ideal(ideal: MonomialIdeal) -> str:
    return ", ".join(format_monomial(g) for g in ideal.generators)


def parse_ideal(text: str, num_variables: int) -> MonomialIdeal:
    """Read a comma- or newline-separated generator list."""
    pieces = [p for p in re.split(r"[,\n]", text) if p.strip()]
    return minimalize([parse_monomial(p, num_variables) for p in pieces], num_variables)


def minimalize(gens: Sequence[Monomial], num_variables: int | None = None) -> MonomialIdeal:
    """Minimal generating set of the ideal generated by ``gens``."""
    if num_variables is None:
        if not gens:
            raise DomainError("cannot infer the ring of an empty generator list")
        num_variables = len(gens[0].exponents)
    for g in gens:
        if len(g.exponents) != num_variables:
            raise DomainError("generators live in different rings")
    arr = np.array([g.exponents for g in gens], dtype=np.int64).reshape(-1, num_variables)
    return MonomialIdeal.from_array(num_variables, arr)


def stanley_reisner_ideal(c: SimplicialComplex, **kwargs) -> MonomialIdeal:
    gens = [Monomial.from_support(s, c.num_vertices) for s in minimal_nonfaces(c, **kwargs)]
    return minimalize(gens, c.num_vertices)


def _check_ring(I: MonomialIdeal, J: MonomialIdeal):
    if I.num_variables != J.num_variables:
        raise DomainError(
            f"ideals live in different rings ({I.num_variables} vs {J.num_variables} variables)")


def _pairwise(I: MonomialIdeal, J: MonomialIdeal, op, max_gens: int) -> MonomialIdeal:
    a, b = I.as_array(), J.as_array()
    count = len(a) * len(b)
    if count > max_gens:
        raise ResourceError(
            f"{count} intermediate generators exceed the ceiling of {max_gens}")
    if count == 0:
        return MonomialIdeal.zero(I.num_variables)
    combined = op(a[:, None, :], b[None, :, :]).reshape(-1, I.num_variables)
    return MonomialIdeal.from_array(I.num_variables, combined)


def _divisible_rows(arr: np.ndarray, by: np.ndarray) -> np.ndarray:
    """Mask of rows of ``arr`` divisible by at least one row of ``by``."""
    out = np.zeros(len(arr), dtype=bool)
    if len(arr) == 0 or len(by) == 0:
        return out
    step = max(1, _CHUNK_CELLS // (len(by) * arr.shape[1]))
    for lo in range(0, len(arr), step):
        block = arr[lo:lo + step]
        out[lo:lo + step] = (by[None, :, :] <= block[:, None, :]).all(axis=2).any(axis=1)
    return out


def intersect(I: MonomialIdeal, J: MonomialIdeal,
              max_gens: int = DEFAULT_MAX_GENERATORS) -> MonomialIdeal:
    """Generators are the minimal lcm(g, h) over g in I and h in J."""
    _check_ring(I, J)
    a, b = I.as_array(), J.as_array()
    a_in, b_in = _divisible_rows(a, b), _divisible_rows(b, a)
    # a generator already in the other ideal absorbs every lcm it takes part in
    a_out, b_out = a[~a_in], b[~b_in]
    count = len(a_out) * len(b_out)
    if count > max_gens:
        raise ResourceError(
            f"{count} intermediate generators exceed the ceiling of {max_gens}")
    lcms = np.maximum(a_out[:, None, :], b_out[None, :, :]).reshape(-1, I.num_variables)
    return MonomialIdeal.from_array(I.num_variables, np.vstack([a[a_in], b[b_in], lcms]))


def product(I: MonomialIdeal, J: MonomialIdeal,
            max_gens: int = DEFAULT_MAX_GENERATORS) -> MonomialIdeal:
    _check_ring(I, J)
    return _pairwise(I, J, np.add, max_gens)


def power(I: MonomialIdeal, r: int, max_gens: int = DEFAULT_MAX_GENERATORS) -> MonomialIdeal:
    if r < 0:
        raise DomainError("power exponent must be non-negative")
    result = MonomialIdeal.unit(I.num_variables)
    for _ in range(r):
        result = product(result, I, max_gens)
    return result


def contains_monomial(I: MonomialIdeal, m: Monomial) -> bool:
    if len(m.exponents) != I.num_variables:
        raise DomainError("monomial and ideal live in different rings")
    return any(divides(g, m) for g in I.generators)


def monomial_in_power(I: MonomialIdeal, m: Monomial, r: int) -> bool:
    """Whether ``m`` lies in ``I**r`` without expanding the power.

    Depth-first search over how many times each generator is used.
    """
    if r < 1:
        raise DomainError("power exponent must be at least 1")
    if len(m.exponents) != I.num_variables:
        raise DomainError("monomial and ideal live in different rings")
    gens = [g.exponents for g in I.generators if divides(g, m)]
    if not gens:
        return False
    degs = [sum(g) for g in gens]
    min_deg = min(degs)
    if r * min_deg > m.degree:
        return False

    def search(start: int, remaining: tuple[int, ...], left: int, budget: int) -> bool:
        if left == 0:
            return True
        if budget < left * min_deg:
            return False
        for j in range(start, len(gens)):
            g = gens[j]
            if all(x <= y for x, y in zip(g, remaining)):
                rest = tuple(y - x for x, y in zip(g, remaining))
                # reusing g is allowed, hence start=j
                if search(j, rest, left - 1, budget - degs[j]):
                    return True
        return False

    return search(0, m.exponents, r, m.degree)


@dataclass(frozen=True)
class VariablePrime:
    """Prime generated by a set of variables."""

    support: tuple[int, ...]
    num_variables: int

    def __post_init__(self):
        support = tuple(sorted(set(self.support)))
        if not support:
            raise DomainError("a variable prime needs at least one variable")
        if support[0] < 0 or support[-1] >= self.num_variables:
            raise DomainError("prime support outside the ring")
        object.__setattr__(self, "support", support)

    @property
    def height(self) -> int:
        return len(self.support)

    def ideal(self) -> MonomialIdeal:
        return self.power(1)

    def power(self, m: int) -> MonomialIdeal:
        """All degree-``m`` monomials in the support variables."""
        if m < 0:
            raise DomainError("power exponent must be non-negative")
        gens = [Monomial.from_support(c, self.num_variables)
                for c in combinations_with_replacement(self.support, m)]
        return minimalize(gens, self.num_variables)

    def __str__(self) -> str:
        return "<" + ",".join(f"x{i}" for i in self.support) + ">"


def minimal_transversals(edges: Sequence[frozenset[int]]) -> list[tuple[int, ...]]:
    """Inclusion-minimal vertex sets meeting every edge, canonically ordered."""
    edges = [frozenset(e) for e in edges]
    if any(not e for e in edges):
        raise DomainError("an empty hyperedge has no transversal")
    found: set[frozenset[int]] = set()
    seen: set[frozenset[int]] = set()

    def grow(chosen: frozenset[int]):
        if chosen in seen:
            return
        seen.add(chosen)
        for e in edges:
            if not (e & chosen):
                for v in sorted(e):
                    grow(chosen | {v})
                return
        found.add(chosen)

    grow(frozenset())
    minimal = [t for t in found if not any(s < t for s in found)]
    return sorted((tuple(sorted(t)) for t in minimal), key=lambda s: (len(s), s))


def primary_decomposition(I: MonomialIdeal) -> list[VariablePrime]:
    """Minimal primes of a squarefree monomial ideal."""
    if not I.is_squarefree():
        raise DomainError("primary decomposition implemented for squarefree ideals only")
    if I.is_zero():
        raise DomainError("the zero ideal has no variable-generated minimal primes")
    if I.is_unit():
        return []
    edges = [frozenset(g.support) for g in I.generators]
    return [VariablePrime(t, I.num_variables) for t in minimal_transversals(edges)]


def top_up_candidates(arr: np.ndarray, support: Sequence[int], m: int,
                      max_gens: int = DEFAULT_MAX_GENERATORS) -> np.ndarray:
    """Minimal multiples in P^m of each row, P the prime on ``support``.

    A row short of ``k`` units of degree on P yields row + u for every
    degree-k monomial u in P's variables; rows already in P^m pass through.
    The result generates (ideal of arr) ∩ P^m but is not minimalized.
    """
    n = arr.shape[1]
    cols = list(support)
    deficit = np.maximum(m - arr[:, cols].sum(axis=1), 0)
    blocks = [arr[deficit == 0]]
    count = len(blocks[0])
    for k in np.unique(deficit[deficit > 0]):
        group = arr[deficit == k]
        combos = list(combinations_with_replacement(cols, int(k)))
        count += len(group) * len(combos)
        if count > max_gens:
            raise ResourceError(
                f"{count} intermediate generators exceed the ceiling of {max_gens}")
        tops = np.zeros((len(combos), n), dtype=np.int64)
        for row, combo in enumerate(combos):
            for i in combo:
                tops[row, i] += 1
        blocks.append((group[:, None, :] + tops[None, :, :]).reshape(-1, n))
    return np.vstack(blocks)


def intersect_prime_power(I: MonomialIdeal, P: VariablePrime, m: int,
                          max_gens: int = DEFAULT_MAX_GENERATORS) -> MonomialIdeal:
    """I ∩ P^m without listing the generators of P^m."""
    if I.num_variables != P.num_variables:
        raise DomainError("ideal and prime live in different rings")
    return MonomialIdeal.from_array(
        I.num_variables, top_up_candidates(I.as_array(), P.support, m, max_gens))


def intersect_all(ideals: Iterable[MonomialIdeal], num_variables: int,
                  max_gens: int = DEFAULT_MAX_GENERATORS) -> MonomialIdeal:
    """Left fold of :func:`intersect`; the empty intersection is the unit ideal."""
    result = MonomialIdeal.unit(num_variables)
    for J in ideals:
        result = intersect(result, J, max_gens)
    return result
