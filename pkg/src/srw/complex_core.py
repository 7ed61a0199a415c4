"""Finite simplicial complexes, the two bipyramid families, and their non-faces.

Vertices are dense integer labels ``0..N``.  A complex is stored by its
facets only; a set is a face iff it lies inside some facet.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import ComplexFormatError, DomainError, ResourceError

DEFAULT_MAX_VERTICES = 20

Subset = tuple[int, ...]


def canonical_order(subsets: Iterable[Iterable[int]]) -> list[Subset]:
    """Sort vertex sets by size, then lexicographically."""
    return sorted({tuple(sorted(s)) for s in subsets}, key=lambda s: (len(s), s))


def _mask(subset: Iterable[int]) -> int:
    m = 0
    for v in subset:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex on ``num_vertices`` labels, given by its facets.

    The constructor accepts any generating family of faces; non-maximal
    entries are dropped and the rest are put in canonical order.
    """

    num_vertices: int
    facets: tuple[Subset, ...]

    def __post_init__(self):
        if not isinstance(self.num_vertices, int) or self.num_vertices < 1:
            raise ComplexFormatError("number of vertices must be a positive integer")
        cleaned = []
        for idx, facet in enumerate(self.facets):
            members = tuple(facet)
            if any(not isinstance(v, int) or isinstance(v, bool) for v in members):
                raise ComplexFormatError(f"facet {idx} has non-integer vertex labels", idx)
            if len(set(members)) != len(members):
                raise ComplexFormatError(f"facet {idx} repeats a vertex", idx)
            bad = [v for v in members if not 0 <= v < self.num_vertices]
            if bad:
                raise ComplexFormatError(
                    f"facet {idx} uses vertex {bad[0]} outside 0..{self.num_vertices - 1}", idx)
            cleaned.append(frozenset(members))
        maximal = {f for f in cleaned if not any(f < g for g in cleaned)}
        covered = set().union(*maximal) if maximal else set()
        missing = sorted(set(range(self.num_vertices)) - covered)
        if missing:
            raise ComplexFormatError(f"vertex {missing[0]} lies in no facet")
        object.__setattr__(self, "facets", tuple(canonical_order(maximal)))
        object.__setattr__(self, "_masks", tuple(_mask(f) for f in self.facets))

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def is_face(self, subset: Iterable[int]) -> bool:
        return is_face(self, subset)

    def to_json(self) -> dict:
        return {"vertices": self.num_vertices, "facets": [list(f) for f in self.facets]}

    @classmethod
    def from_json(cls, data) -> "SimplicialComplex":
        if not isinstance(data, dict) or "vertices" not in data or "facets" not in data:
            raise ComplexFormatError('complex JSON needs keys "vertices" and "facets"')
        facets = data["facets"]
        if not isinstance(facets, list):
            raise ComplexFormatError('"facets" must be a list of vertex lists')
        for idx, f in enumerate(facets):
            if not isinstance(f, list):
                raise ComplexFormatError(f"facet {idx} is not a list", idx)
        return cls(data["vertices"], tuple(tuple(f) for f in facets))


def load_complex(path) -> SimplicialComplex:
    """Read a complex from a JSON file; JSON syntax errors propagate unchanged."""
    with open(path) as fh:
        data = json.load(fh)
    return SimplicialComplex.from_json(data)


def _rim_successor(i: int, n: int) -> int:
    # rim labels are 1..n with x_{n+1} identified with x_1
    return i % n + 1


def bipyramid_complex(n: int) -> SimplicialComplex:
    """Boundary complex of the bipyramid over an n-gon.

    Apexes are 0 and n+1, the rim cycle is 1..n.  Facets are the 2n
    triangles joining an apex to a rim edge.
    """
    if n < 3:
        raise DomainError("bipyramid requires n ≥ 3")
    top, bottom = 0, n + 1
    facets = []
    for i in range(1, n + 1):
        j = _rim_successor(i, n)
        facets.append((top, i, j))
        facets.append((bottom, i, j))
    return SimplicialComplex(n + 2, tuple(facets))


def bipyramidal_graph(n: int) -> SimplicialComplex:
    """One-dimensional complex: rim cycle, apex-rim spokes and the apex-apex edge."""
    if n < 3:
        raise DomainError("bipyramidal graph requires n ≥ 3")
    top, bottom = 0, n + 1
    edges = [(top, bottom)]
    for i in range(1, n + 1):
        edges += [(top, i), (bottom, i), (i, _rim_successor(i, n))]
    return SimplicialComplex(n + 2, tuple(edges))


def is_face(c: SimplicialComplex, subset: Iterable[int]) -> bool:
    members = tuple(subset)
    for v in members:
        if not isinstance(v, int) or not 0 <= v < c.num_vertices:
            raise DomainError(f"vertex {v!r} is not a vertex of the complex")
    m = _mask(members)
    return any(m & f == m for f in c._masks)


def minimal_nonfaces(c: SimplicialComplex,
                     max_vertices: int = DEFAULT_MAX_VERTICES) -> list[Subset]:
    """Minimal non-faces in canonical order.

    Candidates are scanned by increasing size; a candidate containing an
    already found minimal non-face is skipped, so every remaining non-face
    is minimal.  No minimal non-face can exceed the largest facet by more
    than one vertex.
    """
    if c.num_vertices > max_vertices:
        raise ResourceError(
            f"complex has {c.num_vertices} vertices; the ceiling is {max_vertices}")
    found: list[int] = []
    out: list[Subset] = []
    top = min(c.dimension + 2, c.num_vertices)
    for size in range(1, top + 1):
        for cand in combinations(range(c.num_vertices), size):
            m = _mask(cand)
            if any(m & g == g for g in found):
                continue
            if not any(m & f == m for f in c._masks):
                found.append(m)
                out.append(cand)
    return out
