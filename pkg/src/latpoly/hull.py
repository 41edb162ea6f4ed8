"""Exact facet enumeration and point location for lattice polytopes."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .core import (
    DimensionMismatchError,
    LatticePoint,
    LatticePolytope,
    determinant,
    dot,
    integer_rank,
    primitive,
    sub,
)


@dataclass(frozen=True, order=True)
class FacetInequality:
    """Primitive inequality ``normal . x <= offset`` valid on the polytope."""

    normal: tuple[int, ...]
    offset: int

    def value(self, x: Sequence[int]) -> int:
        return self.offset - dot(self.normal, x)

    def scaled(self, t: int) -> "FacetInequality":
        return FacetInequality(self.normal, self.offset * t)


class PointLocation(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


def hyperplane_normal(points: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Integer normal of the hyperplane through ``d`` points of ``R^d``.

    Entries are the signed maximal minors of the edge matrix, so the result
    is the zero vector exactly when the points are affinely dependent.
    """
    d = len(points[0])
    p0 = points[0]
    edges = [sub(q, p0) for q in points[1:]]
    normal = []
    for i in range(d):
        minor = [row[:i] + row[i + 1:] for row in edges]
        det = determinant(minor)
        normal.append(-det if i % 2 else det)
    return tuple(normal)


def _orient(normal: tuple[int, ...], beta: int, points) -> FacetInequality | None:
    """Orient a candidate hyperplane inward, or return None if it cuts the set."""
    below = above = False
    for x in points:
        v = dot(normal, x)
        if v < beta:
            below = True
        elif v > beta:
            above = True
        if below and above:
            return None
    if above:
        return FacetInequality(tuple(-a for a in normal), -beta)
    return FacetInequality(normal, beta)


def facets_bruteforce(points: Sequence[LatticePoint], d: int) -> tuple[FacetInequality, ...]:
    """Reference enumeration: test every d-subset via its signed minors."""
    points = tuple(points)
    found: set[FacetInequality] = set()
    for subset in combinations(points, d):
        normal = hyperplane_normal(subset)
        if not any(normal):
            continue
        normal = primitive(normal)
        f = _orient(normal, dot(normal, subset[0]), points)
        if f is not None:
            found.add(f)
    return tuple(sorted(found))


def _restrict(basis: list[tuple[int, ...]], edge: tuple[int, ...]) -> list[tuple[int, ...]] | None:
    """Sub-lattice basis of ``basis`` orthogonal to ``edge``; None if edge is dependent."""
    prods = [dot(v, edge) for v in basis]
    piv = next((i for i, a in enumerate(prods) if a != 0), None)
    if piv is None:
        return None
    u, a = basis[piv], prods[piv]
    out = []
    for i, v in enumerate(basis):
        if i == piv:
            continue
        b = prods[i]
        if b:
            v = primitive(tuple(a * x - b * y for x, y in zip(v, u)))
        out.append(v)
    return out


def _facets_of_points(points: tuple[LatticePoint, ...], d: int) -> tuple[FacetInequality, ...]:
    # Same d-subset search as facets_bruteforce, walked as a prefix tree: the
    # orthogonal complement of the edge span is updated one point at a time,
    # so a dependent prefix prunes every subset extending it.
    n = len(points)
    found: dict[tuple, FacetInequality | None] = {}
    identity = [tuple(int(i == j) for j in range(d)) for i in range(d)]

    def extend(start: int, base: LatticePoint, basis, depth: int):
        for i in range(start, n - (d - depth) + 1):
            if depth == 0:
                extend(i + 1, points[i], identity, 1)
                continue
            nb = _restrict(basis, sub(points[i], base))
            if nb is None:
                continue
            if depth + 1 < d:
                extend(i + 1, base, nb, depth + 1)
                continue
            normal = nb[0]
            if normal[next(k for k, x in enumerate(normal) if x)] < 0:
                normal = tuple(-x for x in normal)
            beta = dot(normal, base)
            if (normal, beta) not in found:
                found[(normal, beta)] = _orient(normal, beta, points)

    if d == 1:
        vals = [x[0] for x in points]
        return tuple(sorted({FacetInequality((1,), max(vals)), FacetInequality((-1,), -min(vals))}))
    extend(0, points[0], identity, 0)
    return tuple(sorted(f for f in found.values() if f is not None))


@lru_cache(maxsize=1024)
def enumerate_facets(p: LatticePolytope) -> tuple[FacetInequality, ...]:
    """All facets of ``conv(p.points)``, sorted by (normal, offset).

    Every ``d``-subset of the points spanning a hyperplane is tested as a
    supporting hyperplane; surviving hyperplanes are deduplicated on their
    primitive (normal, offset) pair.
    """
    return _facets_of_points(p.points, p.dim)


def coordinate_projection_facets(p: LatticePolytope, k: int) -> tuple[FacetInequality, ...]:
    """Facets of the projection of ``p`` onto its first ``k`` coordinates."""
    if not 1 <= k <= p.dim:
        raise ValueError(f"projection dimension {k} outside 1..{p.dim}")
    if k == p.dim:
        return enumerate_facets(p)
    return _projection_facets(p, k)


@lru_cache(maxsize=1024)
def _projection_facets(p: LatticePolytope, k: int) -> tuple[FacetInequality, ...]:
    pts = tuple(sorted({q[:k] for q in p.points}))
    return _facets_of_points(pts, k)


def classify_point(facets: Sequence[FacetInequality], x: Sequence[int]) -> PointLocation:
    tight = False
    for f in facets:
        if len(f.normal) != len(x):
            raise DimensionMismatchError(
                f"point of length {len(x)} against facet of length {len(f.normal)}"
            )
        slack = f.offset - dot(f.normal, x)
        if slack < 0:
            return PointLocation.OUTSIDE
        if slack == 0:
            tight = True
    return PointLocation.BOUNDARY if tight else PointLocation.INTERIOR


def vertices(p: LatticePolytope) -> tuple[LatticePoint, ...]:
    """The declared points that are genuine vertices of the hull, in input order.

    A point is a vertex iff the normals of the facets through it span ``R^d``.
    """
    facets = enumerate_facets(p)
    out = []
    for x in p.points:
        tight = [f.normal for f in facets if dot(f.normal, x) == f.offset]
        if len(tight) >= p.dim and integer_rank(tight) == p.dim:
            out.append(x)
    return tuple(out)
