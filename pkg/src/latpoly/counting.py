"""Lattice-point counting, dilation counts and exact volumes.

Points are found by scanning coordinate fibres: the range of ``x_k`` is cut
out by the facets of the projection onto the first ``k + 1`` coordinates, so
only cells whose prefix lies in the projected polytope are ever visited. The
facet systems are computed once per polytope and rescaled for dilations.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator

from .core import (
    BoxLimitError,
    InternalConsistencyError,
    LatticePoint,
    LatticePolytope,
    UndefinedBoundError,
)
from .hull import PointLocation, coordinate_projection_facets

DEFAULT_BOX_LIMIT = 10**8
BOX_LIMIT_ENV = "CASTELNUOVO_BOX_LIMIT"


def box_limit() -> int:
    """Cell limit for one lattice scan; ``CASTELNUOVO_BOX_LIMIT`` overrides the default."""
    raw = os.environ.get(BOX_LIMIT_ENV)
    if raw:
        return int(raw)
    return DEFAULT_BOX_LIMIT


def lower_bound_nvol(b: int, c: int, d: int) -> int:
    """``d*c + (d-1)*b - d**2 + 2``: the least normalized volume allowed by (b, c, d).

    Only defined when the polytope has interior lattice points.
    """
    if c <= 0:
        raise UndefinedBoundError(f"the bound needs c >= 1, got c = {c}")
    return d * c + (d - 1) * b - d * d + 2


@dataclass(frozen=True)
class LatticeProfile:
    b: int
    c: int
    total: int
    nvol: int
    dim: int

    @property
    def lower_bound(self) -> int | None:
        return lower_bound_nvol(self.b, self.c, self.dim) if self.c > 0 else None

    @property
    def castelnuovo(self) -> bool | None:
        """Equality in the minimal-volume bound; None when there are no interior points."""
        if self.c == 0:
            return None
        return self.nvol == self.lower_bound

    def as_tuple(self) -> tuple[int, int, int]:
        return self.b, self.c, self.nvol


# Per coordinate level: rows (a_k, a_prefix, offset) of the projected facets.
_Systems = tuple[tuple[tuple[int, tuple[int, ...], int], ...], ...]


@lru_cache(maxsize=1024)
def _fibre_systems(p: LatticePolytope) -> _Systems:
    levels = []
    for k in range(1, p.dim + 1):
        rows = tuple(
            (f.normal[k - 1], f.normal[: k - 1], f.offset)
            for f in coordinate_projection_facets(p, k)
        )
        levels.append(rows)
    return tuple(levels)


def _fibre(rows, prefix, t):
    """Integer range of the next coordinate plus slack data for tightness tests.

    Returns (lo, hi, flat_tight, ups, downs) where ``ups``/``downs`` hold
    (a_k, rhs) of the facets bounding the coordinate from above/below.
    """
    lo = hi = None
    flat_tight = False
    ups = []
    downs = []
    for a, head, beta in rows:
        rhs = beta * t
        for x, y in zip(head, prefix):
            rhs -= x * y
        if a > 0:
            q = rhs // a
            if hi is None or q < hi:
                hi = q
            ups.append((a, rhs))
        elif a < 0:
            q = -((-rhs) // a)
            if lo is None or q > lo:
                lo = q
            downs.append((a, rhs))
        elif rhs == 0:
            flat_tight = True
    return lo, hi, flat_tight, ups, downs


def _walk(p: LatticePolytope, t: int, limit: int | None, visit) -> None:
    """Drive ``visit(prefix, lo, hi, flat_tight, ups, downs)`` over every last-level fibre."""
    if limit is None:
        limit = box_limit()
    systems = _fibre_systems(p)
    d = p.dim
    cells = 0

    def rec(k: int, prefix: tuple[int, ...]):
        nonlocal cells
        lo, hi, flat_tight, ups, downs = _fibre(systems[k], prefix, t)
        if lo > hi:
            return
        cells += hi - lo + 1
        if cells > limit:
            raise BoxLimitError(cells, limit)
        if k == d - 1:
            visit(prefix, lo, hi, flat_tight, ups, downs)
            return
        for x in range(lo, hi + 1):
            rec(k + 1, prefix + (x,))

    rec(0, ())


def _tight(bounds, x) -> bool:
    return any(a * x == rhs for a, rhs in bounds)


def _fibre_boundary(lo, hi, flat_tight, ups, downs) -> set[int]:
    if flat_tight:
        return set(range(lo, hi + 1))
    # a bounding facet can only be tight at the corresponding end of the fibre
    out = set()
    if _tight(downs, lo):
        out.add(lo)
    if _tight(ups, hi):
        out.add(hi)
    return out


@lru_cache(maxsize=8192)
def _count(p: LatticePolytope, t: int, limit: int | None) -> tuple[int, int]:
    boundary = interior = 0

    def visit(prefix, lo, hi, flat_tight, ups, downs):
        nonlocal boundary, interior
        nb = len(_fibre_boundary(lo, hi, flat_tight, ups, downs))
        boundary += nb
        interior += hi - lo + 1 - nb

    _walk(p, t, limit, visit)
    return boundary, interior


def count_points(p: LatticePolytope, t: int = 1, limit: int | None = None) -> tuple[int, int]:
    """(boundary, interior) lattice-point counts of the dilation ``t * p``."""
    if t < 0:
        raise ValueError("dilation factor must be nonnegative")
    if t == 0:
        return 1, 0
    return _count(p, t, limit if limit is not None else box_limit())


def iter_lattice_points(
    p: LatticePolytope, t: int = 1, limit: int | None = None
) -> Iterator[tuple[LatticePoint, PointLocation]]:
    found: list[tuple[LatticePoint, PointLocation]] = []

    def visit(prefix, lo, hi, flat_tight, ups, downs):
        edge = _fibre_boundary(lo, hi, flat_tight, ups, downs)
        for x in range(lo, hi + 1):
            loc = PointLocation.BOUNDARY if x in edge else PointLocation.INTERIOR
            found.append((prefix + (x,), loc))

    _walk(p, t, limit, visit)
    return iter(found)


def enumerate_lattice_points(
    p: LatticePolytope, limit: int | None = None
) -> list[tuple[LatticePoint, PointLocation]]:
    """Every lattice point of ``p`` with its location, in lexicographic order."""
    return list(iter_lattice_points(p, 1, limit))


def ehrhart_values(p: LatticePolytope, T: int, limit: int | None = None) -> list[int]:
    """``[L(0), ..., L(T)]`` with ``L(t)`` the number of lattice points in ``t * p``."""
    if T < 0:
        raise ValueError("T must be nonnegative")
    return [sum(count_points(p, t, limit)) for t in range(T + 1)]


def normalized_volume(p: LatticePolytope, limit: int | None = None) -> int:
    """``d! * vol(p)`` as the d-th forward difference of the Ehrhart values at 0."""
    d = p.dim
    L = ehrhart_values(p, d, limit)
    nvol = sum((-1) ** (d - k) * comb(d, k) * L[k] for k in range(d + 1))
    if nvol < 1:
        raise InternalConsistencyError(f"non-positive normalized volume {nvol}")
    return nvol


def interpolate_at(values: list[int], x: int) -> Fraction:
    """Value at ``x`` of the polynomial of degree < len(values) through (k, values[k])."""
    n = len(values)
    total = Fraction(0)
    for k, y in enumerate(values):
        num = 1
        den = 1
        for m in range(n):
            if m != k:
                num *= x - m
                den *= k - m
        total += Fraction(y * num, den)
    return total


def interior_via_reciprocity(p: LatticePolytope, limit: int | None = None) -> int:
    """Interior point count recovered as ``(-1)^d L(-1)`` from the Ehrhart polynomial."""
    d = p.dim
    value = interpolate_at(ehrhart_values(p, d, limit), -1) * (-1) ** d
    if value.denominator != 1:
        raise InternalConsistencyError(f"interpolated L(-1) is not an integer: {value}")
    return int(value)


def profile(p: LatticePolytope, limit: int | None = None) -> LatticeProfile:
    b, c = count_points(p, 1, limit)
    nvol = normalized_volume(p, limit)
    prof = LatticeProfile(b=b, c=c, total=b + c, nvol=nvol, dim=p.dim)
    if c > 0 and nvol < prof.lower_bound:
        raise InternalConsistencyError(
            f"profile (b={b}, c={c}, nvol={nvol}) violates the lower bound {prof.lower_bound}"
        )
    return prof
