"""Exact integer domain types shared by every other module.

Everything here is plain Python ``int`` arithmetic. Rational quantities are
``fractions.Fraction`` values, which are always kept in lowest terms with a
positive denominator.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

LatticePoint = tuple[int, ...]
RationalValue = Fraction

# Largest magnitude written as a bare JSON number; larger ints become strings.
JSON_SAFE_INT = 2**53 - 1


class LatticeError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatchError(LatticeError, ValueError):
    pass


class NotFullDimensionalError(LatticeError, ValueError):
    pass


class DuplicateVertexError(LatticeError, ValueError):
    pass


class DomainError(LatticeError, ValueError):
    """A family or operation parameter is outside its stated range."""


class DegenerateSimplexError(LatticeError, ValueError):
    pass


class InternalConsistencyError(LatticeError, AssertionError):
    """A computed quantity contradicts an identity that must hold exactly.

    Raising this means the implementation is wrong, not the mathematics.
    """


class UndefinedBoundError(LatticeError, ValueError):
    """The minimal-volume bound is only stated for polytopes with interior points."""


class NotRealizableError(LatticeError, ValueError):
    """No known family realizes the requested triplet (not a proof of impossibility)."""


class BoxLimitError(LatticeError, RuntimeError):
    """The lattice scan would examine more cells than the configured limit."""

    def __init__(self, cells: int, limit: int):
        self.cells = cells
        self.limit = limit
        super().__init__(f"lattice scan needs at least {cells} cells, limit is {limit}")


def as_point(coords: Iterable) -> LatticePoint:
    """Coerce an iterable of integers (or integer strings) to a lattice point."""
    out = []
    for x in coords:
        if isinstance(x, bool):
            raise TypeError("booleans are not lattice coordinates")
        if isinstance(x, str):
            x = int(x.strip())
        elif not isinstance(x, int):
            if hasattr(x, "__index__"):
                x = x.__index__()
            else:
                raise TypeError(f"non-integer coordinate {x!r}")
        out.append(int(x))
    return tuple(out)


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> LatticePoint:
    return tuple(x - y for x, y in zip(a, b))


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide ``v`` by the gcd of its entries. The zero vector is returned as is."""
    g = math.gcd(*v)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def _check_lengths(rows: Sequence[Sequence[int]], n: int | None = None) -> int:
    lengths = {len(r) for r in rows}
    if n is not None:
        lengths.add(n)
    if len(lengths) > 1:
        raise DimensionMismatchError(f"coordinate lengths differ: {sorted(lengths)}")
    return lengths.pop() if lengths else 0


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    if not rows:
        return 0
    ncols = _check_lengths(rows)
    m = [list(r) for r in rows]
    nrows = len(m)
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        pivot = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, nrows):
            f = m[r][col]
            row = m[r]
            top = m[rank]
            for k in range(col + 1, ncols):
                # exact division is guaranteed by Sylvester's identity
                row[k] = (p * row[k] - f * top[k]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank


def determinant(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss algorithm)."""
    n = len(rows)
    if n == 0:
        return 1
    if any(len(r) != n for r in rows):
        raise DimensionMismatchError("determinant needs a square matrix")
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        p = m[k][k]
        for i in range(k + 1, n):
            row = m[i]
            top = m[k]
            f = row[k]
            for j in range(k + 1, n):
                row[j] = (p * row[j] - f * top[j]) // prev
        prev = p
    return sign * m[n - 1][n - 1]


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    """Rank of the difference vectors ``p_i - p_0``."""
    if not points:
        raise ValueError("affine_rank needs at least one point")
    _check_lengths(points)
    p0 = points[0]
    return integer_rank([sub(p, p0) for p in points[1:]])


@dataclass(frozen=True)
class LatticePolytope:
    """Full-dimensional convex hull of a finite set of lattice points.

    ``points`` is the declared vertex list. Points that turn out not to be
    vertices are tolerated; duplicates and lower-dimensional sets are not.
    """

    dim: int
    points: tuple[LatticePoint, ...]

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise DomainError(f"dimension must be a positive integer, got {self.dim!r}")
        pts = tuple(as_point(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise NotFullDimensionalError("empty point set")
        for p in pts:
            if len(p) != self.dim:
                raise DimensionMismatchError(
                    f"point {p} has {len(p)} coordinates, expected {self.dim}"
                )
        if len(set(pts)) != len(pts):
            seen = set()
            dup = next(p for p in pts if p in seen or seen.add(p))
            raise DuplicateVertexError(f"duplicate point {dup}")
        r = affine_rank(pts)
        if r != self.dim:
            raise NotFullDimensionalError(f"affine rank {r} is less than dimension {self.dim}")

    def __len__(self) -> int:
        return len(self.points)

    @cached_property
    def bounding_box(self) -> tuple[LatticePoint, LatticePoint]:
        cols = list(zip(*self.points))
        return tuple(min(c) for c in cols), tuple(max(c) for c in cols)

    def transformed(self, matrix: Sequence[Sequence[int]], shift: Sequence[int] | None = None) -> "LatticePolytope":
        """Image under ``x -> matrix @ x + shift``."""
        shift = shift or (0,) * self.dim
        pts = [
            tuple(dot(row, p) + s for row, s in zip(matrix, shift))
            for p in self.points
        ]
        return LatticePolytope(self.dim, tuple(pts))

    def dilated(self, t: int) -> "LatticePolytope":
        if t < 1:
            raise DomainError("dilation factor must be positive")
        return LatticePolytope(self.dim, tuple(tuple(t * x for x in p) for p in self.points))


def validate_polytope(dim: int, points: Iterable[Iterable]) -> LatticePolytope:
    return LatticePolytope(dim, tuple(as_point(p) for p in points))


def _encode_int(x: int):
    return x if abs(x) <= JSON_SAFE_INT else str(x)


def polytope_to_dict(p: LatticePolytope) -> dict:
    return {"dim": p.dim, "vertices": [[_encode_int(x) for x in v] for v in p.points]}


def polytope_from_dict(data: dict) -> LatticePolytope:
    try:
        dim = int(data["dim"])
        verts = data["vertices"]
    except (KeyError, TypeError, ValueError) as exc:
        raise LatticeError(f"malformed polytope record: {exc}") from exc
    try:
        return validate_polytope(dim, verts)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, LatticeError):
            raise
        raise LatticeError(f"malformed vertex list: {exc}") from exc


def dumps_polytope(p: LatticePolytope, **kwargs) -> str:
    return json.dumps(polytope_to_dict(p), **kwargs)


def loads_polytope(text: str) -> LatticePolytope:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LatticeError(f"invalid JSON: {exc}") from exc
    return polytope_from_dict(data)


def read_polytope(path) -> LatticePolytope:
    with open(path) as fh:
        return loads_polytope(fh.read())


def write_polytope(p: LatticePolytope, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps_polytope(p))
        fh.write("\n")


def random_unimodular(d: int, rng, steps: int | None = None) -> list[list[int]]:
    """Random integer matrix of determinant +-1 built from elementary operations.

    ``rng`` is a ``random.Random``. Entries stay small because each step adds
    or subtracts a single row.
    """
    m = [[int(i == j) for j in range(d)] for i in range(d)]
    if d == 1:
        return [[rng.choice((1, -1))]]
    for _ in range(steps if steps is not None else 2 * d):
        i, j = rng.sample(range(d), 2)
        kind = rng.random()
        if kind < 0.7:
            s = rng.choice((1, -1))
            m[i] = [a + s * b for a, b in zip(m[i], m[j])]
        elif kind < 0.85:
            m[i], m[j] = m[j], m[i]
        else:
            m[i] = [-a for a in m[i]]
    return m
