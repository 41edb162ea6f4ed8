"""Explicit simplex decompositions of the bipyramid and low prism families.

A decomposition is certified by containment of every simplex vertex plus an
exact match between the summed simplex volumes and the independently counted
volume of the ambient polytope. For simplices inside a common convex body
the volume match excludes both gaps and overlaps.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .core import (
    DegenerateSimplexError,
    InternalConsistencyError,
    DomainError,
    LatticePoint,
    LatticePolytope,
    determinant,
    sub,
)
from .counting import normalized_volume
from .families import _add, _scale, bipyramid, prism_type, unit
from .hull import PointLocation, classify_point, enumerate_facets


@dataclass(frozen=True)
class SimplexDecomposition:
    ambient: LatticePolytope
    simplices: tuple[tuple[tuple[LatticePoint, ...], int], ...]

    @property
    def total_nvol(self) -> int:
        return sum(v for _, v in self.simplices)

    def without(self, index: int) -> "SimplexDecomposition":
        rest = self.simplices[:index] + self.simplices[index + 1:]
        return SimplexDecomposition(self.ambient, rest)


def simplex_nvol(vertices: Sequence[Sequence[int]]) -> int:
    """``|det(v_1 - v_0, ..., v_d - v_0)|`` for a full-dimensional simplex."""
    v0 = vertices[0]
    d = len(v0)
    if len(vertices) != d + 1:
        raise DegenerateSimplexError(f"a {d}-simplex needs {d + 1} vertices, got {len(vertices)}")
    det = determinant([sub(v, v0) for v in vertices[1:]])
    if det == 0:
        raise DegenerateSimplexError(f"simplex {list(vertices)} is degenerate")
    return abs(det)


def _decomposition(ambient: LatticePolytope, simplices) -> SimplexDecomposition:
    return SimplexDecomposition(
        ambient, tuple((tuple(s), simplex_nvol(s)) for s in simplices)
    )


def bipyramid_triangulation(c: int, d: int, n: int) -> SimplexDecomposition:
    """The ``d`` simplices ``sigma, sigma(1), ..., sigma(d-1)`` of ``P_{c,d}(n)``.

    ``sigma`` drops the lower apex ``e_d + n*1``; ``sigma(i)`` keeps both apexes
    and drops ``e_i``.
    """
    poly, _ = bipyramid(c, d, n)
    origin = poly.points[0]
    basis = list(poly.points[1:d])
    low, high = poly.points[d], poly.points[d + 1]
    simplices = [[origin] + basis + [high]]
    for i in range(d - 1):
        simplices.append([origin] + basis[:i] + basis[i + 1:] + [low, high])
    return _decomposition(poly, simplices)


# B-set elements are labelled ("e", t) for e_t, ("w",) for w and ("f", s) for
# e'_s = e_s + e_d (so ("f", 0) is e_d itself).


def _b_set_ground(d: int, j: int) -> list[tuple]:
    return [("e", t) for t in range(1, d)] + [("w",)] + [("f", s) for s in range(j + 1)]


def _b_set_label_point(label: tuple, d: int) -> LatticePoint:
    if label[0] == "e":
        return unit(d, label[1])
    if label[0] == "w":
        return tuple([-1] * (d - 1) + [0])
    s = label[1]
    ed = unit(d, d)
    return ed if s == 0 else _add(unit(d, s), ed)


def _check_b_params(d: int, j: int) -> None:
    if isinstance(d, bool) or not isinstance(d, int) or isinstance(j, bool) or not isinstance(j, int):
        raise DomainError("d and j must be integers")
    if d < 3 or not 0 <= j <= d - 1:
        raise DomainError(f"b_set needs d >= 3 and 0 <= j <= d-1; got d={d}, j={j}")


def b_set_labels(d: int, j: int) -> list[frozenset]:
    """Admissible ``d``-subsets of the vertex labels of ``Q_j(0)``, in lexicographic order."""
    _check_b_params(d, j)
    ground = _b_set_ground(d, j)
    base = frozenset([("e", t) for t in range(1, d)] + [("w",)])
    forbidden_pairs = [
        (("f", s), ("e", t)) for t in range(1, j + 1) for s in range(0, t)
    ]
    staircases = {
        frozenset(
            [("e", t) for t in range(1, xi)]
            + [("f", s) for s in range(xi, j + 1)]
            + [("e", t) for t in range(j + 1, d)]
            + [("w",)]
        )
        for xi in range(1, j + 1)
    }
    out = []
    for combo in combinations(ground, d):
        W = frozenset(combo)
        if any(a in W and b in W for a, b in forbidden_pairs):
            continue
        if W == base or W in staircases:
            continue
        out.append(W)
    return out


def b_set(d: int, j: int) -> list[tuple[LatticePoint, ...]]:
    """The subsets ``W`` as point tuples (ordered e_1..e_{d-1}, w, e'_0..e'_j)."""
    ground = _b_set_ground(d, j)
    order = {lab: i for i, lab in enumerate(ground)}
    return [
        tuple(_b_set_label_point(lab, d) for lab in sorted(W, key=order.__getitem__))
        for W in b_set_labels(d, j)
    ]


def b_set_tally(d: int, j: int) -> dict[int, int]:
    """Number of ``W`` grouped by the least index ``s`` with ``e'_s`` in ``W``."""
    tally: dict[int, int] = {}
    for W in b_set_labels(d, j):
        xi = min(lab[1] for lab in W if lab[0] == "f")
        tally[xi] = tally.get(xi, 0) + 1
    return dict(sorted(tally.items()))


def prism_zero_triangulation(d: int, j: int) -> SimplexDecomposition:
    """Cone from the origin over each ``W`` in the B-set; every simplex must be unimodular."""
    _check_b_params(d, j)
    poly, _ = prism_type(0, d, j)
    origin = (0,) * d
    dec = _decomposition(poly, [(origin,) + W for W in b_set(d, j)])
    bad = [s for s, v in dec.simplices if v != 1]
    if bad:
        raise InternalConsistencyError(f"{len(bad)} B-set simplices are not unimodular, e.g. {bad[0]}")
    return dec


def verify_decomposition(dec: SimplexDecomposition, limit: int | None = None) -> bool:
    facets = enumerate_facets(dec.ambient)
    for simplex, _ in dec.simplices:
        for v in simplex:
            if classify_point(facets, v) is PointLocation.OUTSIDE:
                return False
    return dec.total_nvol == normalized_volume(dec.ambient, limit)


def decomposition_to_dict(dec: SimplexDecomposition, verified: bool | None = None) -> dict:
    out = {
        "dim": dec.ambient.dim,
        "ambient_vertices": [list(p) for p in dec.ambient.points],
        "simplices": [{"vertices": [list(v) for v in s], "nvol": nv} for s, nv in dec.simplices],
        "total_nvol": dec.total_nvol,
    }
    if verified is not None:
        out["verified"] = verified
    return out
