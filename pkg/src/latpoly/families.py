"""Constructors for the polytope families with known closed-form profiles.

Each family constructor returns the polytope together with the profile its
closed form predicts. Nothing is asserted here; callers compare the
prediction against measured counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import DomainError, LatticePoint, LatticePolytope


@dataclass(frozen=True)
class FamilyPrediction:
    b_pred: int
    c_pred: int
    nvol_pred: int

    def as_tuple(self) -> tuple[int, int, int]:
        return self.b_pred, self.c_pred, self.nvol_pred


def _require_int(**params):
    for name, value in params.items():
        if isinstance(value, bool) or not isinstance(value, int):
            raise DomainError(f"{name} must be an integer, got {value!r}")


def unit(d: int, i: int) -> LatticePoint:
    """The unit vector ``e_i`` of ``Z^d`` (1-indexed)."""
    return tuple(int(k == i - 1) for k in range(d))


def _add(*vs) -> LatticePoint:
    return tuple(sum(xs) for xs in zip(*vs))


def _scale(s: int, v) -> LatticePoint:
    return tuple(s * x for x in v)


def _dedupe(points):
    seen = set()
    out = []
    for p in points:
        if p not in seen:
            seen.add(p)
            out.append(p)
    return tuple(out)


def bipyramid(c: int, d: int, n: int) -> tuple[LatticePolytope, FamilyPrediction]:
    """``P_{c,d}(n)`` on ``0, e_1..e_{d-1}, e_d + n*1, e_d + cd*1`` (``1`` = all-ones)."""
    _require_int(c=c, d=d, n=n)
    if c < 1 or d < 3 or not 0 <= n < c * d:
        raise DomainError(f"bipyramid needs c >= 1, d >= 3, 0 <= n < cd; got c={c}, d={d}, n={n}")
    ones = (1,) * d
    ed = unit(d, d)
    pts = (
        [(0,) * d]
        + [unit(d, i) for i in range(1, d)]
        + [_add(ed, _scale(n, ones)), _add(ed, _scale(c * d, ones))]
    )
    pred = FamilyPrediction(
        b_pred=c * d - n + d + 1,
        c_pred=c,
        nvol_pred=(d - 1) * (c * d - n) + (c * d + 1),
    )
    return LatticePolytope(d, tuple(pts)), pred


def bipyramid_interior_witnesses(c: int, d: int) -> list[LatticePoint]:
    """``k*(1,...,1)`` for ``1 <= k <= c``; each lies in the interior of ``P_{c,d}(n)``."""
    return [(k,) * d for k in range(1, c + 1)]


def bipyramid_boundary_witnesses(c: int, d: int, n: int) -> list[LatticePoint]:
    """``0``, ``e_1..e_{d-1}`` and ``e_d + k*(1,...,1)`` for ``n <= k <= cd``."""
    ed = unit(d, d)
    return (
        [(0,) * d]
        + [unit(d, i) for i in range(1, d)]
        + [_add(ed, (k,) * d) for k in range(n, c * d + 1)]
    )


def _simplex_base(d: int) -> list[LatticePoint]:
    """``e_1..e_{d-1}`` and ``w = -(e_1+...+e_{d-1})``, all at height 0."""
    w = tuple([-1] * (d - 1) + [0])
    return [unit(d, i) for i in range(1, d)] + [w]


def prism(c: int, d: int) -> tuple[LatticePolytope, FamilyPrediction]:
    """``Q(c)``: the base simplex and its translate by ``(c+1) e_d``."""
    _require_int(c=c, d=d)
    if c < 0 or d < 3:
        raise DomainError(f"prism needs c >= 0, d >= 3; got c={c}, d={d}")
    base = _simplex_base(d)
    lift = _scale(c + 1, unit(d, d))
    pts = base + [_add(v, lift) for v in base]
    pred = FamilyPrediction(b_pred=c * d + 2 * d + 2, c_pred=c, nvol_pred=(c + 1) * d * d)
    return LatticePolytope(d, tuple(pts)), pred


def prism_type(c: int, d: int, j: int) -> tuple[LatticePolytope, FamilyPrediction]:
    """``Q_j(c)``: top vertices over ``0, e_1..e_j`` at height ``c+1``, the rest at height ``c``.

    At ``c = 0`` the height-``c`` vertices coincide with base vertices and
    appear once.
    """
    _require_int(c=c, d=d, j=j)
    if c < 0 or d < 3 or not 0 <= j <= d - 1:
        raise DomainError(f"prism_type needs c >= 0, d >= 3, 0 <= j <= d-1; got c={c}, d={d}, j={j}")
    base = _simplex_base(d)
    ed = unit(d, d)
    high = _scale(c + 1, ed)
    low = _scale(c, ed)
    w = base[-1]
    pts = (
        base
        + [high]
        + [_add(unit(d, i), high) for i in range(1, j + 1)]
        + [_add(unit(d, i), low) for i in range(j + 1, d)]
        + [_add(w, low)]
    )
    pred = FamilyPrediction(
        b_pred=c * d + d + 2 + j,
        c_pred=c,
        nvol_pred=c * d * d + j * d + d - j,
    )
    return LatticePolytope(d, _dedupe(pts)), pred


def ht_simplex(c: int, d: int) -> tuple[LatticePolytope, FamilyPrediction]:
    """Simplex on ``0, e_1..e_{d-1}, e_d + cd*(1,...,1)``."""
    _require_int(c=c, d=d)
    if c < 1 or d < 3:
        raise DomainError(f"ht_simplex needs c >= 1, d >= 3; got c={c}, d={d}")
    apex = _add(unit(d, d), (c * d,) * d)
    pts = [(0,) * d] + [unit(d, i) for i in range(1, d)] + [apex]
    pred = FamilyPrediction(b_pred=d + 1, c_pred=c, nvol_pred=c * d + 1)
    return LatticePolytope(d, tuple(pts)), pred


def cube(d: int) -> LatticePolytope:
    """The cube ``[-1, 1]^d`` on its ``2^d`` sign vectors."""
    _require_int(d=d)
    if d < 3:
        raise DomainError(f"cube needs d >= 3; got d={d}")
    return LatticePolytope(d, tuple(product((-1, 1), repeat=d)))


def example_prism_r3() -> LatticePolytope:
    pts = [(-1, -1, 1), (2, -1, 1), (-1, 2, 1), (-1, -1, -1), (2, -1, -1), (-1, 2, -1)]
    return LatticePolytope(3, tuple(pts))


# CLI name -> (constructor, parameter names)
FAMILIES = {
    "bipyramid": (bipyramid, ("c", "d", "n")),
    "prism": (prism, ("c", "d")),
    "prism-type": (prism_type, ("c", "d", "j")),
    "ht-simplex": (ht_simplex, ("c", "d")),
    "cube": (cube, ("d",)),
    "example-prism-r3": (example_prism_r3, ()),
}


def build_family(name: str, **params) -> tuple[LatticePolytope, FamilyPrediction | None]:
    """Construct a family member by CLI name; fixed examples carry no prediction."""
    try:
        ctor, names = FAMILIES[name]
    except KeyError:
        raise DomainError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}") from None
    missing = [n for n in names if params.get(n) is None]
    if missing:
        raise DomainError(f"family {name} needs parameters {', '.join(missing)}")
    out = ctor(*(params[n] for n in names))
    if isinstance(out, LatticePolytope):
        return out, None
    return out
