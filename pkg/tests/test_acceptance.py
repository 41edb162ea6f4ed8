"""Exit criteria for the package, one test per criterion.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""

import random
import time

import pytest

from latpoly.castelnuovo import is_castelnuovo, realize_triplet, sample_points, scan
from latpoly.core import LatticePolytope, UndefinedBoundError, affine_rank, random_unimodular
from latpoly.counting import ehrhart_values, interior_via_reciprocity, profile
from latpoly.families import bipyramid, cube, example_prism_r3, ht_simplex, prism, prism_type
from latpoly.triangulate import (
    b_set,
    bipyramid_triangulation,
    prism_zero_triangulation,
    verify_decomposition,
)
from math import comb

GRID_C = (1, 2, 3)
GRID_D = (3, 4, 5)
SEED = 20240601


def bipyramid_grid():
    for c in GRID_C:
        for d in GRID_D:
            for n in range(c * d):
                yield c, d, n


def touched_polytopes() -> list[LatticePolytope]:
    """Every polytope exercised by criteria 1-7, without repeats."""
    polys = [bipyramid(3, 4, 5)[0]]
    polys += [bipyramid(c, d, n)[0] for c, d, n in bipyramid_grid()]
    for c in range(4):
        for d in GRID_D:
            polys.append(prism(c, d)[0])
            polys += [prism_type(c, d, j)[0] for j in range(d)]
    polys += [prism_type(0, d, j)[0] for d in range(3, 7) for j in range(d)]
    polys += [cube(3), cube(4), cube(5), example_prism_r3()]
    polys += [ht_simplex(c, d)[0] for c in GRID_C for d in GRID_D]
    for c in GRID_C:
        for d in GRID_D:
            polys += [realize_triplet(b, c, d)[0] for b in range(d + 1, c * d + 2 * d + 3)]
    seen = {}
    for p in polys:
        seen.setdefault(p, None)
    return list(seen)


def test_criterion_1_example_reproduction():
    start = time.perf_counter()
    prof = profile(bipyramid(3, 4, 5)[0])
    elapsed = time.perf_counter() - start
    assert (prof.b, prof.c, prof.nvol) == (12, 3, 34)
    assert prof.castelnuovo is True
    assert elapsed < 5.0


def test_criterion_2_bipyramid_grid():
    start = time.perf_counter()
    failures = []
    for c, d, n in bipyramid_grid():
        prof = profile(bipyramid(c, d, n)[0])
        expected = (c * d - n + d + 1, c, (d - 1) * (c * d - n) + (c * d + 1))
        if prof.as_tuple() != expected or prof.castelnuovo is not True:
            failures.append(((c, d, n), prof.as_tuple(), expected))
    assert failures == []
    assert time.perf_counter() - start < 600


def test_criterion_3_prism_grids_and_recurrence():
    failures = []
    for c in range(4):
        for d in GRID_D:
            q = profile(prism(c, d)[0])
            if q.as_tuple() != (c * d + 2 * d + 2, c, (c + 1) * d * d):
                failures.append(("Q", c, d, q.as_tuple()))
            if c >= 1 and q.castelnuovo is not True:
                failures.append(("Q not Castelnuovo", c, d))
            for j in range(d):
                qj = profile(prism_type(c, d, j)[0])
                if qj.as_tuple() != (c * d + d + 2 + j, c, c * d * d + j * d + d - j):
                    failures.append(("Qj", c, d, j, qj.as_tuple()))
                if c >= 1:
                    if qj.castelnuovo is not True:
                        failures.append(("Qj not Castelnuovo", c, d, j))
                    lower = profile(prism(c - 1, d)[0]).nvol
                    base = profile(prism_type(0, d, j)[0]).nvol
                    if qj.nvol != lower + base:
                        failures.append(("recurrence", c, d, j, qj.nvol, lower, base))
    assert failures == []


def test_criterion_4_b_set():
    failures = []
    for d in range(3, 7):
        for j in range(d):
            if len(b_set(d, j)) != j * d + d - j:
                failures.append(("size", d, j))
            dec = prism_zero_triangulation(d, j)
            if any(v != 1 for _, v in dec.simplices):
                failures.append(("unimodular", d, j))
            L = ehrhart_values(prism_type(0, d, j)[0], d)
            nvol = sum((-1) ** (d - k) * comb(d, k) * L[k] for k in range(d + 1))
            if dec.total_nvol != nvol or not verify_decomposition(dec):
                failures.append(("volume", d, j, dec.total_nvol, nvol))
    assert failures == []


def test_criterion_5_bipyramid_triangulation():
    failures = []
    for c, d, n in bipyramid_grid():
        dec = bipyramid_triangulation(c, d, n)
        if dec.total_nvol != (d - 1) * (c * d - n) + (c * d + 1) or not verify_decomposition(dec):
            failures.append((c, d, n))
    assert failures == []


def test_criterion_6_fixed_examples():
    c3 = profile(cube(3))
    assert c3.as_tuple() == (26, 1, 48) and c3.castelnuovo is True
    assert is_castelnuovo(cube(4)) is False
    assert is_castelnuovo(cube(5)) is False
    r3 = profile(example_prism_r3())
    assert r3.as_tuple() == (29, 1, 54) and r3.castelnuovo is True


def test_criterion_7_realization_sweep():
    failures = []
    for c in GRID_C:
        for d in GRID_D:
            for b in range(d + 1, c * d + 2 * d + 3):
                poly, tag = realize_triplet(b, c, d)
                prof = profile(poly)
                if (prof.b, prof.c, poly.dim) != (b, c, d) or prof.castelnuovo is not True:
                    failures.append(((b, c, d), tag, prof))
    assert failures == []


def _random_full_dim(d: int, box: int, count: int, seed: int):
    out = []
    i = 0
    while len(out) < count:
        pts = sample_points(d, box, seed, i)
        i += 1
        if affine_rank(pts) == d:
            out.append(LatticePolytope(d, tuple(pts)))
    return out


def test_criterion_8_pick():
    polygons = _random_full_dim(2, 20, 1000, SEED)
    with_interior = 0
    for p in polygons:
        prof = profile(p)
        if prof.c >= 1:
            with_interior += 1
            assert prof.nvol == 2 * prof.c + prof.b - 2
            assert prof.castelnuovo is True
        else:
            assert prof.castelnuovo is None
            with pytest.raises(UndefinedBoundError):
                is_castelnuovo(p)
    assert with_interior > 0


def test_criterion_9_lower_bound():
    polys = _random_full_dim(3, 5, 500, SEED)
    checked = 0
    for p in polys:
        # profile raises InternalConsistencyError on a violation
        prof = profile(p)
        if prof.c >= 1:
            checked += 1
            assert prof.nvol >= 3 * prof.c + 2 * prof.b - 7
    assert checked > 0


def test_criterion_10_conjecture_scan():
    start = time.perf_counter()
    records = scan(3, 4, 10**4, SEED)
    beyond = [
        r for r in records
        if r.castelnuovo and r.triplet.c >= 2 and r.triplet.b > 3 * r.triplet.c + 8
    ]
    assert beyond == [], [r.to_dict() for r in beyond]
    assert records == scan(3, 4, 10**4, SEED)
    assert time.perf_counter() - start < 1800


def test_criterion_11_cross_checks():
    rng = random.Random(SEED)
    failures = []
    for p in touched_polytopes():
        prof = profile(p)
        if interior_via_reciprocity(p) != prof.c:
            failures.append(("reciprocity", p.points))
        for _ in range(5):
            U = random_unimodular(p.dim, rng)
            shift = [rng.randint(-3, 3) for _ in range(p.dim)]
            moved = p.transformed(U, shift)
            if profile(moved) != prof:
                failures.append(("unimodular", p.points, U))
    assert failures == []
