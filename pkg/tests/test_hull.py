import itertools
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latpoly.core import DimensionMismatchError, LatticePolytope, affine_rank, random_unimodular
from latpoly.families import bipyramid, cube, prism
from latpoly.hull import (
    FacetInequality,
    PointLocation,
    classify_point,
    enumerate_facets,
    facets_bruteforce,
    hyperplane_normal,
    vertices,
)


def test_unit_triangle_facets(unit_simplex):
    facets = enumerate_facets(unit_simplex(2))
    assert set(facets) == {
        FacetInequality((-1, 0), 0),
        FacetInequality((0, -1), 0),
        FacetInequality((1, 1), 1),
    }


def test_cube_facets():
    facets = enumerate_facets(cube(3))
    expected = set()
    for i in range(3):
        for s in (1, -1):
            expected.add(FacetInequality(tuple(s * int(k == i) for k in range(3)), 1))
    assert set(facets) == expected
    assert set(facets_bruteforce(cube(3).points, 3)) == expected


def test_bipyramid_345_facets_match_bruteforce():
    p, _ = bipyramid(3, 4, 5)
    facets = enumerate_facets(p)
    assert facets == facets_bruteforce(p.points, 4)
    # frozen from the exhaustive d-subset oracle
    assert len(facets) == 8


def test_facet_invariants_on_prism():
    p, _ = prism(2, 4)
    facets = enumerate_facets(p)
    assert len(facets) == 4 + 2
    for f in facets:
        assert sum(abs(a) for a in f.normal) > 0
        assert gcd(*f.normal) == 1
        tight = [x for x in p.points if sum(a * b for a, b in zip(f.normal, x)) == f.offset]
        assert affine_rank(tight) == p.dim - 1
        assert all(sum(a * b for a, b in zip(f.normal, x)) <= f.offset for x in p.points)


def test_hyperplane_normal_zero_for_dependent():
    assert hyperplane_normal([(0, 0, 0), (1, 1, 1), (2, 2, 2)]) == (0, 0, 0)
    assert hyperplane_normal([(0, 0), (1, 0)]) == (0, 1) or hyperplane_normal([(0, 0), (1, 0)]) == (0, -1)


def test_classify_cube():
    facets = enumerate_facets(cube(3))
    assert classify_point(facets, (0, 0, 0)) is PointLocation.INTERIOR
    assert classify_point(facets, (1, 0, 0)) is PointLocation.BOUNDARY
    assert classify_point(facets, (2, 0, 0)) is PointLocation.OUTSIDE
    with pytest.raises(DimensionMismatchError):
        classify_point(facets, (0, 0))


def test_vertices_drop_interior_points():
    pts = [(0, 0), (4, 0), (0, 4), (1, 1), (2, 2)]
    p = LatticePolytope(2, tuple(pts))
    assert vertices(p) == ((0, 0), (4, 0), (0, 4))
    assert vertices(cube(4)) == cube(4).points


point_sets = st.integers(2, 3).flatmap(
    lambda d: st.lists(
        st.tuples(*[st.integers(-3, 3)] * d), min_size=d + 1, max_size=d + 5, unique=True
    )
)


@settings(max_examples=150, deadline=None)
@given(point_sets, st.randoms(use_true_random=False))
def test_facets_match_bruteforce_and_classify_inputs(points, rnd):
    d = len(points[0])
    if affine_rank(points) < d:
        return
    p = LatticePolytope(d, tuple(points))
    facets = enumerate_facets(p)
    assert facets == facets_bruteforce(points, d)
    assert list(facets) == sorted(facets)
    verts = set(vertices(p))
    for x in points:
        loc = classify_point(facets, x)
        assert loc is not PointLocation.OUTSIDE
        if x in verts:
            assert loc is PointLocation.BOUNDARY
    shuffled = list(points)
    rnd.shuffle(shuffled)
    assert enumerate_facets(LatticePolytope(d, tuple(shuffled))) == facets


@settings(max_examples=60, deadline=None)
@given(point_sets, st.randoms(use_true_random=False))
def test_classification_unimodular_equivariance(points, rnd):
    d = len(points[0])
    if affine_rank(points) < d:
        return
    p = LatticePolytope(d, tuple(points))
    U = random_unimodular(d, rnd)
    t = [rnd.randint(-4, 4) for _ in range(d)]
    q = p.transformed(U, t)
    fp, fq = enumerate_facets(p), enumerate_facets(q)
    lo = [min(c) - 1 for c in zip(*points)]
    hi = [max(c) + 1 for c in zip(*points)]
    for x in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        y = tuple(sum(u * v for u, v in zip(row, x)) + s for row, s in zip(U, t))
        assert classify_point(fp, x) is classify_point(fq, y)


def test_five_cube_facets():
    facets = enumerate_facets(cube(5))
    assert len(facets) == 10
    assert all(f.offset == 1 and sorted(map(abs, f.normal)) == [0, 0, 0, 0, 1] for f in facets)
