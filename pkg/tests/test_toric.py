"""The split-torus pencil: singular locus, line census, and component degrees."""

from fractions import Fraction

import pytest

from qpencil.fields import QQ, PrimeField
from qpencil.pencil import singular_at, toric_pencil
from qpencil.toric import (
    PLANE_TRIPLES,
    classify_line,
    component_count_identity,
    dp6_point_count,
    line_scheme_components,
    plane_union_point_count,
    toric_line_census,
    toric_singular_points,
)


def test_plane_triples_pick_one_index_per_block():
    assert len(PLANE_TRIPLES) == 8
    for a, b, c in PLANE_TRIPLES:
        assert a in (0, 1) and b in (2, 3) and c in (4, 5)


@pytest.mark.parametrize("field", [QQ, PrimeField(3), PrimeField(5)])
def test_six_singular_points(field):
    sing = toric_singular_points(field)
    assert len(sing) == 6
    p = toric_pencil(field)
    for pt in sing:
        assert singular_at(p, list(pt))


def test_rational_singular_points_are_the_vertices():
    sing = toric_singular_points(QQ)
    assert sorted(sing) == sorted(
        tuple(Fraction(1) if j == i else Fraction(0) for j in range(6)) for i in range(6)
    )


def test_line_census_over_f3():
    census = toric_line_census(3)
    assert census.total == 108  # 12 q^2
    assert census.planar == 92
    assert census.nonplanar == 16  # 4 (q-1)^2
    assert census.consistent
    assert len(census.per_plane) == 8
    assert all(v == 13 for v in census.per_plane.values())


def test_line_census_over_f5():
    census = toric_line_census(5)
    assert census.total == 300
    assert census.nonplanar == 64
    assert census.consistent


def test_classify_line_sees_plane_membership():
    from qpencil.fqgeom import ProjLine

    # a non-edge line inside the plane x1 = x3 = x5 = 0
    line = ProjLine.from_span(3, (1, 0, 1, 0, 0, 0), (0, 0, 1, 0, 1, 0))
    assert classify_line(line) == [(1, 3, 5)]
    # an edge joining two coordinate vertices sits in two planes
    edge = ProjLine.from_span(3, (1, 0, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0))
    assert len(classify_line(edge)) == 2
    # a line with no identically-zero coordinates meets no plane
    skew = ProjLine.from_span(3, (1, 0, 0, 1, 0, 1), (0, 1, 1, 0, 2, 0))
    assert classify_line(skew) == []


def test_plane_union_point_count_two_ways():
    for q in (3, 5):
        scan, formula = plane_union_point_count(q)
        assert scan == formula


@pytest.mark.parametrize("q, pts", [(3, 22), (5, 46), (7, 78)])
def test_dp6_point_count(q, pts):
    assert dp6_point_count(q) == pts


def test_component_bookkeeping():
    comps = line_scheme_components()
    assert comps.plane_components == 8
    assert comps.dp6_components == 4
    assert comps.total_degree == 32  # 8*1 + 4*6


@pytest.mark.parametrize("q", [3, 5, 7, 11])
def test_component_count_identity(q):
    by_components, by_strata = component_count_identity(q)
    assert by_components == by_strata
    assert by_components == 12 * q * q + 24 * q + 12


def test_census_matches_component_interiors():
    # the nonplanar lines of the census are exactly the 4 (q-1)^2 interior
    # points of the del Pezzo components that live on honest lines
    census = toric_line_census(3)
    assert census.nonplanar == 4 * (3 - 1) ** 2
