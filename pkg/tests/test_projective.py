import pytest

from boselab.field import QUAD, default_tower
from boselab.projective import (
    count_pg,
    from_equations,
    frob_subspace,
    meet,
    points_array,
    projective_points,
    rational_part,
    span,
    sub_points,
)

F3 = default_tower(3)


def e(i, n=6):
    v = [0] * n
    v[i] = 1
    return v


def test_span_dimensions():
    assert span(F3, [e(0), e(1)]).dim == 1
    assert span(F3, [e(2), e(2), e(2)]).dim == 0
    assert span(F3, [e(0), e(1), e(2), [1, 1, 1, 0, 0, 0]]).dim == 2


def test_meet():
    a = span(F3, [e(0), e(1), e(2)])
    b = span(F3, [e(3), e(4), e(5)])
    assert meet(F3, a, b).dim == -1
    four = from_equations(F3, [e(5)], 5)
    three = span(F3, [e(0), e(1), e(2), e(3)])
    assert meet(F3, four, three) == three


def test_counts():
    assert len(list(projective_points(F3, 1))) == 4
    assert len(list(projective_points(F3, 5))) == 364 == count_pg(3, 5)
    assert len(list(projective_points(F3, 2, QUAD))) == 91
    assert points_array(F3, 2, QUAD).shape == (91, 3)


def test_extension_restriction_roundtrip():
    plane = span(F3, [e(0), [1, 2, 0, 1, 0, 0], e(5)])
    assert rational_part(F3, plane.at_level(QUAD)) == plane
    assert frob_subspace(F3, plane.at_level(QUAD)) == plane.at_level(QUAD)


def test_sub_points_count():
    line = span(F3, [e(0), e(1)], level=QUAD)
    assert len(list(sub_points(F3, line))) == 10
