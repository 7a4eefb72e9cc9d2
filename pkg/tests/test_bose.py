from itertools import combinations

import pytest

from boselab import bose as bz
from boselab.field import QUAD, QUARTIC, default_tower
from boselab.projective import ProjectiveError, frob_vec, meet, normalize, span, sub_points


@pytest.fixture(scope="module", params=[2, 3])
def bose(request):
    return bz.BoseSpace(default_tower(request.param))


def test_spread_partition(bose):
    q = bose.q
    lines = list(bose.spread.values())
    assert len(lines) == q**4 + q**2 + 1
    covered = [p for L in lines for p in sub_points(bose.F, L.line)]
    assert len(covered) == len(set(covered)) == (q**6 - 1) // (q - 1)


def test_spread_lines_meet_gamma_once(bose):
    F = bose.F
    for P, L in list(bose.spread.items())[:30]:
        m = meet(F, L.line.at_level(QUAD), bose.gamma)
        assert m.dim == 0
        assert normalize(F, m.basis[0]) == L.gamma_point


def test_coordinate_examples():
    F = default_tower(3)
    b = bz.BoseSpace(F)
    L = b.bose_line((1, 0, 0))
    assert L.line == span(F, [(1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0)])
    L = b.bose_line((F.tau, 1, 0))
    assert L.line == span(F, [(0, 1, 1, 0, 0, 0), (1, 1, 0, 1, 0, 0)])
    assert b.gamma_point((1, 0, 0)) == normalize(F, b.A[0])
    assert b.gamma_point((0, 1, 0)) == normalize(F, b.A[1])
    assert b.plane_point(b.gamma_point((1, 1, 1))) == (1, 1, 1)


def test_line_of_point_lookup(bose):
    F = bose.F
    for P, L in list(bose.spread.items())[:20]:
        for u in sub_points(F, L.line):
            assert bose.line_of_point(u).plane_point == P


def test_three_space_of_line():
    F = default_tower(3)
    b = bz.BoseSpace(F)
    S = b.three_space((0, 0, 1))
    assert S.dim == 3
    inside = [P for P, L in b.spread.items() if S.contains_subspace(F, L.line)]
    assert len(inside) == 10


def test_t_line_rejects_gamma():
    F = default_tower(2)
    b = bz.BoseSpace(F)
    with pytest.raises(ProjectiveError):
        b.t_line_through(b.A[0])


def test_baer_subplane_conj_and_frame():
    F = default_tower(3)
    B = bz.standard_subplane(F)
    assert len(B.points) == 13
    for X in B.points:
        assert B.conj(F, X) == X
    X = (1, F.tau, F.omega)
    assert B.conj(F, X) == normalize(F, [F.frob(c) for c in X])
    with pytest.raises(bz.FrameError):
        bz.baer_subplane(F, [(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)])


def test_subline_regulus():
    F = default_tower(3)
    b = bz.BoseSpace(F)
    sub = bz.baer_subline(F, (1, 0, 0), (0, 1, 0), (1, 1, 0))
    assert len(sub.points) == 4
    reg = bz.subline_regulus(b, sub)
    lines = [b.bose_line(P).line for P in sub.points]
    for a, c in combinations(lines, 2):
        assert meet(F, a, c).dim == -1
    zeros = bz.regulus_zero_set(b, reg)
    assert len(zeros) == 16
    assert set(p for L in lines for p in sub_points(F, L)) <= zeros


def test_conjugate_line_rational():
    F = default_tower(3)
    b = bz.BoseSpace(F)
    X = b.gamma_point((1, F.tau, 0))
    line = span(F, [X, frob_vec(F, X)])
    assert line.dim == 1
    from boselab.projective import rational_part
    assert rational_part(F, line).dim == 1
