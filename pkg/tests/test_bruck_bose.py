from boselab.bose import BoseSpace, line_points
from boselab.bruck_bose import bb_incidence_check, make_infinity_frame, slice_plane_set
from boselab.field import default_tower


def test_slice_single_lines():
    F = default_tower(3)
    b = BoseSpace(F)
    fr = make_infinity_frame(b)
    off = next(P for P in b.spread if P[2] != 0)
    s = slice_plane_set(b, fr, [off])
    assert len(s.affine) == 1 and not s.at_infinity
    on = next(P for P in b.spread if P[2] == 0)
    s = slice_plane_set(b, fr, [on])
    assert s.spread_lines == (on,) and len(s.at_infinity) == 4


def test_infinity_frame_shape():
    F = default_tower(3)
    b = BoseSpace(F)
    fr = make_infinity_frame(b)
    assert fr.ell_inf == (0, 0, 1)
    assert len(fr.line_spread) == 10
    assert fr.sigma_inf.dim == 3
    assert len(fr.g_points(F)) == 82


def test_incidence_q2_exhaustive():
    F = default_tower(2)
    b = BoseSpace(F)
    rep = bb_incidence_check(b, make_infinity_frame(b))
    assert rep.ok, rep.failures
    assert rep.points == rep.lines == 21


def test_incidence_q3_sampled():
    F = default_tower(3)
    b = BoseSpace(F)
    rep = bb_incidence_check(b, make_infinity_frame(b), samples=200, seed=1)
    assert rep.ok, rep.failures
    assert rep.points == 91
