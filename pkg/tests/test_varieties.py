import numpy as np
import pytest

from boselab.bose import BoseSpace, standard_subplane
from boselab.field import QUAD, QUARTIC, default_tower
from boselab.poly import moment
from boselab.projective import points_array, sub_points
from boselab.quadrics import QuadraticForm, common_zeros, dump_quadrics, load_quadrics
from boselab.varieties import (
    NRC,
    Conic,
    DegenerateConicError,
    NRCFitError,
    cone_checks,
    conic_bose_quadrics,
    conic_conic_scroll,
    enumerate_frame_conics,
    fit_nrc,
    fq_conic_quadrics,
    make_fq_conic,
    nrc_infinity,
    scroll_order_check,
)

F3 = default_tower(3)
YY_ZX = [0, 0, F3.neg(1), 1, 0, 0]  # x^2 xy xz y^2 yz z^2


def test_conic_points_and_degeneracy():
    c = Conic.from_coeffs(YY_ZX)
    assert c.is_nondegenerate(F3)
    assert len(c.points(F3, QUAD)) == 10
    assert not Conic.from_coeffs([0, 1, 0, 0, 0, 0]).is_nondegenerate(F3)  # xy
    F2 = default_tower(2)
    assert Conic.from_coeffs([0, 0, 1, 1, 0, 0]).is_nondegenerate(F2)  # y^2 + zx in char 2
    assert not Conic.from_coeffs([1, 0, 0, 1, 0, 1]).is_nondegenerate(F2)  # (x+y+z)^2


def test_conic_bose_zero_set():
    b = BoseSpace(F3)
    c = Conic.from_coeffs(YY_ZX)
    f1, f2 = conic_bose_quadrics(F3, c)
    pts = points_array(F3, 5)
    zeros = {tuple(r) for r in pts[common_zeros(F3, [f1, f2], pts)].tolist()}
    assert len(zeros) == 40
    expected = {u for P in c.points(F3, QUAD) for u in sub_points(F3, b.bose_line(P).line)}
    assert zeros == expected
    assert all(cone_checks(b, c).values())


def test_fq_conic_five_quadrics_q2():
    F = default_tower(2)
    b = BoseSpace(F)
    B = standard_subplane(F)
    forms = enumerate_frame_conics(F)
    assert len(forms) == 2**5 - 2**2
    pts = points_array(F, 5)
    for form in forms[:6]:
        C = make_fq_conic(F, B, form.coeffs)
        zeros = pts[common_zeros(F, fq_conic_quadrics(F, C), pts)]
        assert len(zeros) == (F.q + 1) ** 2


def test_make_fq_conic_rejects_degenerate():
    B = standard_subplane(F3)
    with pytest.raises(DegenerateConicError):
        make_fq_conic(F3, B, [0, 1, 0, 0, 0, 0])


def test_fit_nrc_moment_conic():
    # a conic needs five points, so take the moment curve over GF(9)
    params = [(1, 0), (1, 1), (1, 2), (0, 1), (1, F3.tau)]
    pts = [tuple(moment(F3, 2, t)) for t in params]
    N = fit_nrc(F3, pts, 2)
    assert all(N.contains(F3, p) for p in pts)
    rational = {P for P in N.points(F3, QUAD) if all(F3.level_of(c) == 1 for c in P)}
    assert rational == {tuple(moment(F3, 2, t)) for t in [(1, 0), (1, 1), (1, 2), (0, 1)]}
    assert N.points(F3, QUAD) == {tuple(moment(F3, 2, (1, a))) for a in F3.elements(QUAD)} | {(0, 0, 1)}


def test_fit_twisted_cubic_refit():
    M = ((1, 0, 0, 1), (0, 1, 0, 2), (0, 0, 1, 1), (1, 1, 0, 1))
    N = NRC(3, M)
    assert N.is_normal(F3)
    pts = sorted(N.points(F3, QUAD))[:6]
    G = fit_nrc(F3, pts, 3)
    assert G.points(F3, QUAD) == N.points(F3, QUAD)
    rational = {P for P in G.points(F3, QUAD) if all(F3.level_of(c) == 1 for c in P)}
    assert rational == N.points(F3) and len(rational) == 4


def test_fit_nrc_rejects_generic_points():
    rng = np.random.default_rng(5)
    failures = 0
    for _ in range(20):
        pts = [tuple(int(x) for x in rng.integers(0, 3, 4)) for _ in range(7)]
        pts = [p for p in pts if any(p)]
        try:
            fit_nrc(F3, pts, 3)
        except NRCFitError:
            failures += 1
    assert failures == 20


def test_nrc_infinity_examples():
    conic = NRC(2, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    pts, un = nrc_infinity(F3, conic, (0, 0, 1))
    assert un == 0 and len(pts) == 1 and pts[0].multiplicity == 2 and pts[0].point == (1, 0, 0)
    pts, un = nrc_infinity(F3, conic, (1, 0, 0))
    assert un == 0 and len(pts) == 1 and pts[0].multiplicity == 2 and pts[0].point == (0, 0, 1)
    cubic = NRC(3, ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)))
    pts, un = nrc_infinity(F3, cubic, (1, 1, 0, 1))
    assert sum(p.multiplicity for p in pts) + un == 3
    for p in pts:
        assert F3.dot((1, 1, 0, 1), p.point) == 0


def test_quadric_dump_roundtrip():
    forms = [QuadraticForm.from_product(F3, [1, 0, 0, 0, 0, 2], [0, 1, 1, 0, 0, 0])]
    assert load_quadrics(dump_quadrics(forms)) == forms


def test_scroll_points_and_bound():
    S = conic_conic_scroll(F3)
    assert len(S.points) == 16
    rep = scroll_order_check(F3, trials=100, seed=3, ext_attempts=2000)
    assert rep.max_meet <= 4
    assert rep.extension_exact_four
