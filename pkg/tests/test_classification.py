import numpy as np
import pytest

from boselab.bose import BoseSpace, baer_subplane
from boselab.bruck_bose import make_infinity_frame
from boselab.classification import (
    case_fixtures,
    classify_fq_conic,
    is_two_special,
    perturb,
    reverse_check,
    weight,
)
from boselab.field import default_tower
from boselab.varieties import NRC, make_fq_conic

EXPECTED = {
    "1a": [("nrc", 2, 1), ("spread_line", 1, 1), ("spread_line", 1, 1)],
    "1b": [("nrc", 2, 1), ("spread_line", 1, 2)],
    "1c": [("nrc", 2, 1)],
    "2a": [("nrc", 3, 1), ("spread_line", 1, 1)],
    "2b": [("nrc", 4, 1)],
}


@pytest.fixture(scope="module")
def setup3():
    F = default_tower(3)
    b = BoseSpace(F)
    return F, b, make_infinity_frame(b)


@pytest.mark.parametrize("case", sorted(EXPECTED))
def test_fixture_cases(setup3, case):
    F, b, fr = setup3
    frame, coeffs = case_fixtures(F)[case]
    rec = classify_fq_conic(b, fr, make_fq_conic(F, baer_subplane(F, frame), coeffs))
    assert rec.case == case
    assert rec.ok, rec.checks
    assert rec.weight_sum == 4
    got = sorted((c["kind"], c["order"], c["multiplicity"]) for c in rec.components)
    assert got == sorted(EXPECTED[case])
    weights = sorted(p["weight"] for p in rec.infinity for _ in range(p["multiplicity"]))
    if case == "2b":
        assert weights == [1, 1, 1, 1]
    if case == "2a":
        real = [p for p in rec.infinity if p["field_level"] == 1]
        assert [(p["weight"], p["multiplicity"]) for p in real] == [(2, 1)]
        assert sorted(p["weight"] for p in rec.infinity if p["field_level"] != 1) == [1, 1]


def test_weight_examples(setup3):
    F, b, fr = setup3
    g_pt = fr.g_points(F)[0]
    assert weight(F, fr, g_pt) == 1
    real = next(iter(fr.line_spread[0].anchors))
    assert weight(F, fr, real) == 2
    ext = next(P for P in fr.g_points(F) if any(F.level_of(c) == 4 for c in P))
    assert weight(F, fr, ext) == 1


def test_line_is_not_two_special(setup3):
    F, b, fr = setup3
    line = NRC(1, ((1, 0), (0, 1), (0, 0), (0, 0), (0, 0), (0, 0)))
    ok, _, reason = is_two_special(F, fr, line)
    assert not ok and "four" in reason


def test_round_trip_and_perturbation(setup3):
    F, b, fr = setup3
    rng = np.random.default_rng(0)
    frame, coeffs = case_fixtures(F)["2b"]
    from boselab.classification import decompose_quartic
    C = make_fq_conic(F, baer_subplane(F, frame), coeffs)
    dec = decompose_quartic(b, fr, C)
    res = reverse_check(b, fr, dec.curve)
    assert res.accepted, res.reason
    rejected = 0
    for _ in range(20):
        cand = perturb(F, fr, dec.curve, rng)
        if not is_two_special(F, fr, cand)[0]:
            rejected += not reverse_check(b, fr, cand).accepted
        else:
            rejected += 1
    assert rejected == 20


def test_plane_with_spread_line_rejected(setup3):
    F, b, fr = setup3
    # conic in the plane spanned by a spread line at infinity and an affine point
    L = fr.line_spread[0].anchors
    A = (0, 0, 0, 0, 1, 0)
    cols = [L[0], [F.add(x, y) for x, y in zip(L[1], A)], A]
    N = NRC(2, tuple(tuple(c[i] for c in cols) for i in range(6)))
    res = reverse_check(b, fr, N)
    assert not res.accepted and "spread line" in res.reason
