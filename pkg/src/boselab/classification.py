"""Quartic decomposition, weights and the five cases of F_q-conics relative to g.

The residual curve is computed from a parametrisation: if X(theta) runs over
the extension of the conic, the spread line of X(theta) meets Pi_g in
realify((b - a tau) X(theta)), where a and b are the values of the Pi_g form
on realify(X) and realify(tau X).  Dividing out the common factor of the six
coordinate forms leaves a normal rational curve; the roots of that factor are
the conic points on the line at infinity.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from .bose import BaerSubplane, BoseSpace, baer_subplane, collinear, conj_subplane, incident, line_points
from .bruck_bose import InfinityFrame, slice_plane_set
from .field import QUAD, QUARTIC, FieldError, FieldTower, solve_quadratic
from .poly import form_divide, form_gcd, form_roots, param_points
from .quadrics import common_zeros
from .projective import Point, ProjectiveError, Subspace, combine, frob_vec, mat_mul, normalize, rank, span, sub_points
from .varieties import (
    NRC,
    DegenerateConicError,
    FqConic,
    NRCFitError,
    conic_parametrisation,
    extend_conic,
    fit_nrc,
    form_mul,
    fq_conic_quadrics,
    nrc_infinity,
)

CASES = ("1a", "1b", "1c", "2a", "2b")


class VerificationFailure(AssertionError):
    pass


@dataclass(frozen=True)
class WeightedPoint:
    point: Point
    weight: int
    multiplicity: int
    level: int

    def to_json(self) -> dict:
        return {"coords": list(self.point), "field_level": self.level,
                "weight": self.weight, "multiplicity": self.multiplicity}


def weight(F: FieldTower, frame: InfinityFrame, P: Sequence[int]) -> int:
    if not frame.at_infinity(F, P):
        raise ProjectiveError(f"{tuple(P)} is not at infinity")
    return 1 if frame.on_g(F, P) else 2


def point_level(F: FieldTower, P: Sequence[int]) -> int:
    return max(F.level_of(c) for c in P)


# residual curve of a parametrised set of plane points

def _realify_forms(F: FieldTower, forms: Sequence[Sequence[int]]) -> list[list[int]]:
    out = []
    for f in forms:
        lo, hi = zip(*(F.decompose(c) for c in f))
        out.extend([list(lo), list(hi)])
    return out


@dataclass(frozen=True)
class SliceCurve:
    """Image of a parametrised plane set in Pi_g, split into common factor and residual."""

    plane_forms: tuple[tuple[int, ...], ...]
    common: tuple[int, ...]
    curve: NRC

    @property
    def order(self) -> int:
        return self.curve.order

    def plane_point(self, F: FieldTower, t: tuple[int, int]) -> Point:
        from .poly import form_eval

        return normalize(F, [form_eval(F, list(f), t) for f in self.plane_forms])


def slice_curve(F: FieldTower, frame: InfinityFrame, plane_forms: Sequence[Sequence[int]]) -> SliceCurve:
    """``plane_forms`` are three binary forms over GF(q^2) of a common degree d."""
    lam = frame.form
    tau = F.tau
    real = _realify_forms(F, plane_forms)
    real_tau = _realify_forms(F, [[F.mul(tau, c) for c in f] for f in plane_forms])
    d = len(plane_forms[0]) - 1
    a = [F.dot(lam, [real[j][k] for j in range(6)]) for k in range(d + 1)]
    b = [F.dot(lam, [real_tau[j][k] for j in range(6)]) for k in range(d + 1)]
    scale = [F.sub(bk, F.mul(ak, tau)) for ak, bk in zip(a, b)]
    coords = _realify_forms(F, [form_mul(F, scale, f) for f in plane_forms])
    common = form_gcd(F, coords)
    residual = [form_divide(F, c, common) if any(c) else [0] * (len(c) - len(common) + 1) for c in coords]
    r = len(residual[0]) - 1
    matrix = tuple(tuple(row) for row in residual)
    return SliceCurve(tuple(tuple(f) for f in plane_forms), tuple(common), NRC(r, matrix))


def conic_plane_forms(F: FieldTower, C: FqConic) -> list[list[int]]:
    """X(theta) = H K (t0^2, t0 t1, t1^2) as three quadratic binary forms."""
    K = conic_parametrisation(F, C.frame_form)
    HK = mat_mul(F, C.subplane.H, K)
    return [list(row) for row in HK]


# decomposition and classification

@dataclass
class Decomposition:
    order: int
    curve: NRC
    line_components: list[tuple[Point, int]]
    extension_lines: list[Subspace]
    extension_roots: list[Point]
    checks: dict[str, bool]
    component_tag: str


def component_tag(order: int, lines: Sequence[tuple[Point, int]]) -> str:
    if order == 2:
        if len(lines) == 2:
            return "1a"
        if len(lines) == 1 and lines[0][1] == 2:
            return "1b"
        if not lines:
            return "1c"
    if order == 3 and len(lines) == 1 and lines[0][1] == 1:
        return "2a"
    if order == 4 and not lines:
        return "2b"
    raise VerificationFailure(f"components (order {order}, lines {lines}) match no case")


def incidence_tag(F: FieldTower, frame: InfinityFrame, C: FqConic) -> str:
    ell = frame.ell_inf
    nb = sum(1 for P in C.subplane.points if incident(F, ell, P))
    nc = sum(1 for P in C.points if incident(F, ell, P))
    if nb == F.q + 1:
        return {2: "1a", 1: "1b", 0: "1c"}[nc]
    if nb == 1:
        return {1: "2a", 0: "2b"}[nc]
    raise VerificationFailure(f"subplane meets the line at infinity in {nb} points")


def _route_b_points(bose: BoseSpace, frame: InfinityFrame, C: FqConic) -> list[Point]:
    """Points over GF(q^2) where the lines X (X^{c_pi})^q, X on the extended conic, meet Pi_g."""
    F = bose.F
    out = []
    for P in C.plus.points(F, QUAD):
        if incident(F, frame.ell_inf, P):
            continue
        X = bose.gamma_point(P)
        Y = frob_vec(F, conj_subplane(bose, C.subplane, X))
        lx, ly = F.dot(frame.form, X), F.dot(frame.form, Y)
        out.append(normalize(F, combine(F, [ly, F.neg(lx)], [X, Y])))
    return out


def decompose_quartic(bose: BoseSpace, frame: InfinityFrame, C: FqConic, oracle: bool = True) -> Decomposition:
    F = bose.F
    sc = slice_curve(F, frame, conic_plane_forms(F, C))
    N = sc.curve
    common = list(sc.common)
    rational_roots, _ = form_roots(F, common, 1) if len(common) > 1 else ([], 0)
    lines = sorted((sc.plane_point(F, t), m) for t, m in rational_roots)
    ext_roots: list[Point] = []
    ext_lines: list[Subspace] = []
    if len(common) == 3 and not rational_roots:
        roots2, unresolved = form_roots(F, common, QUAD)
        if unresolved:
            raise VerificationFailure("common factor does not split over GF(q^2)")
        for t, _ in roots2:
            P = sc.plane_point(F, t)
            X = bose.gamma_point(P)
            ext_roots.append(P)
            ext_lines.append(span(F, [X, frob_vec(F, conj_subplane(bose, C.subplane, X))]))

    checks: dict[str, bool] = {}
    checks["curve_normal"] = N.is_normal(F)
    checks["curve_in_pi_g"] = all(F.dot(frame.form, col) == 0 for col in N.columns())
    sl = slice_plane_set(bose, frame, C.points)
    line_pts = {normalize(F, p) for P, _ in lines for p in sub_points(F, bose.bose_line(P).line)}
    checks["slice_matches_components"] = (
        set(sl.points) == N.points(F, 1) | line_pts and set(sl.spread_lines) == {P for P, _ in lines}
    )
    if oracle:
        pts = [p for p in _route_b_points(bose, frame, C)
               if not any(bose.bose_line(P).line.at_level(QUAD).contains(F, p) for P, _ in lines)]
        pts = sorted(set(pts))
        if len(pts) >= N.order + 3:
            try:
                fitted = fit_nrc(F, pts, N.order)
                checks["fit_oracle"] = fitted.points(F, QUAD) == N.points(F, QUAD)
            except NRCFitError:
                checks["fit_oracle"] = False
    tag = component_tag(N.order, lines)
    return Decomposition(N.order, N, lines, ext_lines, ext_roots, checks, tag)


def infinity_points(F: FieldTower, frame: InfinityFrame, N: NRC) -> tuple[list[WeightedPoint], int]:
    pts, unresolved = nrc_infinity(F, N, frame.sigma_form)
    out = [WeightedPoint(ip.point, weight(F, frame, ip.point), ip.multiplicity, point_level(F, ip.point)) for ip in pts]
    return out, unresolved


def is_two_special(F: FieldTower, frame: InfinityFrame, N: NRC) -> tuple[bool, list[WeightedPoint], str]:
    """Weights of the infinity points of N sum to four (roots outside GF(q^4) weigh 2)."""
    if N.order < 2:
        return False, [], "order below two: the weights do not sum to four"
    if not N.is_normal(F):
        return False, [], "curve is not normal"
    if not any(N.restrict(F, frame.sigma_form)):
        return False, [], "curve lies at infinity"
    pts, unresolved = infinity_points(F, frame, N)
    total = sum(p.weight * p.multiplicity for p in pts) + 2 * unresolved
    reason = "" if total == 4 else f"weights sum to {total}"
    return total == 4, pts, reason


def cplus_meets_g(bose: BoseSpace, frame: InfinityFrame, C: FqConic) -> set[Point]:
    """Extended conic on the line at infinity by the quadratic formula, mapped to g."""
    F = bose.F
    U, V = line_points(F, frame.ell_inf)[:2]
    form = C.plus.form

    def val(v):
        return form.evaluate(F, v)

    a, c = val(U), val(V)
    b = F.sub(F.sub(val([F.add(x, y) for x, y in zip(U, V)]), a), c)
    # points s U + V, plus U itself when the leading coefficient vanishes
    pts = []
    if a == 0 and b == 0:
        if c == 0:
            raise VerificationFailure("extended conic contains the line at infinity")
        pts.append(U)
    else:
        for s in solve_quadratic(F, a, b, c):
            pts.append(combine(F, [s, 1], [U, V]))
        if a == 0:
            pts.append(U)
    return {bose.gamma_point(P) for P in pts}


def quadrics_meet_g(bose: BoseSpace, frame: InfinityFrame, C: FqConic) -> set[Point]:
    """Points of g over GF(q^4) on all five quadrics (enumeration)."""
    F = bose.F
    pts = frame.g_ext if frame.g_ext is not None else np.array(frame.g_points(F, QUARTIC), dtype=np.int64)
    mask = common_zeros(F, fq_conic_quadrics(F, C), pts)
    return {tuple(r) for r in pts[mask].tolist()}


def components_meet_g(bose: BoseSpace, frame: InfinityFrame, dec: Decomposition,
                      inf: Sequence[WeightedPoint]) -> set[Point]:
    """g-points of the extended components: curve, spread lines and extension lines."""
    F = bose.F
    g4 = frame.g_line.at_level(QUARTIC)
    out = {p.point for p in inf if g4.contains(F, p.point)}
    out |= {bose.bose_line(P).gamma_point for P, _ in dec.line_components}
    out |= {bose.gamma_point(P) for P in dec.extension_roots}
    return out


@dataclass
class CaseRecord:
    case: str
    q: int
    subplane_frame: list[list[int]]
    conic_coeffs: list[int]
    components: list[dict]
    infinity: list[dict]
    weight_sum: int
    checks: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks.values()) and self.weight_sum == 4

    def to_json(self) -> dict:
        return asdict(self)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def summary(self) -> str:
        comps = ", ".join(f"{c['kind']} order {c['order']} x{c['multiplicity']}" for c in self.components)
        bad = [k for k, v in self.checks.items() if not v]
        return f"case {self.case}: {comps}; weight sum {self.weight_sum}" + (f"; failed {bad}" if bad else "")


def classify_fq_conic(bose: BoseSpace, frame: InfinityFrame, C: FqConic, oracle: bool = True) -> CaseRecord:
    F = bose.F
    dec = decompose_quartic(bose, frame, C, oracle=oracle)
    inf, unresolved = infinity_points(F, frame, dec.curve)
    wsum = sum(p.weight * p.multiplicity for p in inf) + 2 * unresolved
    itag = incidence_tag(F, frame, C)
    checks = dict(dec.checks)
    checks["double_tag_agree"] = itag == dec.component_tag
    left = quadrics_meet_g(bose, frame, C)
    right = cplus_meets_g(bose, frame, C)
    checks["cplus_meets_g"] = left == right
    checks["components_meet_g"] = components_meet_g(bose, frame, dec, inf) == right
    if dec.component_tag == "1c":
        # one infinity point on each extension line, both off g and g^q
        ok = len(dec.extension_lines) == 2 and all(p.weight == 2 for p in inf)
        for L in dec.extension_lines:
            ok &= sum(1 for p in inf if L.at_level(QUARTIC).contains(F, p.point)) == 1
        checks["extension_lines_hold_infinity"] = ok
    components = [{"kind": "nrc", "order": dec.order, "multiplicity": 1}]
    components += [{"kind": "spread_line", "order": 1, "multiplicity": m, "plane_point": list(P)}
                   for P, m in dec.line_components]
    return CaseRecord(
        case=dec.component_tag if checks["double_tag_agree"] else f"{itag}!{dec.component_tag}",
        q=F.q,
        subplane_frame=[list(p) for p in C.subplane.frame],
        conic_coeffs=list(C.frame_coeffs),
        components=components,
        infinity=[p.to_json() for p in inf] + ([{"coords": None, "field_level": None, "weight": 2,
                                                  "multiplicity": unresolved}] if unresolved else []),
        weight_sum=wsum,
        checks=checks,
    )


# reverse direction

@dataclass
class ReverseResult:
    accepted: bool
    reason: str
    points: frozenset = frozenset()
    witness: list[WeightedPoint] = field(default_factory=list)
    subplane: BaerSubplane | None = None


def _frame_points(F: FieldTower, pts: Sequence[Point]) -> list[Point] | None:
    from itertools import combinations

    for four in combinations(sorted(pts), 4):
        if all(not collinear(F, *tri) for tri in combinations(four, 3)):
            return list(four)
    return None


def reconstruct(bose: BoseSpace, frame: InfinityFrame, N: NRC) -> frozenset:
    """Plane points whose spread lines carry the rational points of N."""
    return frozenset(bose.line_of_point(p).plane_point for p in N.points(bose.F, 1))


def reverse_check(bose: BoseSpace, frame: InfinityFrame, N: NRC) -> ReverseResult:
    F = bose.F
    q = F.q
    special, witness, reason = is_two_special(F, frame, N)
    if not special:
        return ReverseResult(False, f"not 2-special: {reason}", witness=witness)
    if N.order == 2:
        at_inf = [p for p in sub_points(F, N.ambient(F)) if frame.at_infinity(F, p)]
        if len({bose.line_of_point(p).plane_point for p in at_inf}) == 1 and len(at_inf) == q + 1:
            return ReverseResult(False, "plane contains a spread line", witness=witness)
    S = reconstruct(bose, frame, N)
    if len(S) != q + 1:
        return ReverseResult(False, f"{len(S)} plane points, expected {q + 1}", S, witness)
    if q == 2:
        if collinear(F, *S):
            return ReverseResult(False, "collinear points", S, witness)
        a, b, c = sorted(S)
        d = normalize(F, combine(F, [1, 1, F.tau], [a, b, c]))
        return ReverseResult(True, "", S, witness, baer_subplane(F, [a, b, c, d]))
    four = _frame_points(F, list(S))
    if four is None:
        return ReverseResult(False, "no frame among the points", S, witness)
    B = baer_subplane(F, four)
    if not S <= B.points:
        return ReverseResult(False, "points not in a common Baer subplane", S, witness, B)
    try:
        extend_conic(F, B, S)
    except DegenerateConicError as exc:
        return ReverseResult(False, str(exc), S, witness, B)
    return ReverseResult(True, "", S, witness, B)


def perturb(F: FieldTower, frame: InfinityFrame, N: NRC, rng: np.random.Generator) -> NRC:
    """Random change of one column of N inside Pi_g."""
    lam = frame.form
    piv = next(i for i, c in enumerate(lam) if c)
    M = [list(r) for r in N.matrix]
    k = int(rng.integers(0, N.order + 1))
    col = rng.integers(0, F.q, size=6).tolist()
    col[piv] = 0
    col[piv] = F.neg(F.div(F.dot(lam, col), lam[piv]))
    for i in range(6):
        M[i][k] = F.add(M[i][k], col[i])
    return NRC(N.order, tuple(tuple(r) for r in M))


def random_nrc(F: FieldTower, frame: InfinityFrame, order: int, rng: np.random.Generator) -> NRC:
    basis = [list(r) for r in frame.pi_g.basis]
    while True:
        coeffs = rng.integers(0, F.q, size=(order + 1, 5)).tolist()
        cols = [combine(F, c, basis) for c in coeffs]
        if rank(F, cols) == order + 1:
            return NRC(order, tuple(tuple(cols[k][i] for k in range(order + 1)) for i in range(6)))


def g_meet_multiplicity(F: FieldTower, frame: InfinityFrame, N: NRC) -> int:
    """Points of the extension of N on g (not g^q), counted with multiplicity."""
    pts, _ = nrc_infinity(F, N, frame.sigma_form)
    g4 = frame.g_line.at_level(QUARTIC)
    return sum(p.multiplicity for p in pts if g4.contains(F, p.point))


def subline_curve(bose: BoseSpace, frame: InfinityFrame, b) -> SliceCurve:
    """Slice of a Baer subline's Bose image: theta -> t0 A' + t1 B'."""
    return slice_curve(bose.F, frame, [[b.a[i], b.b[i]] for i in range(3)])


def g_special_tests(bose: BoseSpace, frame: InfinityFrame, obj) -> int:
    """Number of points (with multiplicity) where the extension of a curve or subline image meets g."""
    if isinstance(obj, NRC):
        return g_meet_multiplicity(bose.F, frame, obj)
    return g_meet_multiplicity(bose.F, frame, subline_curve(bose, frame, obj).curve)


# fixtures

def tangent_frame(F: FieldTower) -> list[Point]:
    """Frame of a Baer subplane meeting z = 0 only in (1, 0, 0)."""
    t = F.tau
    return [(1, 0, 0), (0, 1, t), (0, 0, 1), (1, 1, F.add(t, 1))]


def secant_frame(F: FieldTower) -> list[Point]:
    return [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]


def case_fixtures(F: FieldTower) -> dict[str, tuple[list[Point], list[int]]]:
    """Frame and frame-conic coefficients witnessing each case (odd q)."""
    m1 = F.neg(1)
    nonsquare = next(c for c in F.nonzero(1) if all(F.mul(x, x) != c for x in F.elements(1)))
    return {
        "1a": (secant_frame(F), [0, 1, 0, 0, 0, m1]),            # xy = z^2
        "1b": (secant_frame(F), [0, 0, m1, 1, 0, 0]),            # y^2 = zx
        "1c": (secant_frame(F), [1, 0, 0, F.neg(nonsquare), 0, m1]),  # x^2 - n y^2 = z^2
        "2a": (tangent_frame(F), [0, 0, m1, 1, 0, 0]),           # y^2 = zx, through T
        "2b": (tangent_frame(F), [1, 0, 0, 1, 0, m1]),           # x^2 + y^2 = z^2, T not on it
    }
