"""Conics, F_q-conics, their Bose quadrics, scrolls and normal rational curves."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .bose import BaerSubplane, BoseSpace, complexify, conj_subplane, segre_quadrics
from .field import QUAD, QUARTIC, FieldTower
from .poly import form_eval, form_roots, moment, param_points
from .projective import (
    Point,
    ProjectiveError,
    Subspace,
    combine,
    frob_vec,
    mat_vec,
    normalize,
    nullspace,
    projective_points,
    rank,
    solve,
    span,
    sub_points,
)
from .quadrics import QuadraticForm, monomials, vanishing_quadrics


class DegenerateConicError(ValueError):
    pass


class NRCFitError(ValueError):
    pass


# plane conics

@dataclass(frozen=True)
class Conic:
    """Zero set of a ternary quadratic form (x^2, xy, xz, y^2, yz, z^2 order)."""

    form: QuadraticForm

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int]) -> "Conic":
        return cls(QuadraticForm(2, tuple(coeffs)))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.form.coeffs

    def level(self, F: FieldTower) -> int:
        return max((F.level_of(c) for c in self.coeffs), default=1)

    def evaluate(self, F: FieldTower, P: Sequence[int]) -> int:
        return self.form.evaluate(F, P)

    def contains(self, F: FieldTower, P: Sequence[int]) -> bool:
        return self.form.evaluate(F, P) == 0

    def points(self, F: FieldTower, level: int = QUAD) -> list[Point]:
        return [P for P in projective_points(F, 2, level) if self.form.evaluate(F, P) == 0]

    def is_nondegenerate(self, F: FieldTower) -> bool:
        return is_nondegenerate(F, self.form)

    def normalized(self, F: FieldTower) -> "Conic":
        return Conic(QuadraticForm(2, normalize(F, self.coeffs)))


def partial_matrix(F: FieldTower, form: QuadraticForm) -> list[list[int]]:
    """Rows are the coefficient vectors of the (linear) partial derivatives."""
    n = form.n + 1
    rows = [[0] * n for _ in range(n)]
    for k in range(n):
        e = [1 if i == k else 0 for i in range(n)]
        for i, v in enumerate(form.partials(F, e)):
            rows[i][k] = v
    return rows


def is_nondegenerate(F: FieldTower, form: QuadraticForm) -> bool:
    """No point of the closure where the form and all partials vanish.

    The partials are linear, so their common zeros form a subspace K defined
    over the coefficient field.  K = 0 means nondegenerate, dim K >= 2 (as a
    vector space) forces a singular point, and for a single point N the form
    decides: by the Euler relation this only matters in characteristic 2.
    """
    if form.is_zero():
        return False
    kernel = nullspace(F, partial_matrix(F, form), form.n + 1)
    if not kernel:
        return True
    if len(kernel) >= 2:
        # the form restricted to a line of singular-for-partials points is a
        # square of a linear form, so it has a zero there
        return False
    return form.evaluate(F, kernel[0]) != 0


def conic_parametrisation(F: FieldTower, form: QuadraticForm) -> list[list[int]]:
    """3x3 matrix K with theta -> K (t0^2, t0 t1, t1^2) a bijection PG(1) -> conic.

    Projects from a point A of the conic: for a direction d the second
    intersection of the line A + s d is Q(d) A - B(A, d) d, where B is the polar
    form.  Directions run over a line D1 D2 not through A.
    """
    level = max((F.level_of(c) for c in form.coeffs), default=1)
    A = next((P for P in projective_points(F, 2, level) if form.evaluate(F, P) == 0), None)
    if A is None:
        raise DegenerateConicError("conic has no points")
    units = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    D1, D2 = next((u, v) for u, v in combinations(units, 2) if rank(F, [A, u, v]) == 3)

    def Q(v):
        return form.evaluate(F, v)

    def polar(u, v):
        s = [F.add(a, b) for a, b in zip(u, v)]
        return F.sub(F.sub(Q(s), Q(u)), Q(v))

    bA1, bA2, b12 = polar(A, D1), polar(A, D2), polar(D1, D2)
    col0 = combine(F, [Q(D1), F.neg(bA1)], [A, D1])
    col1 = combine(F, [b12, F.neg(bA1), F.neg(bA2)], [A, D2, D1])
    col2 = combine(F, [Q(D2), F.neg(bA2)], [A, D2])
    return [[col0[i], col1[i], col2[i]] for i in range(3)]


# conic -> Bose quadrics

def complexify_matrix(F: FieldTower) -> list[list[int]]:
    t = F.tau
    return [[1 if j == 2 * i else (t if j == 2 * i + 1 else 0) for j in range(6)] for i in range(3)]


def split_form(F: FieldTower, form: QuadraticForm) -> tuple[QuadraticForm, QuadraticForm]:
    """f = f1 + tau f2 with f1, f2 over GF(q) (coefficient-wise)."""
    lo, hi = zip(*(F.decompose(c) for c in form.coeffs))
    return QuadraticForm(form.n, tuple(lo)), QuadraticForm(form.n, tuple(hi))


def conic_bose_quadrics(F: FieldTower, conic: Conic) -> tuple[QuadraticForm, QuadraticForm]:
    """Two quadrics of PG(5, q) cutting out the Bose image of a conic of PG(2, q^2)."""
    if not conic.is_nondegenerate(F):
        raise DegenerateConicError("degenerate conic")
    return split_form(F, conic.form.substitute(F, complexify_matrix(F)))


def extended_cone_structure(F: FieldTower, q1: QuadraticForm, q2: QuadraticForm) -> tuple[QuadraticForm, QuadraticForm]:
    """Q3 = Q1 + tau^q Q2 and Q4 = Q1 + tau Q2 over GF(q^2)."""
    return q1.linear_combination(F, q2, F.tau_q), q1.linear_combination(F, q2, F.tau)


def cone_checks(bose: BoseSpace, conic: Conic) -> dict[str, bool]:
    """Vertex, base and ruling checks of the two cones Q3, Q4."""
    F = bose.F
    q1, q2 = conic_bose_quadrics(F, conic)
    q3, q4 = extended_cone_structure(F, q1, q2)
    zero = [0] * 6
    out = {
        "q4_vertex_gamma_q": all(q4.partials(F, a) == zero for a in bose.A_q),
        "q3_vertex_gamma": all(q3.partials(F, a) == zero for a in bose.A),
    }
    plane_pts = list(bose.plane_points())
    base = {bose.gamma_point(P) for P in plane_pts if conic.contains(F, P)}
    gamma_pts = {bose.gamma_point(P) for P in plane_pts}
    out["q4_meets_gamma_in_conic"] = {X for X in gamma_pts if q4.evaluate(F, X) == 0} == base
    base_q = {normalize(F, frob_vec(F, X)) for X in base}
    gamma_q_pts = {normalize(F, frob_vec(F, X)) for X in gamma_pts}
    out["q3_meets_gamma_q_in_conjugate"] = {X for X in gamma_q_pts if q3.evaluate(F, X) == 0} == base_q
    ok = True
    base_list = sorted(base)
    for X in base_list[:4]:
        for Y in base_list[:4]:
            line = span(F, [X, frob_vec(F, Y)])
            for pt in sub_points(F, line):
                if q3.evaluate(F, pt) or q4.evaluate(F, pt):
                    ok = False
    out["lines_xyq_on_both_cones"] = ok
    return out


# F_q-conics

@dataclass(frozen=True)
class FqConic:
    subplane: BaerSubplane
    frame_form: QuadraticForm
    plus: Conic
    points: frozenset

    @property
    def frame_coeffs(self) -> tuple[int, ...]:
        return self.frame_form.coeffs


def transport(F: FieldTower, B: BaerSubplane, frame_form: QuadraticForm) -> Conic:
    """The conic c o H^-1 of PG(2, q^2)."""
    return Conic(QuadraticForm(2, normalize(F, frame_form.substitute(F, B.H_inv).coeffs)))


def extend_conic(F: FieldTower, B: BaerSubplane, points: Sequence[Sequence[int]]) -> Conic:
    """The unique conic of PG(2, q^2) extending an F_q-conic given by its q+1 points."""
    q = F.q
    pts = {normalize(F, P) for P in points}
    if len(pts) != q + 1:
        raise DegenerateConicError(f"expected {q + 1} points, got {len(pts)}")
    local = []
    for P in pts:
        if P not in B.points:
            raise DegenerateConicError("points are not in the subplane")
        local.append(normalize(F, B.to_frame(F, P)))
    basis = vanishing_quadrics(F, local, 2)
    found = []
    for c in projective_points(F, len(basis) - 1, 1) if basis else ():
        form = QuadraticForm(2, tuple(combine(F, c, [b.coeffs for b in basis])))
        if not is_nondegenerate(F, form):
            continue
        zeros = {v for v in projective_points(F, 2, 1) if form.evaluate(F, v) == 0}
        if zeros == set(local):
            found.append(form)
    if len(found) != 1:
        raise DegenerateConicError(f"points lie on {len(found)} nondegenerate conics of the subplane")
    return transport(F, B, found[0])


def make_fq_conic(F: FieldTower, B: BaerSubplane, frame_coeffs: Sequence[int]) -> FqConic:
    """F_q-conic with equation ``frame_coeffs`` (over GF(q)) in the subplane frame."""
    if len(frame_coeffs) != 6 or any(F.level_of(c) > 1 for c in frame_coeffs):
        raise DegenerateConicError("conic needs six GF(q) coefficients")
    form = QuadraticForm(2, normalize(F, frame_coeffs))
    if not is_nondegenerate(F, form):
        raise DegenerateConicError("degenerate conic")
    pts = frozenset(B.from_frame(F, v) for v in projective_points(F, 2, 1) if form.evaluate(F, v) == 0)
    plus = transport(F, B, form)
    if extend_conic(F, B, pts).coeffs != plus.coeffs:
        raise AssertionError("extension of the F_q-conic is not the transported equation")
    return FqConic(B, form, plus, pts)


def fq_conic_quadrics(F: FieldTower, C: FqConic) -> tuple[QuadraticForm, ...]:
    q1, q2 = conic_bose_quadrics(F, C.plus)
    return (q1, q2, *segre_quadrics(F, C.subplane))


def fq_conic_ruling(bose: BoseSpace, C: FqConic) -> list[Subspace]:
    """Lines X (X^{c_pi})^q for X on the extension of C, in Gamma coordinates."""
    F = bose.F
    out = []
    for P in C.plus.points(F, QUAD):
        X = bose.gamma_point(P)
        out.append(span(F, [X, frob_vec(F, conj_subplane(bose, C.subplane, X))]))
    return out


def enumerate_frame_conics(F: FieldTower) -> list[QuadraticForm]:
    """All nondegenerate GF(q) conic equations of PG(2, q), up to scalar."""
    out = []
    for c in projective_points(F, 5, 1):
        form = QuadraticForm(2, c)
        if is_nondegenerate(F, form):
            out.append(form)
    return out


# normal rational curves

def form_mul(F: FieldTower, a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return out


@dataclass(frozen=True)
class NRC:
    """theta -> matrix . (t0^r, t0^(r-1) t1, ..., t1^r)."""

    order: int
    matrix: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.matrix) - 1

    def columns(self) -> list[list[int]]:
        return [[row[k] for row in self.matrix] for k in range(self.order + 1)]

    def point(self, F: FieldTower, t: tuple[int, int]) -> Point:
        return normalize(F, mat_vec(F, self.matrix, moment(F, self.order, t)))

    def points(self, F: FieldTower, level: int = 1) -> set[Point]:
        return {self.point(F, t) for t in param_points(F, level)}

    def ambient(self, F: FieldTower) -> Subspace:
        return span(F, self.columns())

    def is_normal(self, F: FieldTower) -> bool:
        return rank(F, self.columns()) == self.order + 1

    def parameter_of(self, F: FieldTower, X: Sequence[int]) -> tuple[int, int] | None:
        m = solve(F, [list(r) for r in self.matrix], list(X))
        if m is None or not any(m):
            return None
        r = self.order
        for i in range(r):
            for j in range(i + 1, r):
                if F.mul(m[i], m[j + 1]) != F.mul(m[i + 1], m[j]):
                    return None
        if m[0]:
            return (1, F.div(m[1], m[0])) if r else (1, 0)
        return (0, 1)

    def contains(self, F: FieldTower, X: Sequence[int]) -> bool:
        t = self.parameter_of(F, X)
        return t is not None and self.point(F, t) == normalize(F, X)

    def restrict(self, F: FieldTower, form: Sequence[int]) -> list[int]:
        """Binary form of degree r obtained by substituting into a linear form."""
        return [F.dot(form, col) for col in self.columns()]


def _frame_nrc_forms(F: FieldTower, p: Sequence[int], q: Sequence[int]) -> list[list[int]]:
    r = len(p) - 1
    out = []
    for i in range(r + 1):
        f = [F.mul(p[i], q[i])]
        for j in range(r + 1):
            if j != i:
                f = form_mul(F, f, [q[j], p[j]])
        out.append(f)
    return out


def nrc_through(F: FieldTower, basis: Sequence[Sequence[int]], p: Sequence[int], q: Sequence[int]) -> NRC | None:
    """The NRC through basis[0..r], and the points with frame coordinates p, q."""
    r = len(basis) - 1
    if not all(p) or not all(q):
        return None
    for i in range(r + 1):
        for j in range(i + 1, r + 1):
            if F.mul(p[i], q[j]) == F.mul(p[j], q[i]):
                return None
    forms = _frame_nrc_forms(F, p, q)
    cols = [combine(F, [forms[i][k] for i in range(r + 1)], basis) for k in range(r + 1)]
    matrix = tuple(tuple(cols[k][row] for k in range(r + 1)) for row in range(len(basis[0])))
    return NRC(r, matrix)


def fit_nrc(F: FieldTower, points: Sequence[Sequence[int]], r: int) -> NRC:
    """Unique NRC of order r through the first r+3 points in general position, if it holds all points."""
    pts = [normalize(F, P) for P in points]
    if len(set(pts)) < r + 3:
        raise NRCFitError(f"need at least {r + 3} distinct points, got {len(set(pts))}")
    if rank(F, pts) != r + 1:
        raise NRCFitError(f"points do not span an {r}-space")
    for combo in combinations(range(len(pts)), r + 3):
        sub = [pts[i] for i in combo]
        basis = sub[: r + 1]
        if rank(F, basis) < r + 1:
            continue
        mat = [[b[row] for b in basis] for row in range(len(basis[0]))]
        p = solve(F, mat, sub[r + 1])
        q = solve(F, mat, sub[r + 2])
        curve = nrc_through(F, basis, p, q)
        if curve is None:
            continue
        if all(curve.contains(F, P) for P in pts):
            return curve
        raise NRCFitError("points are not on a common normal rational curve")
    raise NRCFitError("no r+3 points in general position (not an arc)")


@dataclass(frozen=True)
class InfinityPoint:
    point: Point
    param: tuple[int, int]
    multiplicity: int


def nrc_infinity(F: FieldTower, N: NRC, form: Sequence[int]) -> tuple[list[InfinityPoint], int]:
    """Meet of N with the hyperplane ``form`` over GF(q^4).

    Returns the points with multiplicities and the degree of the part of the
    parameter form with no roots in GF(q^4).
    """
    bf = N.restrict(F, form)
    if not any(bf):
        raise ProjectiveError("curve lies inside the hyperplane")
    roots, unresolved = form_roots(F, bf, QUARTIC)
    return [InfinityPoint(N.point(F, t), t, m) for t, m in roots], unresolved


# scrolls

@dataclass(frozen=True)
class PlaneMap:
    """v -> matrix . v, a plane of PG(n) parametrised by PG(2)."""

    matrix: tuple[tuple[int, ...], ...]

    def point(self, F: FieldTower, v: Sequence[int]) -> Point:
        return normalize(F, mat_vec(F, self.matrix, v))

    def ambient(self, F: FieldTower) -> Subspace:
        return span(F, [[row[k] for row in self.matrix] for k in range(3)])


@dataclass(frozen=True)
class Scroll:
    carriers: tuple[Subspace, Subspace]
    sigma: tuple[tuple[int, ...], ...]
    lines: tuple[Subspace, ...]
    params: tuple[tuple[int, ...], ...]
    points: frozenset

    def points_array(self) -> np.ndarray:
        return np.array(sorted(self.points), dtype=np.int64)


def scroll_build(F: FieldTower, U, W, sigma: Sequence[Sequence[int]], level: int = 1) -> Scroll:
    """Join U(t) to W(sigma t) for every parameter t over the given level."""
    cu, cw = U.ambient(F), W.ambient(F)
    if span(F, [cu, cw]).dim != cu.dim + cw.dim + 1:
        raise ProjectiveError("scroll carriers intersect")
    if isinstance(U, NRC):
        params = [t for t in param_points(F, level)]
    else:
        params = list(projective_points(F, 2, level))
    lines, pts = [], set()
    for t in params:
        line = span(F, [U.point(F, t), W.point(F, tuple(mat_vec(F, sigma, t)))], level=level)
        lines.append(line)
        pts.update(normalize(F, p) for p in sub_points(F, line))
    return Scroll((cu, cw), tuple(tuple(r) for r in sigma), tuple(lines), tuple(params), frozenset(pts))


def conic_conic_scroll(F: FieldTower, level: int = 1) -> Scroll:
    """Scroll joining (r^2, rs, s^2, 0, 0, 0) to (0, 0, 0, r^2, rs, s^2)."""
    top = tuple(tuple(1 if (i == k) else 0 for k in range(3)) for i in range(3))
    zero = ((0, 0, 0),) * 3
    U = NRC(2, top + zero)
    W = NRC(2, zero + top)
    return scroll_build(F, U, W, ((1, 0), (0, 1)), level=level)


def conic_planes(F: FieldTower, level: int = 1) -> list[Subspace]:
    """Planes a U + b W of the directrix conics of the conic-conic scroll."""
    out = []
    for a, b in param_points(F, level):
        rows = [[a if j == i else 0 for j in range(3)] + [b if j == i else 0 for j in range(3)] for i in range(3)]
        out.append(span(F, rows, level=level))
    return out


def random_three_space(F: FieldTower, rng: np.random.Generator, level: int = 1) -> Subspace:
    Q = F.size(level)
    while True:
        rows = rng.integers(0, Q, size=(4, 6)).tolist()
        if rank(F, rows) == 4:
            return span(F, rows, level=level)


def meet_determinant(F: FieldTower, pi: Subspace) -> list[int]:
    """Binary quartic whose roots are the ruling parameters where pi meets the conic-conic scroll.

    With equations e, e' of pi, the point a U(t) + b W(t) lies in pi iff the
    2x2 system [[u(t), w(t)], [u'(t), w'(t)]] (a, b) = 0 has a solution, where
    u, w are the quadratic forms e restricted to the two conics.
    """
    e1, e2 = pi.equations(F)
    u1, w1, u2, w2 = e1[:3], e1[3:], e2[:3], e2[3:]
    return [F.sub(x, y) for x, y in zip(form_mul(F, u1, w2), form_mul(F, u2, w1))]


def three_space_admissible(F: FieldTower, S: Scroll, pi: Subspace) -> bool:
    """No ruling line inside, no carrier plane met in a line, finite meet with the scroll."""
    for line in S.lines:
        if pi.contains_subspace(F, line):
            return False
    for c in S.carriers:
        if span(F, [pi, c]).dim <= 4:  # meet has dimension >= 1
            return False
    return any(meet_determinant(F, pi))


def meet_count(F: FieldTower, pts: np.ndarray, pi: Subspace) -> int:
    mask = np.ones(pts.shape[0], dtype=bool)
    for eq in pi.equations(F):
        acc = np.zeros(pts.shape[0], dtype=np.int64)
        for j, c in enumerate(eq):
            if c:
                acc = F.add_table[acc, F.mul_table[c, pts[:, j]]]
        mask &= acc == 0
    return int(mask.sum())


@dataclass
class ScrollOrderReport:
    points: int
    quadric_space_dim: int
    trials: int
    seed: int
    max_meet: int
    histogram: dict[int, int]
    excluded: int
    extension_exact_four: bool
    extension_attempts: int
    bookkeeping_trials: int
    bookkeeping_ok: bool
    root_count_agree: bool

    @property
    def ok(self) -> bool:
        return self.max_meet <= 4 and self.extension_exact_four and self.bookkeeping_ok and self.root_count_agree


def cubic_of_hyperplane(F: FieldTower, a: Sequence[int]) -> dict[tuple[int, int, int], int]:
    """Cubic sum a_k F_k(y0, y1, y2) pulled back along the plane parametrisation."""
    monos = [(3, 0, 0), (2, 1, 0), (1, 2, 0), (2, 0, 1), (1, 1, 1), (0, 2, 1)]
    return {m: c for m, c in zip(monos, a)}


def _eval_cubic(F: FieldTower, cubic: dict, y: Sequence[int]) -> int:
    acc = 0
    for (e0, e1, e2), c in cubic.items():
        if c:
            acc = F.add(acc, F.mul(c, F.mul(F.pow(y[0], e0), F.mul(F.pow(y[1], e1), F.pow(y[2], e2)))))
    return acc


def _local_part(F: FieldTower, cubic: dict, at: int, degree: int) -> dict:
    """Homogeneous part of given degree of the cubic in the affine chart y_at = 1."""
    return {m: c for m, c in cubic.items() if c and sum(m) - m[at] == degree}


def bookkeeping_check(F: FieldTower, a: Sequence[int], b: Sequence[int]) -> bool | None:
    """9 - 5 intersection count for the cubics of two hyperplanes.

    Returns None when the pair is not generic enough for the count (tangent
    cones at the double point share a factor, or the simple point is a
    tangency); otherwise whether kernel containment, the double point and the
    local multiplicities 4 and 1 all hold.
    """
    K1, K2 = cubic_of_hyperplane(F, a), cubic_of_hyperplane(F, b)
    e_dbl, e_smp = (0, 0, 1), (0, 1, 0)
    for K in (K1, K2):
        if _eval_cubic(F, K, e_dbl) or _eval_cubic(F, K, e_smp):
            return False
        if _local_part(F, K, 2, 0) or _local_part(F, K, 2, 1):
            return False  # (0,0,1) must be at least double
    # tangent cones at (0,0,1): a3 y0^2 + a4 y0 y1 + a5 y1^2
    c1 = [K1.get((2, 0, 1), 0), K1.get((1, 1, 1), 0), K1.get((0, 2, 1), 0)]
    c2 = [K2.get((2, 0, 1), 0), K2.get((1, 1, 1), 0), K2.get((0, 2, 1), 0)]
    if not any(c1) or not any(c2):
        return None
    # common factor of two binary quadratics iff a common root over GF(q^4)
    (r1, u1), (r2, u2) = form_roots(F, c1, QUARTIC), form_roots(F, c2, QUARTIC)
    if u1 or u2 or {t for t, _ in r1} & {t for t, _ in r2}:
        return None
    # linear part at (0,1,0): a2 y0 + a5 y2
    l1 = (K1.get((1, 2, 0), 0), K1.get((0, 2, 1), 0))
    l2 = (K2.get((1, 2, 0), 0), K2.get((0, 2, 1), 0))
    if F.mul(l1[0], l2[1]) == F.mul(l1[1], l2[0]):
        return None
    return True


def scroll_order_check(F: FieldTower, trials: int = 1000, seed: int = 0, ext_attempts: int = 4000) -> ScrollOrderReport:
    rng = np.random.default_rng(seed)
    S = conic_conic_scroll(F)
    pts = S.points_array()
    qdim = len(vanishing_quadrics(F, sorted(S.points), 5))
    hist: dict[int, int] = {}
    done = excluded = 0
    agree = True
    while done < trials:
        pi = random_three_space(F, rng)
        if not three_space_admissible(F, S, pi):
            excluded += 1
            continue
        k = meet_count(F, pts, pi)
        roots, _ = form_roots(F, meet_determinant(F, pi), 1)
        agree &= k == len(roots)
        hist[k] = hist.get(k, 0) + 1
        done += 1

    S2 = conic_conic_scroll(F, level=QUAD)
    pts2 = S2.points_array()
    found, attempts = False, 0
    while not found and attempts < ext_attempts:
        attempts += 1
        pi = random_three_space(F, rng, level=QUAD)
        if three_space_admissible(F, S2, pi) and meet_count(F, pts2, pi) == 4:
            found = True

    book_ok, book_n = True, 0
    while book_n < 50:
        a = rng.integers(0, F.q, size=6).tolist()
        b = rng.integers(0, F.q, size=6).tolist()
        if rank(F, [a, b]) < 2:
            continue
        res = bookkeeping_check(F, a, b)
        if res is None:
            continue
        book_n += 1
        book_ok &= res
    return ScrollOrderReport(len(S.points), qdim, trials, seed, max(hist), dict(sorted(hist.items())),
                             excluded, found, attempts, book_n, book_ok, agree)
