"""The Bose representation of PG(2, q^2) as a regular 1-spread of PG(5, q).

A point (x, y, z) of PG(2, q^2) with x = x0 + x1 tau etc. becomes the spread
line through P0 = (x0, x1, y0, y1, z0, z1) and P1, the real coordinates of
tau * (x, y, z).  The transversal planes are Gamma = <A1, A2, A3> with
A1 = (tau^q, -1, 0, 0, 0, 0) etc., and its conjugate Gamma^q.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .field import QUAD, FieldTower
from .projective import (
    Point,
    ProjectiveError,
    Subspace,
    combine,
    frob_vec,
    mat_inverse,
    mat_vec,
    meet,
    normalize,
    projective_points,
    rank,
    solve,
    span,
    sub_points,
    subspace,
    subspace_points_array,
)
from .quadrics import QuadraticForm, vanishing_quadrics


# PG(2, q^2) helpers

def cross(F: FieldTower, a: Sequence[int], b: Sequence[int]) -> tuple[int, int, int]:
    return (
        F.sub(F.mul(a[1], b[2]), F.mul(a[2], b[1])),
        F.sub(F.mul(a[2], b[0]), F.mul(a[0], b[2])),
        F.sub(F.mul(a[0], b[1]), F.mul(a[1], b[0])),
    )


def join(F: FieldTower, P: Sequence[int], Q: Sequence[int]) -> Point:
    """Line coordinates [a, b, c] of the line PQ of PG(2, .)."""
    return normalize(F, cross(F, P, Q))


def incident(F: FieldTower, line: Sequence[int], P: Sequence[int]) -> bool:
    return F.dot(line, P) == 0


def collinear(F: FieldTower, *pts: Sequence[int]) -> bool:
    return rank(F, pts) <= 2


def line_points(F: FieldTower, line: Sequence[int], level: int = QUAD) -> list[Point]:
    """Points of a line of PG(2, q^level) given by coordinates [a, b, c]."""
    basis = [list(v) for v in _null3(F, line)]
    return [normalize(F, combine(F, c, basis)) for c in projective_points(F, 1, level)]


def _null3(F: FieldTower, line: Sequence[int]):
    from .projective import nullspace

    return nullspace(F, [list(line)], 3)


def realify(F: FieldTower, w: Sequence[int]) -> Point:
    """GF(q^2)^3 -> GF(q)^6, (x0 + x1 tau, ...) -> (x0, x1, ...)."""
    out: list[int] = []
    for c in w:
        out.extend(F.decompose(c))
    return tuple(out)


def complexify(F: FieldTower, u: Sequence[int]) -> list[int]:
    """(u0, ..., u5) -> (u0 + tau u1, u2 + tau u3, u4 + tau u5), valid at any level."""
    t = F.tau
    return [F.add(u[2 * i], F.mul(t, u[2 * i + 1])) for i in range(3)]


@dataclass(frozen=True)
class SpreadLine:
    """Bose line of the PG(2, q^2) point ``plane_point``."""

    plane_point: Point
    line: Subspace
    anchors: tuple[Point, Point]
    gamma_point: Point


def bose_anchors(F: FieldTower, P: Sequence[int]) -> tuple[Point, Point]:
    """P0, P1 of the coordinate formula for a representative of P."""
    t0, t1 = F.t0, F.t1
    (x0, x1), (y0, y1), (z0, z1) = (F.decompose(c) for c in P)
    P0 = (x0, x1, y0, y1, z0, z1)
    P1 = (
        F.mul(x1, t0), F.add(x0, F.mul(x1, t1)),
        F.mul(y1, t0), F.add(y0, F.mul(y1, t1)),
        F.mul(z1, t0), F.add(z0, F.mul(z1, t1)),
    )
    return P0, P1


class BoseSpace:
    """Spread, transversal planes and lookups for one tower."""

    def __init__(self, F: FieldTower):
        self.F = F
        self.q = F.q
        tq, m1 = F.tau_q, F.neg(1)
        self.A = (
            (tq, m1, 0, 0, 0, 0),
            (0, 0, tq, m1, 0, 0),
            (0, 0, 0, 0, tq, m1),
        )
        self.A_q = tuple(frob_vec(F, a) for a in self.A)
        self.gamma = span(F, self.A, level=QUAD)
        self.gamma_q = span(F, self.A_q, level=QUAD)
        self._lines: dict[Point, SpreadLine] = {}

    # points of the plane

    def plane_points(self) -> Iterator[Point]:
        return projective_points(self.F, 2, QUAD)

    def gamma_point(self, P: Sequence[int]) -> Point:
        """x A1 + y A2 + z A3, for P = (x, y, z) over any level."""
        F = self.F
        tq, m1 = F.tau_q, F.neg(1)
        out = []
        for c in P:
            out.extend((F.mul(c, tq), F.mul(c, m1)))
        return normalize(F, out)

    def plane_point(self, X: Sequence[int]) -> Point:
        """Inverse of :meth:`gamma_point` for points of Gamma (or its extensions)."""
        F = self.F
        tq = F.tau_q
        for i in range(3):
            if X[2 * i] != F.neg(F.mul(tq, X[2 * i + 1])):
                raise ProjectiveError(f"{X} is not on the transversal plane Gamma")
        return normalize(F, [F.neg(X[2 * i + 1]) for i in range(3)])

    def in_gamma(self, X: Sequence[int]) -> bool:
        return self.gamma.contains(self.F, X)

    def in_gamma_q(self, X: Sequence[int]) -> bool:
        return self.gamma_q.contains(self.F, X)

    # spread

    def bose_line(self, P: Sequence[int]) -> SpreadLine:
        F = self.F
        key = normalize(F, P)
        hit = self._lines.get(key)
        if hit is None:
            P0, P1 = bose_anchors(F, key)
            hit = SpreadLine(key, span(F, (P0, P1), level=1), (P0, P1), self.gamma_point(key))
            self._lines[key] = hit
        return hit

    @cached_property
    def spread(self) -> dict[Point, SpreadLine]:
        return {P: self.bose_line(P) for P in self.plane_points()}

    def line_of_point(self, u: Sequence[int]) -> SpreadLine:
        """The spread line through a point of PG(5, q)."""
        return self.bose_line(normalize(self.F, complexify(self.F, u)))

    def plane_point_of(self, u: Sequence[int]) -> Point:
        return normalize(self.F, complexify(self.F, u))

    def realify(self, w: Sequence[int]) -> Point:
        return realify(self.F, w)

    def three_space(self, line: Sequence[int]) -> Subspace:
        """Bose 3-space of the PG(2, q^2) line with coordinates [a, b, c]."""
        pts = line_points(self.F, line)
        return span(self.F, [self.bose_line(pts[0]).line, self.bose_line(pts[1]).line])

    def t_line_through(self, P: Sequence[int]) -> Subspace:
        """The unique line through P meeting Gamma and Gamma^q."""
        F = self.F
        if self.in_gamma(P) or self.in_gamma_q(P):
            raise ProjectiveError("point lies on a transversal plane")
        R = meet(F, span(F, [P, self.gamma]), self.gamma_q)
        S = meet(F, span(F, [P, self.gamma_q]), self.gamma)
        assert R.dim == 0 and S.dim == 0
        return span(F, [R, S])

    def scroll_line(self, X: Sequence[int], Y: Sequence[int]) -> Subspace:
        """Line joining gamma(X) and gamma(Y)^q for plane points X, Y."""
        F = self.F
        return span(F, [self.gamma_point(X), frob_vec(F, self.gamma_point(Y))])


# Baer sublines and subplanes (in PG(2, q^2) coordinates)

@dataclass(frozen=True)
class BaerSubline:
    carrier: Point
    a: Point
    b: Point
    points: frozenset

    def coords(self, F: FieldTower, X: Sequence[int]) -> tuple[int, int]:
        st = solve(F, [[self.a[i], self.b[i]] for i in range(3)], list(X))
        if st is None:
            raise ProjectiveError(f"{X} is not on the carrier line")
        return st[0], st[1]

    def conj(self, F: FieldTower, X: Sequence[int]) -> Point:
        """Image of X under the involution of the carrier fixing the subline."""
        s, t = self.coords(F, X)
        return normalize(F, combine(F, [F.frob(s), F.frob(t)], [self.a, self.b]))

    def point_at(self, F: FieldTower, param: tuple[int, int]) -> Point:
        return normalize(F, combine(F, param, [self.a, self.b]))


def baer_subline(F: FieldTower, P: Sequence[int], Q: Sequence[int], R: Sequence[int]) -> BaerSubline:
    """The Baer subline through three distinct collinear points."""
    P, Q, R = (normalize(F, v) for v in (P, Q, R))
    if len({P, Q, R}) < 3 or not collinear(F, P, Q, R) or rank(F, [P, Q]) < 2:
        raise ProjectiveError("degenerate subline: need three distinct collinear points")
    ab = solve(F, [[P[i], Q[i]] for i in range(3)], list(R))
    alpha, beta = ab
    a = tuple(F.mul(alpha, x) for x in P)
    b = tuple(F.mul(beta, x) for x in Q)
    pts = frozenset(normalize(F, combine(F, c, [a, b])) for c in projective_points(F, 1, 1))
    return BaerSubline(join(F, P, Q), a, b, pts)


@dataclass(frozen=True)
class BaerSubplane:
    frame: tuple[Point, Point, Point, Point]
    H: tuple[tuple[int, ...], ...]
    H_inv: tuple[tuple[int, ...], ...]
    points: frozenset

    def to_frame(self, F: FieldTower, X: Sequence[int]) -> list[int]:
        return mat_vec(F, self.H_inv, X)

    def from_frame(self, F: FieldTower, v: Sequence[int]) -> Point:
        return normalize(F, mat_vec(F, self.H, v))

    def conj(self, F: FieldTower, X: Sequence[int]) -> Point:
        """The involution of PG(2, q^2) fixing the subplane pointwise."""
        v = self.to_frame(F, X)
        return self.from_frame(F, frob_vec(F, v))

    def contains(self, F: FieldTower, X: Sequence[int]) -> bool:
        return normalize(F, X) in self.points

    def lines(self, F: FieldTower) -> list[Point]:
        """Line coordinates of the q^2+q+1 lines of PG(2, q^2) meeting the subplane in a subline."""
        out = set()
        for l in projective_points(F, 2, 1):
            # line l of the standard frame maps to l . H^-1
            out.add(normalize(F, [F.dot(l, [self.H_inv[r][c] for r in range(3)]) for c in range(3)]))
        return sorted(out)


class FrameError(ProjectiveError):
    pass


def baer_subplane(F: FieldTower, frame: Sequence[Sequence[int]]) -> BaerSubplane:
    """Baer subplane spanned by a frame of four points, no three collinear."""
    pts = tuple(normalize(F, p) for p in frame)
    if len(pts) != 4:
        raise FrameError("bad frame: need four points")
    for a, b, c in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)):
        if rank(F, [pts[a], pts[b], pts[c]]) < 3:
            raise FrameError("bad frame: three collinear points")
    cols = pts[:3]
    lam = solve(F, [[cols[j][i] for j in range(3)] for i in range(3)], list(pts[3]))
    H = tuple(tuple(F.mul(lam[j], cols[j][i]) for j in range(3)) for i in range(3))
    H_inv = tuple(tuple(r) for r in mat_inverse(F, H))
    points = frozenset(normalize(F, mat_vec(F, H, v)) for v in projective_points(F, 2, 1))
    return BaerSubplane(pts, H, H_inv, points)


def standard_subplane(F: FieldTower) -> BaerSubplane:
    return baer_subplane(F, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])


# varieties of sublines and subplanes

@dataclass(frozen=True)
class Regulus:
    subline: BaerSubline
    lines: tuple[SpreadLine, ...]
    space: Subspace
    quadric: QuadraticForm
    points: frozenset


def _local_to_global(space: Subspace) -> list[list[int]]:
    """Matrix whose rows pick the pivot coordinates of ``space``."""
    return [[1 if a == pc else 0 for a in range(space.n + 1)] for pc in space.pivots]


def subline_regulus(bose: BoseSpace, b: BaerSubline) -> Regulus:
    """The q+1 spread lines of a Baer subline and the hyperbolic quadric they rule."""
    F = bose.F
    lines = tuple(bose.bose_line(X) for X in sorted(b.points))
    space = span(F, [l.line for l in lines])
    if space.dim != 3:
        raise ProjectiveError(f"subline lines span dimension {space.dim}, expected 3")
    points = frozenset(p for l in lines for p in sub_points(F, l.line))
    local = [space.local_coords(F, p) for p in points]
    fits = vanishing_quadrics(F, local, 3)
    if len(fits) != 1:
        raise ProjectiveError(f"expected a unique quadric through the regulus, found {len(fits)}")
    quadric = fits[0].substitute(F, _local_to_global(space))
    return Regulus(b, lines, space, quadric, points)


def regulus_zero_set(bose: BoseSpace, reg: Regulus, level: int = 1) -> set[Point]:
    """Points of the quadric inside the (extended) 3-space."""
    F = bose.F
    pts = subspace_points_array(F, reg.space.at_level(level))
    pts = pts[reg.quadric.evaluate_many(F, pts) == 0]
    return {normalize(F, p) for p in pts.tolist()}


def extended_subline_ruling(bose: BoseSpace, b: BaerSubline) -> list[Subspace]:
    """Scroll lines X (X^{c_b})^q for X on the carrier of b."""
    F = bose.F
    return [bose.scroll_line(X, b.conj(F, X)) for X in line_points(F, b.carrier)]


@dataclass(frozen=True)
class SegreData:
    subplane: BaerSubplane
    lines: tuple[SpreadLine, ...]
    planes: tuple[Subspace, ...]
    points: frozenset
    quadrics: tuple[QuadraticForm, ...]


def segre_quadrics(F: FieldTower, B: BaerSubplane) -> tuple[QuadraticForm, ...]:
    """Three quadrics cutting out the Bose image of B.

    A point u of PG(5, q) lies on a line of the subplane iff H^-1 complexify(u)
    is a GF(q^2)-multiple of a rational vector, i.e. writing it as a + tau b the
    real vectors a, b are proportional.  The 2x2 minors of [a; b] are the forms.
    """
    A = [[0] * 6 for _ in range(3)]
    Bm = [[0] * 6 for _ in range(3)]
    for k in range(6):
        e = [1 if i == k else 0 for i in range(6)]
        w = mat_vec(F, B.H_inv, complexify(F, e))
        for i in range(3):
            A[i][k], Bm[i][k] = F.decompose(w[i])
    forms = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        f = QuadraticForm.from_product(F, A[i], Bm[j])
        g = QuadraticForm.from_product(F, A[j], Bm[i])
        forms.append(f.linear_combination(F, g, F.neg(1)))
    return tuple(forms)


def subplane_segre(bose: BoseSpace, B: BaerSubplane) -> SegreData:
    F = bose.F
    lines = tuple(bose.bose_line(X) for X in sorted(B.points))
    points = frozenset(p for l in lines for p in sub_points(F, l.line))
    # plane system: rho * H v for v rational, one plane per rho in GF(q^2)*/GF(q)*
    planes = []
    for rho in (1, *[F.compose(c, 1) for c in F.elements(1)]):
        cols = [[B.H[i][j] for i in range(3)] for j in range(3)]
        planes.append(span(F, [realify(F, [F.mul(rho, x) for x in col]) for col in cols]))
    return SegreData(B, lines, tuple(planes), points, segre_quadrics(F, B))


def extended_segre_ruling(bose: BoseSpace, B: BaerSubplane) -> list[Subspace]:
    F = bose.F
    return [bose.scroll_line(X, B.conj(F, X)) for X in bose.plane_points()]


def conj_subplane(bose: BoseSpace, B: BaerSubplane, X: Sequence[int]) -> Point:
    """X^{c_pi} for a point X of Gamma."""
    F = bose.F
    return bose.gamma_point(B.conj(F, bose.plane_point(X)))


def dump_spread(bose: BoseSpace) -> str:
    """Fixture dump: header with the field spec, then P0|P1 per spread line."""
    lines = [f"# {bose.F.spec()}"]
    for P, sl in sorted(bose.spread.items()):
        p0, p1 = sl.anchors
        lines.append(" ".join(map(str, p0)) + " | " + " ".join(map(str, p1)))
    return "\n".join(lines) + "\n"


def subplane_sublines(F: FieldTower, B: BaerSubplane) -> list[BaerSubline]:
    """The q^2+q+1 Baer sublines B ∩ l for lines l of the subplane."""
    out = []
    for l in B.lines(F):
        pts = sorted(p for p in B.points if incident(F, l, p))
        out.append(baer_subline(F, pts[0], pts[1], pts[2]))
    return out


def sublines_on_line(F: FieldTower, line: Sequence[int]) -> list[BaerSubline]:
    """All Baer sublines of one line of PG(2, q^2), deduplicated by pointset."""
    pts = line_points(F, line)
    seen: dict[frozenset, BaerSubline] = {}
    from itertools import combinations

    for a, b, c in combinations(pts, 3):
        if any(a in s and b in s and c in s for s in seen):
            continue
        s = baer_subline(F, a, b, c)
        seen.setdefault(s.points, s)
    return list(seen.values())


def rational_basis_subspace(F: FieldTower, rows) -> Subspace:
    return subspace(F, rows, level=1)
