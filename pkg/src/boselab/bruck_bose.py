"""Bruck-Bose representation as the slice of the Bose picture with a 4-space Pi_g."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .bose import BoseSpace, SpreadLine, incident, join, line_points
from .field import QUAD, QUARTIC, FieldTower
from .projective import (
    Point,
    ProjectiveError,
    Subspace,
    from_equations,
    frob_subspace,
    meet,
    normalize,
    projective_points,
    rational_part,
    span,
    sub_points,
)


@dataclass(frozen=True)
class InfinityFrame:
    form: tuple[int, ...]
    pi_g: Subspace
    sigma_inf: Subspace
    sigma_form: tuple[int, ...]
    g_line: Subspace
    g_q_line: Subspace
    ell_inf: Point
    line_spread: tuple[SpreadLine, ...]
    g_ext: np.ndarray = field(default=None, compare=False, repr=False)

    def on_pi_g(self, F: FieldTower, u: Sequence[int]) -> bool:
        return F.dot(self.form, u) == 0

    def at_infinity(self, F: FieldTower, u: Sequence[int]) -> bool:
        return F.dot(self.form, u) == 0 and F.dot(self.sigma_form, u) == 0

    def on_g(self, F: FieldTower, X: Sequence[int]) -> bool:
        """X on g or g^q, read over GF(q^4)."""
        return self.g_line.at_level(QUARTIC).contains(F, X) or self.g_q_line.at_level(QUARTIC).contains(F, X)

    def g_points(self, F: FieldTower, level: int = QUARTIC) -> list[Point]:
        if level == QUARTIC and self.g_ext is not None:
            return [tuple(r) for r in self.g_ext.tolist()]
        return [normalize(F, p) for p in sub_points(F, self.g_line.at_level(level))]


def make_infinity_frame(bose: BoseSpace, form: Sequence[int] = (0, 0, 0, 0, 0, 1)) -> InfinityFrame:
    """Frame for the hyperplane ``form . x = 0`` (default x5 = 0)."""
    F = bose.F
    form = tuple(form)
    if len(form) != 6 or not any(form) or any(F.level_of(c) > 1 for c in form):
        raise ProjectiveError("Pi_g must be a hyperplane of PG(5, q)")
    pi_g = from_equations(F, [form], 5)
    g = meet(F, pi_g.at_level(QUAD), bose.gamma)
    if g.dim != 1:
        raise ProjectiveError("the extension of Pi_g must meet Gamma in a line")
    g_q = frob_subspace(F, g)
    sigma = rational_part(F, span(F, [g, g_q]))
    if sigma.dim != 3 or not pi_g.contains_subspace(F, sigma):
        raise AssertionError("Sigma_inf is not a 3-space of Pi_g")  # pragma: no cover
    # a second form cutting Sigma_inf out of Pi_g
    sigma_form = next(tuple(e) for e in sigma.equations(F) if span(F, [e, form]).dim == 1)
    gp = [bose.plane_point(normalize(F, X)) for X in sub_points(F, g)][:2]
    ell = join(F, gp[0], gp[1])
    spread = tuple(bose.bose_line(P) for P in line_points(F, ell))
    g_ext = np.array([normalize(F, p) for p in sub_points(F, g.at_level(QUARTIC))], dtype=np.int64)
    return InfinityFrame(form, pi_g, sigma, sigma_form, g, g_q, ell, spread, g_ext)


@dataclass(frozen=True)
class SliceResult:
    """Intersection of a Bose pointset with Pi_g, exact at infinity.

    ``affine`` are the points off Sigma_inf, ``at_infinity`` the points of
    Sigma_inf and ``spread_lines`` the plane points whose whole spread line is
    in the slice.
    """

    affine: frozenset
    at_infinity: frozenset
    spread_lines: tuple[Point, ...]

    @property
    def points(self) -> frozenset:
        return self.affine | self.at_infinity

    def conventional(self, bose: BoseSpace) -> frozenset:
        """Drop the full spread-line components, keeping their points met by the rest."""
        F = bose.F
        full = set(self.spread_lines)
        isolated = {p for p in self.at_infinity if bose.line_of_point(p).plane_point not in full}
        return frozenset(self.affine | isolated)


def slice_points(bose: BoseSpace, frame: InfinityFrame, pointset: Iterable[Sequence[int]]) -> SliceResult:
    F = bose.F
    affine, inf = set(), set()
    for u in pointset:
        if frame.on_pi_g(F, u):
            u = normalize(F, u)
            (inf if frame.at_infinity(F, u) else affine).add(u)
    by_line: dict[Point, int] = {}
    for u in inf:
        P = bose.line_of_point(u).plane_point
        by_line[P] = by_line.get(P, 0) + 1
    full = tuple(sorted(P for P, k in by_line.items() if k == F.q + 1))
    return SliceResult(frozenset(affine), frozenset(inf), full)


def bose_pointset(bose: BoseSpace, plane_points: Iterable[Sequence[int]]) -> set[Point]:
    F = bose.F
    return {normalize(F, p) for P in plane_points for p in sub_points(F, bose.bose_line(P).line)}


def slice_plane_set(bose: BoseSpace, frame: InfinityFrame, plane_points: Iterable[Sequence[int]]) -> SliceResult:
    return slice_points(bose, frame, bose_pointset(bose, plane_points))


@dataclass
class IncidenceReport:
    points: int
    lines: int
    pairs_checked: int
    line_pairs_checked: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def bb_point_key(bose: BoseSpace, frame: InfinityFrame, u: Sequence[int]) -> Point:
    """The PG(2, q^2) point a point of Pi_g stands for."""
    return bose.line_of_point(u).plane_point


def bb_incidence_check(bose: BoseSpace, frame: InfinityFrame, samples: int = 500, seed: int = 0,
                       exhaustive_limit: int = 100) -> IncidenceReport:
    """Rebuild the incidence structure inside Pi_g and test the plane axioms."""
    F = bose.F
    q = F.q
    failures: list[str] = []
    affine_pts = [normalize(F, u) for u in sub_points(F, frame.pi_g) if not frame.at_infinity(F, u)]
    if len(affine_pts) != q**4:
        failures.append(f"{len(affine_pts)} affine points, expected {q ** 4}")
    bb_points = {bb_point_key(bose, frame, u) for u in affine_pts} | {s.plane_point for s in frame.line_spread}
    if len(bb_points) != q**4 + q**2 + 1:
        failures.append(f"{len(bb_points)} points, expected {q ** 4 + q ** 2 + 1}")

    # lines: planes of Pi_g through a spread line, plus Sigma_inf
    lines: list[frozenset] = []
    plane_lines = list(projective_points(F, 2, QUAD))
    for ell in plane_lines:
        sl = slice_points(bose, frame, (p for P in line_points(F, ell) for p in sub_points(F, bose.bose_line(P).line)))
        keys = {bb_point_key(bose, frame, u) for u in sl.affine} | set(sl.spread_lines)
        if ell == frame.ell_inf:
            ok = not sl.affine and len(sl.spread_lines) == q**2 + 1
        else:
            ok = len(sl.affine) == q**2 and len(sl.spread_lines) == 1
        if not ok or keys != set(line_points(F, ell)):
            failures.append(f"line {ell} does not slice to a Bruck-Bose line")
        lines.append(frozenset(keys))
    if len(set(lines)) != q**4 + q**2 + 1:
        failures.append(f"{len(set(lines))} lines, expected {q ** 4 + q ** 2 + 1}")

    pts = sorted(bb_points)
    rng = np.random.default_rng(seed)
    if len(pts) <= exhaustive_limit:
        pairs = list(combinations(range(len(pts)), 2))
    else:
        pairs = []
        while len(pairs) < samples:
            i, j = rng.choice(len(pts), size=2, replace=False)
            pairs.append((int(i), int(j)))
    for i, j in pairs:
        k = sum(1 for L in lines if pts[i] in L and pts[j] in L)
        if k != 1:
            failures.append(f"points {pts[i]} {pts[j]} on {k} lines")
    if len(lines) <= exhaustive_limit:
        lpairs = list(combinations(range(len(lines)), 2))
    else:
        lpairs = [tuple(int(x) for x in rng.choice(len(lines), size=2, replace=False)) for _ in range(samples)]
    for i, j in lpairs:
        if len(lines[i] & lines[j]) != 1:
            failures.append(f"lines {i} {j} meet in {len(lines[i] & lines[j])} points")
    return IncidenceReport(len(bb_points), len(set(lines)), len(pairs), len(lpairs), failures[:20])

