"""Points, subspaces and incidence in PG(n, q^k) for the levels of a tower.

Points are tuples of handles normalised so the first nonzero coordinate is 1.
Subspaces carry their reduced row echelon basis, which makes them hashable and
gives canonical identity for set based checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

import numpy as np

from .field import FieldTower

Point = tuple[int, ...]


class ProjectiveError(ValueError):
    pass


def normalize(F: FieldTower, v: Sequence[int]) -> Point:
    for c in v:
        if c:
            inv = F.inv(c)
            return tuple(F.mul(x, inv) for x in v)
    raise ProjectiveError("zero vector is not a projective point")


def is_zero(v: Sequence[int]) -> bool:
    return not any(v)


def combine(F: FieldTower, coeffs: Sequence[int], vectors: Sequence[Sequence[int]]) -> list[int]:
    """sum coeffs[i] * vectors[i]."""
    out = [0] * len(vectors[0])
    for c, v in zip(coeffs, vectors):
        if c:
            for j, x in enumerate(v):
                if x:
                    out[j] = F.add(out[j], F.mul(c, x))
    return out


def scale(F: FieldTower, c: int, v: Sequence[int]) -> list[int]:
    return [F.mul(c, x) for x in v]


def frob_vec(F: FieldTower, v: Sequence[int], k: int = 1) -> tuple[int, ...]:
    return tuple(F.frob(x, k) for x in v)


def rref(F: FieldTower, rows: Iterable[Sequence[int]]) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Reduced row echelon form (leading ones) and pivot columns."""
    m = [list(r) for r in rows]
    if not m:
        return (), ()
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = F.inv(m[r][c])
        m[r] = [F.mul(x, inv) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return tuple(tuple(row) for row in m[:r]), tuple(pivots)


def rank(F: FieldTower, rows: Iterable[Sequence[int]]) -> int:
    return len(rref(F, rows)[0])


def nullspace(F: FieldTower, rows: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Basis of {x : rows . x = 0}."""
    basis, pivots = rref(F, rows)
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(basis, pivots):
            v[pc] = F.neg(row[f])
        out.append(v)
    return out


def solve(F: FieldTower, matrix: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[int] | None:
    """One solution x of matrix . x = rhs, or None."""
    ncols = len(matrix[0])
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    basis, pivots = rref(F, aug)
    if ncols in pivots:
        return None
    x = [0] * ncols
    for row, pc in zip(basis, pivots):
        x[pc] = row[ncols]
    return x


def mat_inverse(F: FieldTower, m: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(m)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(m)]
    basis, pivots = rref(F, aug)
    if tuple(pivots[:n]) != tuple(range(n)) or len(basis) < n:
        raise ProjectiveError("singular matrix")
    return [list(row[n:]) for row in basis]


def mat_vec(F: FieldTower, m: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [F.dot(row, v) for row in m]


def mat_mul(F: FieldTower, a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    cols = list(zip(*b))
    return [[F.dot(row, col) for col in cols] for row in a]


def transpose(m: Sequence[Sequence[int]]) -> list[list[int]]:
    return [list(c) for c in zip(*m)]


@dataclass(frozen=True)
class Subspace:
    """A projective subspace of PG(n, q^level) in canonical RREF form."""

    n: int
    basis: tuple[tuple[int, ...], ...]
    level: int = 1

    @property
    def dim(self) -> int:
        return len(self.basis) - 1

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, x in enumerate(row) if x) for row in self.basis)

    def __len__(self) -> int:  # pragma: no cover - guard against accidental use
        raise TypeError("use count_points()")

    def count_points(self, F: FieldTower) -> int:
        if self.dim < 0:
            return 0
        Q = F.size(self.level)
        return (Q ** (self.dim + 1) - 1) // (Q - 1)

    def contains(self, F: FieldTower, v: Sequence[int]) -> bool:
        if is_zero(v):
            return True
        if self.dim < 0:
            return False
        # reduce v against the RREF basis
        w = list(v)
        for row, pc in zip(self.basis, self.pivots):
            if w[pc]:
                f = w[pc]
                w = [F.sub(x, F.mul(f, y)) for x, y in zip(w, row)]
        return is_zero(w)

    def contains_subspace(self, F: FieldTower, other: "Subspace") -> bool:
        return all(self.contains(F, row) for row in other.basis)

    def at_level(self, level: int) -> "Subspace":
        """The same subspace read over another tower level (variety extension)."""
        return Subspace(self.n, self.basis, level)

    def local_coords(self, F: FieldTower, v: Sequence[int]) -> tuple[int, ...]:
        """Coordinates of v in the RREF basis (pivot entries)."""
        return tuple(v[pc] for pc in self.pivots)

    def from_local(self, F: FieldTower, coords: Sequence[int]) -> list[int]:
        return combine(F, coords, self.basis)

    def equations(self, F: FieldTower) -> list[list[int]]:
        """Linear forms cutting out the subspace."""
        return nullspace(F, self.basis, self.n + 1) if self.basis else [
            [1 if i == j else 0 for j in range(self.n + 1)] for i in range(self.n + 1)
        ]


def subspace(F: FieldTower, rows: Iterable[Sequence[int]], n: int | None = None, level: int = 1) -> Subspace:
    rows = [list(r) for r in rows]
    if n is None:
        if not rows:
            raise ProjectiveError("ambient dimension required for the empty subspace")
        n = len(rows[0]) - 1
    if any(len(r) != n + 1 for r in rows):
        raise ProjectiveError("mixed ambient dimensions")
    basis, _ = rref(F, rows)
    return Subspace(n, basis, level)


def span(F: FieldTower, items: Iterable, level: int | None = None) -> Subspace:
    """Smallest subspace containing the given points and/or subspaces."""
    rows: list[Sequence[int]] = []
    lv = 1
    n = None
    for it in items:
        if isinstance(it, Subspace):
            rows.extend(it.basis)
            lv = max(lv, it.level)
            d = it.n
        else:
            rows.append(it)
            lv = max(lv, max(F.level_of(x) for x in it) if it else 1)
            d = len(it) - 1
        if n is None:
            n = d
        elif n != d:
            raise ProjectiveError("mixed ambient dimensions")
    if n is None:
        raise ProjectiveError("span of nothing")
    return subspace(F, rows, n, level if level is not None else lv)


def from_equations(F: FieldTower, eqs: Sequence[Sequence[int]], n: int, level: int = 1) -> Subspace:
    eqs = [e for e in eqs if not is_zero(e)]
    if not eqs:
        return Subspace(n, tuple(tuple(1 if i == j else 0 for j in range(n + 1)) for i in range(n + 1)), level)
    return subspace(F, nullspace(F, eqs, n + 1), n, level)


def meet(F: FieldTower, a: Subspace, b: Subspace) -> Subspace:
    if a.n != b.n:
        raise ProjectiveError("mixed ambient dimensions")
    return from_equations(F, a.equations(F) + b.equations(F), a.n, max(a.level, b.level))


def frob_subspace(F: FieldTower, s: Subspace, k: int = 1) -> Subspace:
    return subspace(F, [frob_vec(F, r, k) for r in s.basis], s.n, s.level)


def rational_part(F: FieldTower, s: Subspace, level: int = 1) -> Subspace:
    """Points of s with coordinates in GF(q^level), as a subspace over that level.

    s meets its Frobenius conjugates in the largest subspace defined over the
    subfield; that subspace has a subfield RREF basis.
    """
    t = s
    for k in range(level, 4, level):
        t = meet(F, t, frob_subspace(F, s, k))
    if any(F.level_of(x) > level for row in t.basis for x in row):
        raise AssertionError("conjugation-stable subspace with irrational RREF")  # pragma: no cover
    return Subspace(t.n, t.basis, level)


def projective_points(F: FieldTower, n: int, level: int = 1) -> Iterator[Point]:
    """Stream the normalised points of PG(n, q^level)."""
    Q = F.size(level)
    for lead in range(n + 1):
        prefix = (0,) * lead + (1,)
        for tail in product(range(Q), repeat=n - lead):
            yield prefix + tail


def count_pg(Q: int, n: int) -> int:
    return (Q ** (n + 1) - 1) // (Q - 1)


def sub_points(F: FieldTower, s: Subspace) -> Iterator[Point]:
    """Stream the points of a subspace over its level, no repeats."""
    if s.dim < 0:
        return
    for c in projective_points(F, s.dim, s.level):
        yield tuple(combine(F, c, s.basis))


def points_array(F: FieldTower, n: int, level: int = 1) -> np.ndarray:
    """All normalised points of PG(n, q^level) as an (N, n+1) handle array."""
    Q = F.size(level)
    blocks = []
    for lead in range(n + 1):
        k = n - lead
        tail = np.array(list(product(range(Q), repeat=k)), dtype=np.int64).reshape(Q**k, k)
        block = np.zeros((tail.shape[0], n + 1), dtype=np.int64)
        block[:, lead] = 1
        block[:, lead + 1:] = tail
        blocks.append(block)
    return np.concatenate(blocks)


def subspace_points_array(F: FieldTower, s: Subspace) -> np.ndarray:
    """Points of a subspace as a handle array (normalised by RREF structure)."""
    coeffs = points_array(F, s.dim, s.level)
    basis = np.array(s.basis, dtype=np.int64)
    out = np.zeros((coeffs.shape[0], s.n + 1), dtype=np.int64)
    for i in range(basis.shape[0]):
        out = F.add_table[out, F.mul_table[coeffs[:, i:i + 1], basis[i][None, :]]]
    return out.astype(np.int64)
