"""Quadratic forms stored as upper-triangular monomial coefficients.

For n = 5 the 21 coefficients follow the monomial order
x0^2, x0x1, ..., x0x5, x1^2, x1x2, ..., x5^2.  No symmetric matrix and no
division by two is ever used, so everything works verbatim in characteristic 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .field import FieldTower
from .projective import nullspace


@lru_cache(maxsize=None)
def monomials(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(n + 1) for j in range(i, n + 1))


@dataclass(frozen=True)
class QuadraticForm:
    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != len(monomials(self.n)):
            raise ValueError(f"expected {len(monomials(self.n))} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_dict(cls, n: int, terms: dict[tuple[int, int], int], F: FieldTower) -> "QuadraticForm":
        index = {m: k for k, m in enumerate(monomials(n))}
        coeffs = [0] * len(index)
        for (i, j), c in terms.items():
            k = index[(min(i, j), max(i, j))]
            coeffs[k] = F.add(coeffs[k], c)
        return cls(n, tuple(coeffs))

    @classmethod
    def from_product(cls, F: FieldTower, a: Sequence[int], b: Sequence[int]) -> "QuadraticForm":
        """The form (a . x)(b . x)."""
        n = len(a) - 1
        terms: dict[tuple[int, int], int] = {}
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    key = (min(i, j), max(i, j))
                    terms[key] = F.add(terms.get(key, 0), F.mul(ai, bj))
        return cls.from_dict(n, terms, F)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def evaluate(self, F: FieldTower, v: Sequence[int]) -> int:
        acc = 0
        for (i, j), c in zip(monomials(self.n), self.coeffs):
            if c and v[i] and v[j]:
                acc = F.add(acc, F.mul(c, F.mul(v[i], v[j])))
        return acc

    def evaluate_many(self, F: FieldTower, pts: np.ndarray) -> np.ndarray:
        acc = np.zeros(pts.shape[0], dtype=np.int64)
        for (i, j), c in zip(monomials(self.n), self.coeffs):
            if c:
                term = F.mul_table[c, F.mul_table[pts[:, i], pts[:, j]]]
                acc = F.add_table[acc, term]
        return acc

    def partials(self, F: FieldTower, v: Sequence[int]) -> list[int]:
        """Formal partial derivatives at v."""
        out = [0] * (self.n + 1)
        for (i, j), c in zip(monomials(self.n), self.coeffs):
            if not c:
                continue
            if i == j:
                # d/dx_i (c x_i^2) = 2 c x_i
                out[i] = F.add(out[i], F.mul(F.add(c, c), v[i]))
            else:
                out[i] = F.add(out[i], F.mul(c, v[j]))
                out[j] = F.add(out[j], F.mul(c, v[i]))
        return out

    def linear_combination(self, F: FieldTower, other: "QuadraticForm", lam: int, mu: int = 1) -> "QuadraticForm":
        """mu * self + lam * other."""
        return QuadraticForm(self.n, tuple(F.add(F.mul(mu, a), F.mul(lam, b))
                                           for a, b in zip(self.coeffs, other.coeffs)))

    def scaled(self, F: FieldTower, c: int) -> "QuadraticForm":
        return QuadraticForm(self.n, tuple(F.mul(c, a) for a in self.coeffs))

    def substitute(self, F: FieldTower, matrix: Sequence[Sequence[int]]) -> "QuadraticForm":
        """The form x -> Q(M x) for an (n+1) x (m+1) matrix M."""
        m = len(matrix[0]) - 1
        terms: dict[tuple[int, int], int] = {}
        for (i, j), c in zip(monomials(self.n), self.coeffs):
            if not c:
                continue
            ri, rj = matrix[i], matrix[j]
            for a in range(m + 1):
                if not ri[a]:
                    continue
                for b in range(m + 1):
                    if rj[b]:
                        key = (min(a, b), max(a, b))
                        terms[key] = F.add(terms.get(key, 0), F.mul(c, F.mul(ri[a], rj[b])))
        return QuadraticForm.from_dict(m, terms, F)

    def dump(self) -> str:
        return " ".join(str(c) for c in self.coeffs)


def monomial_row(F: FieldTower, n: int, v: Sequence[int]) -> list[int]:
    return [F.mul(v[i], v[j]) for i, j in monomials(n)]


def vanishing_quadrics(F: FieldTower, points: Iterable[Sequence[int]], n: int) -> list[QuadraticForm]:
    """Basis of the space of quadratic forms vanishing on the points."""
    rows = [monomial_row(F, n, v) for v in points]
    return [QuadraticForm(n, tuple(v)) for v in nullspace(F, rows, len(monomials(n)))]


def common_zeros(F: FieldTower, forms: Sequence[QuadraticForm], pts: np.ndarray) -> np.ndarray:
    """Boolean mask of rows of ``pts`` where every form vanishes."""
    mask = np.ones(pts.shape[0], dtype=bool)
    for f in forms:
        mask &= f.evaluate_many(F, pts) == 0
    return mask


def dump_quadrics(forms: Sequence[QuadraticForm]) -> str:
    """Quadric dump format: one form per line, coefficients in monomial order."""
    return "\n".join(f.dump() for f in forms) + "\n"


def load_quadrics(text: str, n: int = 5) -> list[QuadraticForm]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(QuadraticForm(n, tuple(int(x) for x in line.split())))
    return out
