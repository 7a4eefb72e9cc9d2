"""Exact arithmetic in the tower GF(q) < GF(q^2) < GF(q^4), q = p^e.

Elements of every level are plain ``int`` handles into one packed encoding:

* GF(q):   base-p digit vector of a polynomial in u modulo ``base_poly``;
* GF(q^2): ``a0 + q*a1`` meaning ``a0 + a1*tau`` with tau^2 = t1*tau + t0;
* GF(q^4): ``b0 + q^2*b1`` meaning ``b0 + b1*omega`` with omega^2 = s1*omega + s0.

The encoding nests, so GF(q) elements are exactly the ints below q and GF(q^2)
elements the ints below q^2.  Embedding is the identity and every element has a
single canonical handle.  All arithmetic is table driven over the top level.
"""

from __future__ import annotations

import re
from array import array
from dataclasses import dataclass
from functools import cached_property
from itertools import product

import numpy as np

__all__ = [
    "FieldError",
    "FieldTower",
    "build_tower",
    "default_tower",
    "parse_field_spec",
    "solve_quadratic",
]

QUAD, QUARTIC = 2, 4

# Monic polynomials for GF(p^e) over GF(p), low degree first without the leading 1.
_BASE_POLYS = {
    2: {2: (1, 1), 3: (2, 2), 5: (2, 4), 7: (3, 6)},
    3: {2: (1, 1, 0), 3: (1, 2, 0)},
}

# Shipped (t0, t1) for x^2 - t1*x - t0, as GF(q) handles.
DEFAULT_PRIMITIVE = {2: (1, 1), 3: (1, 1), 4: (2, 1), 5: (3, 1), 7: (4, 1)}


class FieldError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _prime_field_tables(p: int, e: int, base_poly: tuple[int, ...]):
    """Addition and multiplication tables of GF(p^e) from ``base_poly``."""
    q = p**e
    digits = np.array([[(a // p**i) % p for i in range(e)] for a in range(q)], dtype=np.int64)
    weights = p ** np.arange(e, dtype=np.int64)
    add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
    mul = np.zeros((q, q), dtype=np.int64)
    for a in range(q):
        for b in range(q):
            prod = [0] * (2 * e - 1)
            for i in range(e):
                for j in range(e):
                    prod[i + j] += digits[a, i] * digits[b, j]
            # u^e = -(base_poly) reduction
            for k in range(2 * e - 2, e - 1, -1):
                c = prod[k] % p
                prod[k] = 0
                for i, m in enumerate(base_poly):
                    prod[k - e + i] -= c * m
            mul[a, b] = sum((prod[i] % p) * p**i for i in range(e))
    return add, mul


def _quadratic_extension(add: np.ndarray, mul: np.ndarray, c0: int, c1: int):
    """Tables for F[x]/(x^2 - c1 x - c0) given tables of F (size n)."""
    n = add.shape[0]
    idx = np.arange(n * n)
    a0, a1 = (idx % n)[:, None], (idx // n)[:, None]
    b0, b1 = (idx % n)[None, :], (idx // n)[None, :]
    new_add = add[a0, b0] + n * add[a1, b1]
    a1b1 = mul[a1, b1]
    lo = add[mul[a0, b0], mul[a1b1, c0]]
    hi = add[add[mul[a0, b1], mul[a1, b0]], mul[a1b1, c1]]
    return new_add, lo + n * hi


def _has_root(add, mul, neg, size, t0, t1) -> bool:
    # roots of x^2 - t1 x - t0 among the first ``size`` handles
    xs = np.arange(size)
    val = add[add[mul[xs, xs], neg[mul[t1, xs]]], neg[t0]]
    return bool(np.any(val == 0))


def _order(mul, x: int, n: int) -> int:
    """Multiplicative order of x in a cyclic group of order n."""
    def power(b, k):
        r = 1
        while k:
            if k & 1:
                r = int(mul[r, b])
            b = int(mul[b, b])
            k >>= 1
        return r

    order = n
    for r in _prime_factors(n):
        while order % r == 0 and power(x, order // r) == 1:
            order //= r
    return order


@dataclass(frozen=True, eq=False)
class FieldTower:
    """Immutable tables for GF(q) < GF(q^2) < GF(q^4).

    Construct with :func:`build_tower` or :func:`default_tower`.
    """

    p: int
    e: int
    base_poly: tuple[int, ...]
    t0: int
    t1: int
    s0: int
    s1: int
    add_table: np.ndarray
    mul_table: np.ndarray

    @cached_property
    def q(self) -> int:
        return self.p**self.e

    @cached_property
    def order(self) -> int:
        """Size of the top level GF(q^4)."""
        return self.q**4

    def size(self, level: int) -> int:
        return self.q**level

    # flat arrays for scalar hot paths
    @cached_property
    def _add(self):
        return array("I", self.add_table.ravel().tolist())

    @cached_property
    def _mul(self):
        return array("I", self.mul_table.ravel().tolist())

    @cached_property
    def neg_table(self) -> list[int]:
        return [int(np.flatnonzero(self.add_table[a] == 0)[0]) for a in range(self.order)]

    @cached_property
    def inv_table(self) -> list[int]:
        inv = [0] * self.order
        for a in range(1, self.order):
            inv[a] = int(np.flatnonzero(self.mul_table[a] == 1)[0])
        return inv

    @cached_property
    def _frob(self) -> list[int]:
        return [self.pow(a, self.q) for a in range(self.order)]

    def add(self, a: int, b: int) -> int:
        return self._add[a * self.order + b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a * self.order + self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a * self.order + b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in finite field")
        return self.inv_table[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        r = 1
        while k:
            if k & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            k >>= 1
        return r

    def frob(self, a: int, k: int = 1) -> int:
        """a -> a^(q^k)."""
        for _ in range(k % 4):
            a = self._frob[a]
        return a

    def from_int(self, n: int) -> int:
        """Image of the integer n in the prime field."""
        return n % self.p

    def level_of(self, a: int) -> int:
        """Smallest tower level (1, 2 or 4) containing a."""
        if a < self.q:
            return 1
        return QUAD if a < self.q**2 else QUARTIC

    def elements(self, level: int = 1) -> range:
        return range(self.q**level)

    def nonzero(self, level: int = 1) -> range:
        return range(1, self.q**level)

    @property
    def tau(self) -> int:
        return self.q

    @cached_property
    def tau_q(self) -> int:
        return self.frob(self.tau)

    @property
    def omega(self) -> int:
        return self.q**2

    def decompose(self, a: int, level: int = QUAD) -> tuple[int, int]:
        """Coordinates of a over the level below: GF(q^2) -> (x0, x1) with a = x0 + x1*tau."""
        n = self.q if level == QUAD else self.q**2
        if a >= n * n:
            raise FieldError(f"{a} is not in the degree-{level} level")
        return a % n, a // n

    def compose(self, lo: int, hi: int, level: int = QUAD) -> int:
        n = self.q if level == QUAD else self.q**2
        return lo + n * hi

    def base_coeffs(self, a: int) -> list[int]:
        """GF(p) digits of a GF(q) handle, low degree first."""
        return [(a // self.p**i) % self.p for i in range(self.e)]

    def from_base_coeffs(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.e:
            raise FieldError(f"too many coefficients for GF({self.q}): {coeffs}")
        return sum((c % self.p) * self.p**i for i, c in enumerate(coeffs))

    def sum(self, values) -> int:
        acc = 0
        for v in values:
            acc = self._add[acc * self.order + v]
        return acc

    def dot(self, xs, ys) -> int:
        acc, n, add, mul = 0, self.order, self._add, self._mul
        for x, y in zip(xs, ys):
            if x and y:
                acc = add[acc * n + mul[x * n + y]]
        return acc

    # vectorised helpers over numpy handle arrays
    def vadd(self, a, b):
        return self.add_table[a, b]

    def vmul(self, a, b):
        return self.mul_table[a, b]

    def spec(self) -> str:
        """Field spec text ``p=.. e=.. t0=.. t1=.. quartic=..`` for this tower."""
        def coeffs(a: int) -> str:
            return ",".join(str(c) for c in self.base_coeffs(a))

        s0 = self.decompose(self.s0)
        s1 = self.decompose(self.s1)
        quartic = ":".join(coeffs(x) for x in (*s0, *s1))
        parts = [f"p={self.p}", f"e={self.e}", f"t0={coeffs(self.t0)}", f"t1={coeffs(self.t1)}"]
        if self.e > 1:
            parts.append("base=" + ",".join(str(c) for c in self.base_poly))
        parts.append(f"quartic={quartic}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"FieldTower({self.spec()})"


def _find_quartic_step(add, mul, neg, q: int) -> tuple[int, int]:
    n2 = q * q
    for s1, s0 in product(range(n2), range(1, n2)):
        if _has_root(add, mul, neg, n2, s0, s1):
            continue

        def pair_mul(a, b, s0=s0, s1=s1):
            hh = mul[a[1], b[1]]
            lo = add[mul[a[0], b[0]], mul[hh, s0]]
            hi = add[add[mul[a[0], b[1]], mul[a[1], b[0]]], mul[hh, s1]]
            return int(lo), int(hi)

        def power(k):
            r, b = (1, 0), (0, 1)
            while k:
                if k & 1:
                    r = pair_mul(r, b)
                b = pair_mul(b, b)
                k >>= 1
            return r

        n = n2 * n2 - 1
        if all(power(n // r) != (1, 0) for r in _prime_factors(n)):
            return s0, s1
    raise FieldError(f"no primitive quadratic over GF({n2})")  # pragma: no cover


def build_tower(
    p: int,
    e: int,
    t0: int,
    t1: int,
    *,
    base_poly: tuple[int, ...] | None = None,
    quartic: tuple[int, int] | None = None,
) -> FieldTower:
    """Build the tower from the primitive polynomial x^2 - t1 x - t0 over GF(p^e).

    ``t0``/``t1`` are GF(q) handles.  ``quartic`` optionally pins (s0, s1) for the
    second step omega^2 = s1 omega + s0 over GF(q^2); otherwise the first primitive
    choice in handle order is used.
    """
    if not _is_prime(p):
        raise FieldError(f"p={p} is not prime")
    if e < 1:
        raise FieldError(f"e={e} must be positive")
    q = p**e
    if base_poly is None:
        if e == 1:
            base_poly = ()
        elif e in _BASE_POLYS and p in _BASE_POLYS[e]:
            base_poly = _BASE_POLYS[e][p]
        else:
            raise FieldError(f"no shipped base polynomial for GF({p}^{e}); pass base_poly")
    base_poly = tuple(int(c) % p for c in base_poly)
    if len(base_poly) != (e if e > 1 else 0):
        raise FieldError(f"base polynomial needs {e} coefficients")
    if not (0 <= t0 < q and 0 <= t1 < q):
        raise FieldError("t0, t1 must be GF(q) elements")

    add1, mul1 = _prime_field_tables(p, e, base_poly)
    if e > 1:
        # base polynomial must give a field: every nonzero element invertible
        if any(not np.any(mul1[a] == 1) for a in range(1, q)):
            raise FieldError(f"base polynomial {base_poly} is reducible over GF({p})")
    neg1 = np.array([int(np.flatnonzero(add1[a] == 0)[0]) for a in range(q)])
    if _has_root(add1, mul1, neg1, q, t0, t1):
        raise FieldError(f"x^2 - t1 x - t0 with t0={t0}, t1={t1} is reducible over GF({q})")

    add2, mul2 = _quadratic_extension(add1, mul1, t0, t1)
    if _order(mul2, q, q * q - 1) != q * q - 1:
        raise FieldError(f"x^2 - t1 x - t0 with t0={t0}, t1={t1} is not primitive over GF({q})")
    neg2 = np.array([int(np.flatnonzero(add2[a] == 0)[0]) for a in range(q * q)])

    if quartic is None:
        s0, s1 = _find_quartic_step(add2, mul2, neg2, q)
    else:
        s0, s1 = quartic
        if _has_root(add2, mul2, neg2, q * q, s0, s1):
            raise FieldError(f"quartic step x^2 - {s1} x - {s0} is reducible over GF({q * q})")
    add4, mul4 = _quadratic_extension(add2, mul2, s0, s1)
    dtype = np.uint16 if q**4 < 2**16 else np.uint32
    tower = FieldTower(p, e, base_poly, t0, t1, s0, s1, add4.astype(dtype), mul4.astype(dtype))
    # defining identities of the adjoined root
    tau, tq = tower.tau, tower.tau_q
    assert tower.add(tau, tq) == t1 and tower.mul(tau, tq) == tower.neg(t0)
    return tower


_CACHE: dict[tuple, FieldTower] = {}


def default_tower(q: int) -> FieldTower:
    """Shipped tower for q in {2, 3, 4, 5, 7} (cached)."""
    if q not in DEFAULT_PRIMITIVE:
        raise FieldError(f"no shipped primitive polynomial for q={q}")
    key = ("default", q)
    if key not in _CACHE:
        p = next(d for d in range(2, q + 1) if q % d == 0)
        e = round(np.log(q) / np.log(p))
        t0, t1 = DEFAULT_PRIMITIVE[q]
        _CACHE[key] = build_tower(p, e, t0, t1)
    return _CACHE[key]


_SPEC_RE = re.compile(r"(\w+)=(\S+)")


def parse_field_spec(text: str) -> FieldTower:
    """Parse ``p=<int> e=<int> t0=<coeffs> t1=<coeffs> [base=<coeffs>] [quartic=<s0_0:s0_1:s1_0:s1_1>]``.

    Coefficient lists are comma-separated GF(p) digits, low degree first.  The
    quartic entry lists the GF(q)-coordinates of s0 and s1 over tau.
    """
    fields = dict(_SPEC_RE.findall(text))
    for key in ("p", "e", "t0", "t1"):
        if key not in fields:
            raise FieldError(f"field spec missing '{key}': {text!r}")
    unknown = set(fields) - {"p", "e", "t0", "t1", "base", "quartic"}
    if unknown:
        raise FieldError(f"unknown field spec keys {sorted(unknown)}")
    try:
        p, e = int(fields["p"]), int(fields["e"])

        def coeffs(s: str) -> list[int]:
            return [int(c) for c in s.split(",")]

        def handle(cs: list[int]) -> int:
            if len(cs) > e:
                raise FieldError(f"too many coefficients {cs} for GF({p}^{e})")
            return sum((c % p) * p**i for i, c in enumerate(cs))

        base = tuple(coeffs(fields["base"])) if "base" in fields else None
        quartic = None
        if "quartic" in fields:
            parts = [handle(coeffs(s)) for s in fields["quartic"].split(":")]
            if len(parts) != 4:
                raise FieldError("quartic needs four ':'-separated GF(q) elements")
            q = p**e
            quartic = (parts[0] + q * parts[1], parts[2] + q * parts[3])
        return build_tower(p, e, handle(coeffs(fields["t0"])), handle(coeffs(fields["t1"])),
                           base_poly=base, quartic=quartic)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, FieldError):
            raise
        raise FieldError(f"malformed field spec {text!r}: {exc}") from exc


def solve_quadratic(tower: FieldTower, a: int, b: int, c: int) -> list[int]:
    """Roots of a x^2 + b x + c in GF(q^4), repeated by multiplicity.

    Raises :class:`FieldError` for the degenerate a = b = 0 input.
    """
    if any(tower.level_of(x) > QUAD for x in (a, b, c)):
        raise FieldError("coefficients must lie in GF(q^2)")
    if a == 0 and b == 0:
        raise FieldError("degenerate quadratic: a = b = 0")
    if a == 0:
        return [tower.div(tower.neg(c), b)]
    roots = []
    for x in tower.elements(QUARTIC):
        v = tower.add(tower.mul(tower.add(tower.mul(a, x), b), x), c)
        if v == 0:
            roots.append(x)
    if len(roots) == 1:
        roots.append(roots[0])
    for r in roots:
        assert tower.add(tower.mul(tower.add(tower.mul(a, r), b), r), c) == 0
    if len(roots) != 2:
        raise FieldError(f"quadratic has {len(roots)} roots in GF(q^4)")  # pragma: no cover
    return sorted(roots)
