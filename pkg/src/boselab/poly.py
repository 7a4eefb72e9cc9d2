"""Univariate polynomials and binary forms with coefficients in a :class:`FieldTower`.

A polynomial is a list of handles, low degree first.  A binary form of degree d
is a list ``c`` of length d + 1 standing for sum c[k] * t0^(d-k) * t1^k; its
parameter points are (t0 : t1) with affine value t1/t0, so (0 : 1) is infinity.
"""

from __future__ import annotations

from .field import FieldTower


def trim(f: list[int]) -> list[int]:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f: list[int]) -> int:
    return len(trim(f)) - 1


def evaluate(F: FieldTower, f: list[int], x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc


def poly_mul(F: FieldTower, f: list[int], g: list[int]) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
    return trim(out)


def poly_add(F: FieldTower, f: list[int], g: list[int]) -> list[int]:
    n = max(len(f), len(g))
    f = list(f) + [0] * (n - len(f))
    g = list(g) + [0] * (n - len(g))
    return trim([F.add(a, b) for a, b in zip(f, g)])


def poly_divmod(F: FieldTower, f: list[int], g: list[int]) -> tuple[list[int], list[int]]:
    g = trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = trim(f)
    if len(r) < len(g):
        return [], r
    quot = [0] * (len(r) - len(g) + 1)
    lead_inv = F.inv(g[-1])
    while len(r) >= len(g) and r:
        shift = len(r) - len(g)
        c = F.mul(r[-1], lead_inv)
        quot[shift] = c
        for i, b in enumerate(g):
            r[shift + i] = F.sub(r[shift + i], F.mul(c, b))
        r = trim(r)
    return trim(quot), r


def monic(F: FieldTower, f: list[int]) -> list[int]:
    f = trim(f)
    if not f:
        return f
    inv = F.inv(f[-1])
    return [F.mul(c, inv) for c in f]


def poly_gcd(F: FieldTower, f: list[int], g: list[int]) -> list[int]:
    a, b = trim(f), trim(g)
    while b:
        a, b = b, poly_divmod(F, a, b)[1]
    return monic(F, a)


def roots(F: FieldTower, f: list[int], level: int) -> list[tuple[int, int]]:
    """Roots of f in the given tower level with multiplicities (exhaustive search)."""
    f = trim(f)
    if not f:
        raise ValueError("zero polynomial has every element as a root")
    out = []
    for x in F.elements(level):
        m = 0
        while len(f) > 1 and evaluate(F, f, x) == 0:
            f, _ = poly_divmod(F, f, [F.neg(x), 1])
            m += 1
        if m:
            out.append((x, m))
    return out


# binary forms

def dehomogenize(form: list[int]) -> list[int]:
    return trim(form)


def form_roots(F: FieldTower, form: list[int], level: int) -> tuple[list[tuple[tuple[int, int], int]], int]:
    """Roots (t0 : t1) of a binary form over a level, with multiplicities.

    Returns ``(roots, unresolved)`` where ``unresolved`` is the degree of the
    factor with no roots in the level.  Points are normalised with t0 = 1,
    except infinity which is (0, 1).
    """
    d = len(form) - 1
    f = trim(form)
    if not f:
        raise ValueError("zero form")
    out = [((1, x), m) for x, m in roots(F, f, level)]
    at_inf = d - (len(f) - 1)
    if at_inf:
        out.append(((0, 1), at_inf))
    found = sum(m for _, m in out)
    return out, d - found


def form_gcd(F: FieldTower, forms: list[list[int]]) -> list[int]:
    """Monic gcd of binary forms (all of the same degree), as a binary form."""
    d = len(forms[0]) - 1
    g: list[int] = []
    inf_mult = d
    for f in forms:
        t = trim(f)
        if not t:
            continue
        g = poly_gcd(F, g, t) if g else monic(F, t)
        inf_mult = min(inf_mult, d - (len(t) - 1))
    if not g:
        raise ValueError("all forms vanish")
    # t0^m * homogenised g
    return list(g) + [0] * inf_mult


def form_divide(F: FieldTower, form: list[int], divisor: list[int]) -> list[int]:
    """Exact quotient of binary forms."""
    d, e = len(form) - 1, len(divisor) - 1
    quot, rem = poly_divmod(F, trim(form), trim(divisor))
    if rem:
        raise ValueError("binary form division is not exact")
    out = list(quot) + [0] * (d - e + 1 - len(quot))
    if len(out) != d - e + 1:
        raise ValueError("binary form division is not exact")
    return out


def form_eval(F: FieldTower, form: list[int], t: tuple[int, int]) -> int:
    d = len(form) - 1
    t0, t1 = t
    acc = 0
    for k, c in enumerate(form):
        if c:
            acc = F.add(acc, F.mul(c, F.mul(F.pow(t0, d - k), F.pow(t1, k))))
    return acc


def moment(F: FieldTower, r: int, t: tuple[int, int]) -> list[int]:
    """(t0^r, t0^(r-1) t1, ..., t1^r)."""
    t0, t1 = t
    return [F.mul(F.pow(t0, r - k), F.pow(t1, k)) for k in range(r + 1)]


def param_points(F: FieldTower, level: int) -> list[tuple[int, int]]:
    """All points of PG(1, q^level) as normalised parameter pairs."""
    return [(1, x) for x in F.elements(level)] + [(0, 1)]
