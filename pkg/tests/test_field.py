import pytest
from hypothesis import given, settings, strategies as st

from boselab.field import QUAD, QUARTIC, FieldError, build_tower, default_tower, parse_field_spec, solve_quadratic

TOWERS = {q: default_tower(q) for q in (2, 3, 4, 5)}


def element(q, level):
    return st.integers(0, q**level - 1)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_sizes_and_levels(q):
    F = TOWERS[q]
    assert F.order == q**4
    assert sum(1 for x in F.elements(QUARTIC) if F.level_of(x) == 1) == q
    assert sum(1 for x in F.elements(QUARTIC) if F.level_of(x) <= QUAD) == q**2


@pytest.mark.parametrize("q", [2, 3, 4, 5])
@settings(max_examples=200, deadline=None)
@given(data=st.data())
def test_field_axioms(q, data):
    F = TOWERS[q]
    a, b, c = (data.draw(element(q, 4)) for _ in range(3))
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    if a:
        assert F.mul(a, F.inv(a)) == 1


@pytest.mark.parametrize("q", [2, 3, 4, 5])
@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_frobenius(q, data):
    F = TOWERS[q]
    a, b = data.draw(element(q, 4)), data.draw(element(q, 4))
    assert F.frob(a) == F.pow(a, q)
    assert F.frob(F.mul(a, b)) == F.mul(F.frob(a), F.frob(b))
    assert F.frob(F.add(a, b)) == F.add(F.frob(a), F.frob(b))
    assert F.frob(a, 4) == a
    x = data.draw(element(q, 2))
    assert F.frob(x, 2) == x


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_decompose_compose_roundtrip(q):
    F = TOWERS[q]
    for a in F.elements(QUAD):
        lo, hi = F.decompose(a)
        assert F.add(lo, F.mul(F.tau, hi)) == a
        assert F.compose(lo, hi) == a


def test_q3_tower_identities():
    F = build_tower(3, 1, 1, 1)
    t, tq = F.tau, F.tau_q
    assert F.mul(t, t) == F.add(t, 1)
    assert tq == F.add(F.mul(2, t), 1)
    assert F.add(t, tq) == 1
    assert F.mul(t, tq) == 2


def test_reducible_rejected():
    with pytest.raises(FieldError):
        build_tower(3, 1, 1, 0)  # x^2 - 1


def test_p5_example_polynomial_is_reducible():
    # x^2 - x - 2 = (x - 2)(x + 1) over GF(5)
    with pytest.raises(FieldError):
        build_tower(5, 1, 2, 1)


def test_primitive_root_order():
    F = default_tower(5)
    x, k = F.tau, 1
    while x != 1:
        x, k = F.mul(x, F.tau), k + 1
    assert k == 24


def test_parse_spec_roundtrip():
    F = default_tower(4)
    G = parse_field_spec(F.spec())
    assert (G.q, G.t0, G.t1, G.s0, G.s1) == (F.q, F.t0, F.t1, F.s0, F.s1)
    with pytest.raises(FieldError):
        parse_field_spec("p=3 e=1 t0=1")
    with pytest.raises(FieldError):
        parse_field_spec("p=4 e=1 t0=1 t1=1")


def test_solve_quadratic_examples():
    F = default_tower(3)
    assert sorted(solve_quadratic(F, 1, 0, F.neg(1))) == sorted([1, F.neg(1)])
    r = solve_quadratic(F, 1, 0, F.neg(F.tau))
    assert len(set(r)) == 2 and all(F.mul(x, x) == F.tau for x in r)
    assert all(F.level_of(x) == QUARTIC for x in r)
    assert solve_quadratic(F, 1, F.neg(2), 1) == [1, 1]
    with pytest.raises(FieldError):
        solve_quadratic(F, 0, 0, 1)
    with pytest.raises(FieldError):
        solve_quadratic(F, F.omega, 0, 1)


@settings(max_examples=100, deadline=None)
@given(a=element(5, 2), b=element(5, 2), c=element(5, 2))
def test_solve_quadratic_roots_satisfy(a, b, c):
    F = TOWERS[5]
    if a == 0 and b == 0:
        return
    for x in solve_quadratic(F, a, b, c):
        assert F.add(F.mul(F.add(F.mul(a, x), b), x), c) == 0
