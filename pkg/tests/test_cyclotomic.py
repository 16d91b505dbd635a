from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from zonotopal.cyclotomic import (
    cyclotomic_field,
    cyclotomic_polynomial,
    embed,
    root_of_unity,
)

CONDUCTORS = [1, 2, 3, 4, 5, 6, 8, 9, 12]

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def element_coeffs(draw, N):
    # coefficients on zeta^0 .. zeta^(N-1); deliberately redundant
    return draw(st.lists(small, min_size=N, max_size=N))


@st.composite
def field_and_coeffs(draw, count=2):
    N = draw(st.sampled_from(CONDUCTORS))
    return N, [draw(element_coeffs(N)) for _ in range(count)]


def group_ring_mul(a, b, N):
    out = [Fraction(0)] * N
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[(i + j) % N] += x * y
    return out


@pytest.mark.parametrize("N, coeffs", [
    (1, (-1, 1)), (2, (1, 1)), (3, (1, 1, 1)), (4, (1, 0, 1)), (6, (1, -1, 1)),
    (8, (1, 0, 0, 0, 1)), (12, (1, 0, -1, 0, 1)),
])
def test_cyclotomic_polynomial(N, coeffs):
    assert cyclotomic_polynomial(N) == coeffs


def test_basic_identities():
    F3, F4, F2 = cyclotomic_field(3), cyclotomic_field(4), cyclotomic_field(2)
    z3 = F3.zeta()
    assert F3.one + z3 + z3 * z3 == F3.zero
    assert F2.zeta() * F2.zeta() == F2.one
    assert F4.zeta() * F4.zeta() == F4(-1)
    i = F4.zeta()
    assert (F4.one + i).inverse() == (F4.one - i) / 2
    assert F2(-1).inverse() == F2(-1)
    assert z3.inverse() == z3 * z3


def test_roots_of_unity():
    assert root_of_unity(2, 1) == cyclotomic_field(2)(-1)
    F6 = cyclotomic_field(6)
    assert root_of_unity(6, 3) == F6(-1)
    assert root_of_unity(6, 2) == F6.zeta() - 1
    assert F6.zeta(7) == F6.zeta(1)


def test_embeddings():
    F6 = cyclotomic_field(6)
    assert embed(cyclotomic_field(2).zeta(), 6) == F6(-1)
    assert embed(cyclotomic_field(5)(5), 12) == cyclotomic_field(12)(5)
    assert embed(cyclotomic_field(3).zeta(), 6) == F6.zeta() - 1
    # Q(zeta_2) is Q, so it sits inside odd conductors too
    assert embed(cyclotomic_field(2).zeta(), 3) == cyclotomic_field(3)(-1)
    with pytest.raises(ValueError):
        embed(cyclotomic_field(4).zeta(), 6)


def test_string_and_json():
    F = cyclotomic_field(3)
    a = F.from_coeffs([Fraction(1, 2), -3])
    assert a.to_json() == type(a).from_json(a.to_json()).to_json()
    assert type(a).from_json(a.to_json()) == a
    assert str(F(0)) == "0"


@given(field_and_coeffs(3))
def test_field_axioms(data):
    N, (ca, cb, cc) = data
    F = cyclotomic_field(N)
    a, b, c = (F.from_coeffs(x) for x in (ca, cb, cc))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == F.zero
    assert a * F.one == a
    if a:
        assert a * a.inverse() == F.one
        assert (b / a) * a == b


@given(field_and_coeffs(2))
def test_multiplication_against_group_ring(data):
    N, (ca, cb) = data
    F = cyclotomic_field(N)
    assert F.from_coeffs(ca) * F.from_coeffs(cb) == F.from_coeffs(group_ring_mul(ca, cb, N))


@given(st.sampled_from([(1, 4), (2, 6), (3, 6), (3, 12), (4, 12), (2, 8), (3, 9)]),
       st.data())
def test_embedding_is_a_ring_homomorphism(pair, data):
    d, N = pair
    Fd = cyclotomic_field(d)
    a = Fd.from_coeffs(data.draw(element_coeffs(d)))
    b = Fd.from_coeffs(data.draw(element_coeffs(d)))
    assert embed(a + b, N) == embed(a, N) + embed(b, N)
    assert embed(a * b, N) == embed(a, N) * embed(b, N)
    assert embed(Fd.zeta(), N) == cyclotomic_field(N).zeta(N // d)


@given(st.sampled_from(CONDUCTORS), st.integers(-30, 30), st.integers(-30, 30))
def test_zeta_powers(N, j, k):
    F = cyclotomic_field(N)
    assert F.zeta(j) * F.zeta(k) == F.zeta(j + k)
    assert F.zeta(j) ** N == F.one
    assert F.is_root_of_unity_power(F.zeta(j)) == j % N
