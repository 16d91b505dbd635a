import pytest
from hypothesis import given, strategies as st

from zonotopal.actions import dual_model
from zonotopal.characters import internal_quotient, typeA_quotient
from zonotopal.cyclotomic import cyclotomic_field
from zonotopal.polynomials import (
    InfiniteQuotientError,
    MonomialOrder,
    Polynomial,
    VariableRegistry,
    buchberger,
    hilbert_series_of_quotient,
    is_groebner_basis,
    s_polynomial,
    standard_monomials,
)

Q = cyclotomic_field(1)
R = VariableRegistry(["x", "y", "z"], Q)
x, y, z = R.gens()
GREVLEX = MonomialOrder("grevlex", nvars=3)
LEX = MonomialOrder("lex", nvars=3)


def terms(G):
    return sorted(sorted(p.terms.items()) for p in G.polys)


def test_arithmetic():
    assert (x + y) ** 2 == x * x + (x * y).scale(2) + y * y
    f = x * y - z
    assert (f - f).is_zero()
    assert (x + 1) * (x - 1) == x ** 2 - 1
    assert f.degree() == 2 and not f.is_homogeneous()


def test_signed_triangle_square():
    model = dual_model(2, 3)
    t = model.y(1, 2) + model.y(2, 3) + model.y(3, 1)
    assert len(t ** 2) == 6


def test_orders():
    # grevlex: x^2 > xy > y^2 > xz; lex: x > y^5
    assert GREVLEX.key((2, 0, 0)) > GREVLEX.key((1, 1, 0)) > GREVLEX.key((0, 2, 0))
    assert GREVLEX.key((0, 2, 0)) > GREVLEX.key((1, 0, 1))
    assert LEX.key((1, 0, 0)) > LEX.key((0, 5, 0))
    assert (x * x + y ** 3).leading_monomial(GREVLEX) == (0, 3, 0)
    assert (x * x + y ** 3).leading_monomial(LEX) == (2, 0, 0)


def test_buchberger_examples():
    R1 = VariableRegistry(["x"], Q)
    (u,) = R1.gens()
    assert terms(buchberger([u], MonomialOrder("grevlex", nvars=1))) == terms(
        buchberger([u.scale(3)], MonomialOrder("grevlex", nvars=1)))
    R2 = VariableRegistry(["x", "y"], Q)
    a, b = R2.gens()
    order = MonomialOrder("grevlex", nvars=2)
    G = buchberger([a * a, b * b, (a + b) ** 2, (a - b) ** 2], order)
    assert {p.leading_monomial(order) for p in G.polys} == {(2, 0), (1, 1), (0, 2)}
    assert all(len(p) == 1 for p in G.polys)
    layers = standard_monomials(G)
    assert [len(t) for t in layers] == [1, 2]
    assert hilbert_series_of_quotient(G) == [1, 2]


def test_twisted_cubic_and_lex():
    G = buchberger([x * x - y, x * y - z, y * y - x * z], GREVLEX)
    ok, _ = is_groebner_basis(list(G.polys), GREVLEX, skip_coprime=False)
    assert ok
    L = buchberger([x - y, y - z, (z * z).scale(3) - 1], LEX)
    assert sorted(p.to_text(LEX) for p in L.polys) == sorted(["x - z", "y - z", "z**2 - 1/3"])


def test_normal_form_and_membership():
    G = buchberger([x * x, y * y, z * z, x * y * z + x * y], GREVLEX)
    assert hilbert_series_of_quotient(G) == [1, 3, 2]
    assert G.normal_form(R.one()) == R.one()
    assert G.contains(x * x * y + z * z)


def test_infinite_quotient():
    G = buchberger([x * y], GREVLEX)
    with pytest.raises(InfiniteQuotientError):
        standard_monomials(G)
    assert len(standard_monomials(G, max_degree=2)) == 3


def test_internal_examples():
    Q23 = internal_quotient(2, 3)
    model = dual_model(2, 3)
    assert Q23.groebner.normal_form(model.y(1, 2, 0) * model.y(1, 2, 1)).is_zero()
    assert Q23.hilbert() == [1, 6, 8]
    QA = typeA_quotient(4)
    assert QA.hilbert() == [1, 3, 2] and len(QA.top_basis) == 2


def test_json_round_trip():
    f = (x + y.scale(cyclotomic_field(1)(3))) ** 2 - z
    assert Polynomial.from_json(R, f.to_json()) == f


# -------------------------------------------------------------- properties

coef = st.integers(-2, 2)
monos = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 1))


@st.composite
def polys(draw):
    ts = draw(st.dictionaries(monos, coef.filter(bool), min_size=1, max_size=3))
    return Polynomial(R, {m: Q(c) for m, c in ts.items() if any(m)} or {(1, 0, 0): Q.one})


generator_sets = st.lists(polys(), min_size=1, max_size=3)


@given(generator_sets, st.randoms(use_true_random=False), st.sampled_from([GREVLEX, LEX]))
def test_reduced_basis_is_unique(gens, rnd, order):
    G1 = buchberger(gens, order)
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    scaled = [g.scale(Q(rnd.choice([-3, -1, 2, 5]))) for g in shuffled]
    # adding an ideal element changes the presentation, not the ideal
    extra = scaled + [gens[0] * (x + 1)]
    G2 = buchberger(extra, order)
    assert terms(G1) == terms(G2)
    ok, failures = is_groebner_basis(list(G1.polys), order, skip_coprime=False)
    assert ok, failures
    for g in gens:
        assert G1.contains(g)
    for p in G1.polys:
        assert p.leading_coefficient(order) == Q.one


@given(generator_sets, polys(), polys())
def test_normal_form_multiplicative(gens, f, g):
    G = buchberger(gens, GREVLEX)
    nf = G.normal_form
    assert nf(f * g) == nf(nf(f) * nf(g))
    assert nf(f + g) == nf(f) + nf(g)
    assert nf(nf(f)) == nf(f)


@given(polys(), polys())
def test_s_polynomial_cancels_leading_terms(f, g):
    s = s_polynomial(f, g, GREVLEX)
    if s:
        lf, lg = f.leading_monomial(GREVLEX), g.leading_monomial(GREVLEX)
        lcm = tuple(max(a, b) for a, b in zip(lf, lg))
        assert GREVLEX.key(s.leading_monomial(GREVLEX)) < GREVLEX.key(lcm)
