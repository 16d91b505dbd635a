import pytest
from hypothesis import given, strategies as st

from zonotopal.actions import dual_model, typeA_extended_action, typeA_transposition_rule
from zonotopal.linalg import FieldMatrix
from zonotopal.wreath import WreathElement, wreath_group

MODELS = [(2, 3), (3, 3), (4, 3), (2, 4), (1, 4), (1, 5)]


def omega(model):
    F = model.field
    return F.zeta(F.conductor // model.m) if model.m > 1 else F.one


def test_identity_acts_trivially():
    model = dual_model(2, 3)
    I = FieldMatrix.identity(model.field, model.dim)
    assert model.action_matrix(WreathElement.identity(2, 3)) == I


def test_transposition_on_y12():
    model = dual_model(2, 3)
    s = WreathElement.transposition(2, 3, 1, 2)
    assert model.act(s, model.y(1, 2, 0)) == -model.y(1, 2, 0)


@given(st.data(), st.sampled_from(MODELS))
def test_action_is_a_homomorphism(data, mn):
    m, n = mn
    model = dual_model(m, n)
    els = wreath_group(max(m, 1), n).elements
    a, b = data.draw(st.sampled_from(els)), data.draw(st.sampled_from(els))
    assert model.action_matrix(a * b) == model.action_matrix(a) @ model.action_matrix(b)


@given(st.data(), st.sampled_from([(2, 3), (3, 3), (4, 3), (2, 4)]))
def test_action_rules(data, mn):
    m, n = mn
    model = dual_model(m, n)
    i, j, k = data.draw(st.sampled_from(model.ring.keys))
    a = data.draw(st.integers(1, n))
    img = model.act(WreathElement.g(m, n, a), model.y(i, j, k))
    if a == i:
        assert img == model.y(i, j, k - 1).scale(omega(model))
    elif a == j:
        assert img == model.y(i, j, k + 1)
    else:
        assert img == model.y(i, j, k)
    perm = data.draw(st.permutations(list(range(1, n + 1))))
    w = WreathElement.from_permutation(m, perm)
    assert model.act(w, model.y(i, j, k)) == model.y(perm[i - 1], perm[j - 1], k)


@pytest.mark.parametrize("m, n", [(2, 3), (3, 3), (2, 4)])
def test_central_element_scales_by_degree(m, n):
    model = dual_model(m, n)
    z = WreathElement.central(m, n)
    w = omega(model)
    f = model.y(1, 2, 0) * model.y(2, 3, 1) * model.y(1, 3, 0)
    assert model.act(z, f) == f.scale(w ** 3)


def test_sign_convention():
    model = dual_model(3, 3)
    F = model.field
    for k in range(3):
        assert model.y(2, 1, k) == model.y(1, 2, -k).scale(-F.zeta(k))


@pytest.mark.parametrize("n", [4, 5])
def test_typeA_extended_action(n):
    model = dual_model(1, n)
    I = FieldMatrix.identity(model.field, model.dim)
    for k in range(1, n):
        M = typeA_extended_action(k, n).matrix
        assert M @ M == I
        for t in range(model.dim):
            assert model.ring.linear_form(M.column(t)) == typeA_transposition_rule(model, k, t)
    for k in range(1, n):
        for l in range(k + 1, n):
            P = typeA_extended_action(k, n).matrix @ typeA_extended_action(l, n).matrix
            assert P @ P @ P == I
