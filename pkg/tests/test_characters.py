import json

import pytest

from zonotopal.characters import graded_characters, top_character
from zonotopal.cyclotomic import cyclotomic_field
from zonotopal.verify import (
    HypothesisError,
    _compare,
    coxeter_eigenvalue_angles,
    run_check,
    verify_coxeter,
)
from zonotopal.wreath import (
    ClassFunction,
    WreathElement,
    chi_on_C,
    induced_character,
    wreath_group,
)


def test_top_character_values():
    top = top_character(2, 3)
    W = wreath_group(2, 3)
    assert top(W.identity()) == 8
    assert top(WreathElement.central(2, 3)) == 8
    C, chi = chi_on_C(2, 3)
    ind = induced_character(W, C.elements, chi, 6)
    c = WreathElement.long_cycle(2, 3)
    assert top(c) == ind(c)


def test_graded_characters_start_trivial():
    chars = graded_characters(3, 3)
    W = wreath_group(3, 3)
    assert chars[0] == ClassFunction.trivial(W)
    assert [f.degree() for f in chars] == [1, 9, 18]


def test_coxeter_angles():
    x = WreathElement.long_cycle(2, 3) * WreathElement.central(2, 3)
    assert any(a.denominator == 6 for a in coxeter_eigenvalue_angles(x))


def test_coxeter_hypothesis():
    with pytest.raises(HypothesisError, match="corollary hypothesis fails"):
        verify_coxeter(2, 4)


def test_failing_comparison_carries_witness():
    W = wreath_group(2, 2)
    ok, w = _compare("x", ClassFunction.trivial(W), ClassFunction.regular(W))
    assert not ok
    assert w["mismatch"] and {"class", "lhs", "rhs"} <= set(w["mismatch"][0])


def test_reports_are_deterministic():
    a = run_check("main-theorem", m=2, n=3).to_json()
    b = run_check("main-theorem", m=2, n=3).to_json()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert "wall_time" not in a
    assert "wall_time" in run_check("pm-tree-count", n=3).to_json(timing=True)


@pytest.mark.parametrize("name, params", [
    ("restriction", {"m": 2, "n": 3}),
    ("typeA", {"n": 4}),
    ("typeA-action", {"n": 4}),
    ("whitehouse", {"n": 4}),
    ("mathieu", {"n": 3}),
    ("factorization", {"m": 2, "n": 2}),
    ("action-rules", {"m": 2, "n": 3}),
    ("homomorphism", {"m": 3, "n": 3, "seed": 7}),
    ("path-forests", {"m": 2, "n": 3}),
    ("recurrence", {"m": 2, "n": 4}),
])
def test_checks_pass(name, params):
    r = run_check(name, **params)
    assert r.passed, r.witness


def test_missing_parameter():
    with pytest.raises(TypeError):
        run_check("main-theorem", m=2)
