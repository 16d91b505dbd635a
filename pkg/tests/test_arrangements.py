import itertools

import pytest

from zonotopal.arrangements import (
    TuttePolynomial,
    braid_arrangement,
    degrees_codegrees,
    dual_internal_hilbert_via_nbc,
    gale_dual,
    hilbert_via_tutte,
    lines,
    nbc_counts,
    os_factorization_check,
    reflection_arrangement,
    rho,
    tutte,
    tutte_dual_check,
    tutte_of_vectors,
)
from zonotopal.cyclotomic import cyclotomic_field
from zonotopal.linalg import FieldMatrix, rank

Q = cyclotomic_field(1)


def tutte_by_deletion_contraction(field, vectors, dim):
    """Independent oracle: T = T(M - e) + T(M / e), loops give y, coloops x."""
    from zonotopal.arrangements import contract_vectors

    def rk(vs):
        return rank(FieldMatrix.from_rows(field, vs)) if vs else 0

    def rec(vs, d):
        if not vs:
            return {(0, 0): 1}
        e = vs[-1]
        rest = vs[:-1]
        if not any(e):
            return {(a, b + 1): c for (a, b), c in rec(rest, d).items()}
        if rk(rest) < rk(vs):
            contracted, d2 = contract_vectors(field, vs, d, len(vs) - 1)
            return {(a + 1, b): c for (a, b), c in rec(contracted, d2).items()}
        out = dict(rec(rest, d))
        contracted, d2 = contract_vectors(field, vs, d, len(vs) - 1)
        for key, c in rec(contracted, d2).items():
            out[key] = out.get(key, 0) + c
        return out

    return TuttePolynomial.from_dict(rec(list(vectors), dim))


def test_sizes():
    assert len(reflection_arrangement(2, 3)) == 9
    assert len(reflection_arrangement(3, 3)) == 12
    assert len(braid_arrangement(4)) == 6


def test_gale_dual_sizes():
    D = gale_dual(reflection_arrangement(2, 3))
    assert D.dim == 6 and len(D.dual) == 9
    assert gale_dual(braid_arrangement(4)).dim == 3


def test_gale_dual_is_kernel():
    A = reflection_arrangement(3, 3)
    D = gale_dual(A)
    # columns of the inclusion lie in the kernel of C^A -> V*
    prod = A.matrix() @ D.inclusion
    assert prod.is_zero()
    assert rank(D.inclusion) == len(A) - A.rank()


def test_double_dual_matroid():
    A = reflection_arrangement(2, 2)
    DD = gale_dual(gale_dual(A).dual).dual
    for r in range(len(A) + 1):
        for S in itertools.combinations(range(len(A)), r):
            assert A.rank(S) == DD.rank(S)


def test_tutte_examples():
    A = reflection_arrangement(2, 2)
    assert tutte(A).as_dict() == {(2, 0): 1, (0, 2): 1, (1, 0): 2, (0, 1): 2}
    assert tutte_of_vectors(Q, [[Q(1)]], 1).as_dict() == {(1, 0): 1}
    assert tutte(braid_arrangement(3)).as_dict() == {(2, 0): 1, (1, 0): 1, (0, 1): 1}


@pytest.mark.parametrize("A", [reflection_arrangement(2, 2), braid_arrangement(4),
                               reflection_arrangement(3, 2), reflection_arrangement(2, 3)],
                         ids=["B2", "A3", "G312", "B3"])
def test_tutte_against_deletion_contraction(A):
    assert tutte(A) == tutte_by_deletion_contraction(A.field, A.normals, A.dim)


@pytest.mark.parametrize("A", [reflection_arrangement(2, 2), reflection_arrangement(2, 3),
                               braid_arrangement(4)], ids=["B2", "B3", "A3"])
def test_tutte_duality(A):
    assert tutte_dual_check(A)


def test_hilbert_examples():
    B2 = reflection_arrangement(2, 2)
    assert hilbert_via_tutte(B2, -2) == [1, 2]
    assert sum(hilbert_via_tutte(B2, -1)) == 6
    assert hilbert_via_tutte(gale_dual(reflection_arrangement(2, 3)).dual, -2) == [1, 6, 8]


@pytest.mark.parametrize("m, n", [(2, 2), (2, 3), (3, 3), (2, 4), (4, 3)])
def test_nbc_route_agrees_with_tutte(m, n):
    A = reflection_arrangement(m, n)
    assert dual_internal_hilbert_via_nbc(A) == hilbert_via_tutte(gale_dual(A).dual, -2)


def test_nbc_counts_are_order_independent():
    A = reflection_arrangement(2, 3)
    rev = list(reversed(A.normals))
    assert nbc_counts(A.field, A.normals, A.dim) == nbc_counts(A.field, rev, A.dim)
    # total NBC count = |chi(-1)| = prod (1 + exponent + 1)
    assert sum(nbc_counts(A.field, A.normals, A.dim)) == 2 * 4 * 6


def test_rho():
    D = gale_dual(reflection_arrangement(2, 3))
    F = D.dual.field
    assert rho(D.dual, [F.zero] * D.dim) == 0
    for t in range(D.dim):
        e = [F.one if s == t else F.zero for s in range(D.dim)]
        assert rho(D.dual, e) == 3
    A = reflection_arrangement(2, 3)
    assert rho(A, [A.field.one, A.field.zero, A.field.zero]) == 5


def test_lines_of_B2():
    A = reflection_arrangement(2, 2)
    L = lines(A)
    assert len(L) == 4


def test_y_vectors_span_lines():
    D = gale_dual(reflection_arrangement(2, 3))
    keys = {tuple(v) for v in lines(D.dual)}
    F = D.dual.field
    for t in range(D.dim):
        e = tuple(F.one if s == t else F.zero for s in range(D.dim))
        assert e in keys


@pytest.mark.parametrize("m, n", [(2, 2), (2, 3), (1, 3), (3, 2)])
def test_orlik_solomon(m, n):
    assert os_factorization_check(m, n)


@pytest.mark.parametrize("m, n", [(2, 3), (1, 4), (3, 5)])
def test_degrees_codegrees(m, n):
    d, dd = degrees_codegrees(m, n)
    h = m * n
    assert all(d[i] + dd[n - 1 - i] == h for i in range(n))
    assert degrees_codegrees(2, 3) == ([2, 4, 6], [0, 2, 4])
