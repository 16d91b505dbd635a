from hypothesis import given, strategies as st

from zonotopal.cyclotomic import cyclotomic_field
from zonotopal.linalg import (
    FieldMatrix,
    IncrementalSpan,
    NotInSpan,
    SpanSolver,
    kernel_basis,
    rank,
    rref,
    solve_in_span,
)

Q = cyclotomic_field(1)
F3 = cyclotomic_field(3)


def M(rows, F=Q):
    return FieldMatrix.from_rows(F, [[F(x) for x in r] for r in rows])


def test_rank_examples():
    assert rank(FieldMatrix.identity(Q, 3)) == 3
    assert rank(FieldMatrix.zeros(Q, 2, 3)) == 0
    # e1, e2, e1+e2, e1-e2 as columns
    assert rank(M([[1, 0, 1, 1], [0, 1, 1, -1]])) == 2


def test_kernel_examples():
    assert kernel_basis(FieldMatrix.identity(Q, 3)) == []
    (v,) = kernel_basis(M([[1, 1]]))
    assert v[0] == -v[1] and v[0]


def test_solve_examples():
    I = FieldMatrix.identity(Q, 3)
    v = [Q(2), Q(-1), Q(5)]
    assert solve_in_span(I, v) == v
    assert solve_in_span(M([[1, 2]]), [Q(3)]) == [Q(3), Q(0)]
    assert solve_in_span(M([[1, 1], [1, 1]]), [Q(1), Q(0)]) is NotInSpan


entries = st.integers(-3, 3)


@st.composite
def matrices(draw, F=Q):
    r = draw(st.integers(1, 4))
    c = draw(st.integers(1, 5))
    if F is Q:
        rows = [[F(draw(entries)) for _ in range(c)] for _ in range(r)]
    else:
        rows = [[F.from_coeffs([draw(entries), draw(entries)]) for _ in range(c)] for _ in range(r)]
    return FieldMatrix.from_rows(F, rows)


@given(st.one_of(matrices(), matrices(F3)))
def test_rank_nullity_and_kernel(A):
    K = kernel_basis(A)
    assert rank(A) + len(K) == A.cols
    for v in K:
        Av = A @ FieldMatrix.from_columns(A.field, [v], A.cols)
        assert Av.is_zero()
    if K:
        assert rank(FieldMatrix.from_columns(A.field, K, A.cols)) == len(K)


@given(st.one_of(matrices(), matrices(F3)), st.data())
def test_span_solver_round_trip(A, data):
    coeffs = [A.field(data.draw(entries)) for _ in range(A.cols)]
    b = (A @ FieldMatrix.from_columns(A.field, [coeffs], A.cols)).column(0)
    c = SpanSolver(A).solve(b)
    assert c is not NotInSpan
    assert (A @ FieldMatrix.from_columns(A.field, [c], A.cols)).column(0) == b


@given(st.one_of(matrices(), matrices(F3)))
def test_incremental_span_matches_rank(A):
    span = IncrementalSpan(A.field, A.cols)
    for t in range(A.rows):
        span.add([A[t, j] for j in range(A.cols)])
    assert len(span) == rank(A)
    R, pivots = rref(A)
    assert len(pivots) == rank(A)
    for t in range(A.rows):
        assert span.contains([A[t, j] for j in range(A.cols)])
