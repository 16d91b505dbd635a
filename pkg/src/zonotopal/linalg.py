"""Dense exact linear algebra over a cyclotomic field.

Pivots are the first nonzero entry in column order, so echelon forms and
kernel bases are canonical for a given input matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CyclotomicField, CyclotomicNumber

__all__ = [
    "FieldMatrix",
    "NotInSpan",
    "rank",
    "rref",
    "kernel_basis",
    "solve_in_span",
    "SpanSolver",
    "IncrementalSpan",
]


class NotInSpan(Exception):
    """Raised (or returned as a sentinel class) when v is outside the column span."""


@dataclass(frozen=True)
class FieldMatrix:
    field: CyclotomicField
    rows: int
    cols: int
    entries: tuple  # row-major tuple of rows

    @classmethod
    def from_rows(cls, field, rows) -> "FieldMatrix":
        rows = [tuple(field(x) for x in r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        return cls(field, len(rows), ncols, tuple(rows))

    @classmethod
    def from_columns(cls, field, columns, nrows=None) -> "FieldMatrix":
        columns = [list(c) for c in columns]
        if nrows is None:
            nrows = len(columns[0]) if columns else 0
        rows = [[columns[j][i] for j in range(len(columns))] for i in range(nrows)]
        if not columns:
            return cls(field, nrows, 0, tuple(() for _ in range(nrows)))
        return cls.from_rows(field, rows)

    @classmethod
    def identity(cls, field, n) -> "FieldMatrix":
        return cls.from_rows(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, rows, cols) -> "FieldMatrix":
        return cls.from_rows(field, [[0] * cols for _ in range(rows)])

    def __getitem__(self, ij) -> CyclotomicNumber:
        i, j = ij
        return self.entries[i][j]

    def column(self, j) -> list:
        return [r[j] for r in self.entries]

    def columns(self) -> list:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(
            self.field, self.cols, self.rows,
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
        )

    def __matmul__(self, other):
        if isinstance(other, FieldMatrix):
            if self.cols != other.rows:
                raise ValueError("dimension mismatch in matrix product")
            zero = self.field.zero
            oc = other.columns()
            rows = []
            for r in self.entries:
                row = []
                for c in oc:
                    acc = zero
                    for a, b in zip(r, c):
                        if a and b:
                            acc = acc + a * b
                    row.append(acc)
                rows.append(tuple(row))
            return FieldMatrix(self.field, self.rows, other.cols, tuple(rows))
        v = list(other)
        if len(v) != self.cols:
            raise ValueError("dimension mismatch in matrix-vector product")
        out = []
        for r in self.entries:
            acc = self.field.zero
            for a, b in zip(r, v):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return out

    def is_zero(self) -> bool:
        return all(not x for r in self.entries for x in r)

    def __eq__(self, other):
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))


def _rref_rows(field, rows, ncols):
    """Reduced row echelon form of a list of row lists; returns (rows, pivots)."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        p = None
        for i in range(r, nrows):
            if rows[i][c]:
                p = i
                break
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv if x else x for x in rows[r]]
        pr = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b if b else a for a, b in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rref(M: FieldMatrix):
    """Return (reduced matrix, pivot columns)."""
    rows, pivots = _rref_rows(M.field, M.entries, M.cols)
    return FieldMatrix(M.field, M.rows, M.cols, tuple(tuple(r) for r in rows)), pivots


def rank(M: FieldMatrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    span = IncrementalSpan(M.field, M.cols)
    return sum(1 for r in M.entries if span.add(r))


def kernel_basis(M: FieldMatrix) -> list[list[CyclotomicNumber]]:
    """Free-variable basis of the null space, read off the reduced echelon form."""
    F = M.field
    R, pivots = rref(M)
    free = [c for c in range(M.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [F.zero] * M.cols
        v[f] = F.one
        for i, p in enumerate(pivots):
            if R.entries[i][f]:
                v[p] = -R.entries[i][f]
        basis.append(v)
    return basis


class SpanSolver:
    """Precomputed elimination for repeated solves of M c = v.

    The returned solution sets free variables to zero (canonical pivot rule).
    """

    def __init__(self, M: FieldMatrix):
        self.M = M
        F = M.field
        aug = [list(r) + [F.one if i == j else F.zero for j in range(M.rows)]
               for i, r in enumerate(M.entries)]
        rows, pivots = _rref_rows(F, aug, M.cols)
        self.pivots = [p for p in pivots if p < M.cols]
        self.rank = len(self.pivots)
        # rows [0, rank) express pivot variables; rows [rank, M.rows) give consistency
        self._transform = [r[M.cols:] for r in rows]

    def solve(self, v):
        M = self.M
        v = [M.field(x) for x in v]
        if len(v) != M.rows:
            raise ValueError(f"vector of length {len(v)} for a matrix with {M.rows} rows")
        F = M.field
        tv = []
        for t in self._transform:
            acc = F.zero
            for a, b in zip(t, v):
                if a and b:
                    acc = acc + a * b
            tv.append(acc)
        if any(tv[self.rank:]):
            return NotInSpan
        c = [F.zero] * M.cols
        for i, p in enumerate(self.pivots):
            c[p] = tv[i]
        return c


def solve_in_span(M: FieldMatrix, v):
    """Coordinates c with M c = v, or the sentinel ``NotInSpan``."""
    return SpanSolver(M).solve(v)


class IncrementalSpan:
    """Row space maintained under appends, for rank-by-insertion loops.

    Each stored row is zero at the pivots of the rows stored before it, so
    reducing a new vector by the rows in insertion order is exact.  Rows are
    stored sparsely as (pivot, {col: value}) with the pivot entry equal to 1.
    ``pop`` undoes the most recent successful ``add``.
    """

    def __init__(self, field: CyclotomicField, dim: int):
        self.field = field
        self.dim = dim
        self.rows = []

    def __len__(self):
        return len(self.rows)

    def reduce(self, v) -> dict:
        if isinstance(v, dict):
            w = dict(v)
        else:
            w = {j: x for j, x in enumerate(v) if x}
        for p, row in self.rows:
            c = w.get(p)
            if c:
                for j, x in row.items():
                    y = w.get(j)
                    nv = (y - c * x) if y is not None else -(c * x)
                    if nv:
                        w[j] = nv
                    else:
                        del w[j]
        return w

    def add(self, v) -> bool:
        """Insert v; return True if it was independent of the current rows."""
        w = self.reduce(v)
        if not w:
            return False
        p = min(w)
        inv = w[p].inverse()
        self.rows.append((p, {j: x * inv for j, x in w.items()}))
        return True

    def contains(self, v) -> bool:
        return not self.reduce(v)

    def pop(self):
        self.rows.pop()

    def copy(self) -> "IncrementalSpan":
        s = IncrementalSpan(self.field, self.dim)
        s.rows = list(self.rows)
        return s
