"""Labeled hyperplane arrangements, their matroids and Gale duals."""

from __future__ import annotations

import math

from dataclasses import dataclass, field as dc_field
from math import comb

from .cyclotomic import CyclotomicField, CyclotomicNumber, cyclotomic_field
from .linalg import FieldMatrix, IncrementalSpan, kernel_basis, rank

__all__ = [
    "HyperplaneLabel",
    "Arrangement",
    "TuttePolynomial",
    "GaleDual",
    "reflection_arrangement",
    "braid_arrangement",
    "gale_dual",
    "rho",
    "lines",
    "tutte",
    "tutte_of_vectors",
    "tutte_dual_check",
    "hilbert_via_tutte",
    "nbc_counts",
    "dual_internal_hilbert_via_nbc",
    "orlik_solomon_sides",
    "os_factorization_check",
    "degrees_codegrees",
    "contract_vectors",
    "TUTTE_MAX_ELEMENTS",
]

TUTTE_MAX_ELEMENTS = 20


@dataclass(frozen=True, order=True)
class HyperplaneLabel:
    """h_i (kind 'coord'), h_ij^k (kind 'pair', i < j) or a generic index."""

    kind: str
    i: int
    j: int = 0
    k: int = 0

    @classmethod
    def coord(cls, i):
        return cls("coord", i)

    @classmethod
    def pair(cls, i, j, k=0):
        if not i < j:
            raise ValueError(f"pair labels need i < j, got ({i}, {j})")
        return cls("pair", i, j, k)

    @classmethod
    def generic(cls, index):
        return cls("generic", index)

    def __str__(self):
        if self.kind == "coord":
            return f"h{self.i}"
        if self.kind == "pair":
            return f"h{self.i}{self.j}^{self.k}"
        return f"e{self.i}"

    def to_json(self):
        if self.kind == "coord":
            return {"kind": "coord", "i": self.i}
        if self.kind == "pair":
            return {"kind": "pair", "i": self.i, "j": self.j, "k": self.k}
        return {"kind": "generic", "index": self.i}

    @classmethod
    def from_json(cls, d):
        if d["kind"] == "coord":
            return cls.coord(d["i"])
        if d["kind"] == "pair":
            return cls.pair(d["i"], d["j"], d["k"])
        return cls.generic(d["index"])


@dataclass(frozen=True)
class Arrangement:
    """A central arrangement given by labeled normal vectors in field^dim.

    ``family`` records the reflection-arrangement constructor parameters
    (("G", m, n) or ("A", n)) so the Gale dual can use the fixed y-basis.
    """

    field: CyclotomicField
    dim: int
    labels: tuple
    normals: tuple
    family: tuple | None = dc_field(default=None, compare=False)

    def __post_init__(self):
        if len(self.labels) != len(self.normals):
            raise ValueError("labels and normals differ in length")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("hyperplane labels must be unique")
        for lab, v in zip(self.labels, self.normals):
            if len(v) != self.dim:
                raise ValueError(f"normal of {lab} has wrong length")
            if not any(v):
                raise ValueError(f"normal of {lab} is the zero vector")

    def __len__(self):
        return len(self.normals)

    @property
    def conductor(self):
        return self.field.conductor

    def matrix(self) -> FieldMatrix:
        """dim x |A| matrix whose columns are the normals (the map C^A -> V*)."""
        return FieldMatrix.from_columns(self.field, self.normals, self.dim)

    def rank(self, subset=None) -> int:
        idx = range(len(self)) if subset is None else subset
        span = IncrementalSpan(self.field, self.dim)
        return sum(1 for i in idx if span.add(self.normals[i]))

    def is_essential(self) -> bool:
        return self.rank() == self.dim

    def index(self, label) -> int:
        return self.labels.index(label)

    def reorder(self, perm) -> "Arrangement":
        return Arrangement(
            self.field, self.dim,
            tuple(self.labels[p] for p in perm),
            tuple(self.normals[p] for p in perm),
            self.family,
        )

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "conductor": self.conductor,
            "hyperplanes": [
                {"label": lab.to_json(), "normal": [x.to_json() for x in v]}
                for lab, v in zip(self.labels, self.normals)
            ],
        }

    @classmethod
    def from_json(cls, d) -> "Arrangement":
        F = cyclotomic_field(int(d["conductor"]))
        labels, normals = [], []
        for h in d["hyperplanes"]:
            labels.append(HyperplaneLabel.from_json(h["label"]))
            normals.append(tuple(F(CyclotomicNumber.from_json(x)) for x in h["normal"]))
        return cls(F, int(d["dim"]), tuple(labels), tuple(normals))


def reflection_arrangement(m: int, n: int) -> Arrangement:
    """Reflection arrangement of G(m,1,n); for m = 1 the braid arrangement of S_n."""
    if m < 1 or n < 2:
        raise ValueError(f"need m >= 1 and n >= 2, got m={m}, n={n}")
    F = cyclotomic_field(m)
    labels, normals = [], []

    if m > 1:
        for i in range(1, n + 1):
            v = [F.zero] * n
            v[i - 1] = F.one
            labels.append(HyperplaneLabel.coord(i))
            normals.append(tuple(v))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(m):
                v = [F.zero] * n
                v[i - 1] = F.one
                v[j - 1] = -F.zeta(k)
                labels.append(HyperplaneLabel.pair(i, j, k))
                normals.append(tuple(v))
    family = ("G", m, n) if m > 1 else ("A", n)
    return Arrangement(F, n, tuple(labels), tuple(normals), family)


def braid_arrangement(n: int) -> Arrangement:
    return reflection_arrangement(1, n)


# ---------------------------------------------------------------------------
# Tutte polynomial


@dataclass(frozen=True)
class TuttePolynomial:
    """T(p, q) = sum coeffs[(i, j)] p^i q^j."""

    coeffs: tuple  # sorted tuple of ((i, j), c) with c != 0

    @classmethod
    def from_dict(cls, d) -> "TuttePolynomial":
        return cls(tuple(sorted((k, v) for k, v in d.items() if v)))

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def swap(self) -> "TuttePolynomial":
        return TuttePolynomial.from_dict({(j, i): c for (i, j), c in self.coeffs})

    def __call__(self, p, q):
        return sum(c * p**i * q**j for (i, j), c in self.coeffs)

    def __add__(self, other):
        d = self.as_dict()
        for k, v in other.coeffs:
            d[k] = d.get(k, 0) + v
        return TuttePolynomial.from_dict(d)

    def __mul__(self, other):
        d = {}
        for (a, b), x in self.coeffs:
            for (c, e), y in other.coeffs:
                d[(a + c, b + e)] = d.get((a + c, b + e), 0) + x * y
        return TuttePolynomial.from_dict(d)

    def __str__(self):
        def mono(i, j):
            parts = []
            if i:
                parts.append("p" if i == 1 else f"p^{i}")
            if j:
                parts.append("q" if j == 1 else f"q^{j}")
            return "*".join(parts)

        terms = []
        for (i, j), c in sorted(self.coeffs, key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0])):
            m = mono(i, j)
            if not m:
                terms.append(str(c))
            elif c == 1:
                terms.append(m)
            else:
                terms.append(f"{c}*{m}")
        return " + ".join(terms) if terms else "0"

    def to_json(self):
        return [[i, j, c] for (i, j), c in self.coeffs]


def _corank_nullity_counts(field, vectors, dim):
    """counts[(rank(S), |S|)] over all subsets S, by a DFS that keeps a span."""
    counts = {}
    span = IncrementalSpan(field, dim)
    nvec = len(vectors)
    # sparse copies once, so the DFS does not rebuild them
    sparse = [{j: x for j, x in enumerate(v) if x} for v in vectors]

    def rec(i, size):
        if i == nvec:
            key = (len(span), size)
            counts[key] = counts.get(key, 0) + 1
            return
        rec(i + 1, size)
        if span.add(sparse[i]):
            rec(i + 1, size + 1)
            span.pop()
        else:
            rec(i + 1, size + 1)

    rec(0, 0)
    return counts


def _expand_tutte(counts, total_rank):
    # (p-1)^a (q-1)^b expanded with binomials
    coeffs = {}
    for (r, s), cnt in counts.items():
        a, b = total_rank - r, s - r
        for i in range(a + 1):
            ca = comb(a, i) * (-1) ** (a - i)
            for j in range(b + 1):
                cb = comb(b, j) * (-1) ** (b - j)
                coeffs[(i, j)] = coeffs.get((i, j), 0) + cnt * ca * cb
    return TuttePolynomial.from_dict(coeffs)


def tutte_of_vectors(field, vectors, dim) -> TuttePolynomial:
    """Tutte polynomial of the matroid of a vector list (zero vectors allowed)."""
    if len(vectors) > TUTTE_MAX_ELEMENTS:
        raise ValueError(
            f"Tutte polynomial by subset enumeration is limited to "
            f"{TUTTE_MAX_ELEMENTS} hyperplanes, got {len(vectors)}"
        )
    span = IncrementalSpan(field, dim)
    total = sum(1 for v in vectors if span.add(v))
    return _expand_tutte(_corank_nullity_counts(field, vectors, dim), total)


def tutte(A: Arrangement) -> TuttePolynomial:
    return tutte_of_vectors(A.field, A.normals, A.dim)


def contract_vectors(field, vectors, dim, e):
    """Vectors of the contraction M/e: restrict every functional to ker f_e."""
    fe = vectors[e]
    H = kernel_basis(FieldMatrix.from_rows(field, [fe]))
    out = []
    for t, f in enumerate(vectors):
        if t == e:
            continue
        out.append([sum((a * b for a, b in zip(f, h)), field.zero) for h in H])
    return out, dim - 1


# ---------------------------------------------------------------------------
# Gale duality


@dataclass(frozen=True)
class GaleDual:
    """The arrangement induced on K = ker(C^A -> V*).

    ``inclusion`` is the |A| x dim K matrix whose columns are the basis
    vectors of K in h-coordinates; its rows are the normals of the dual.
    ``basis_keys`` are (i, j, k) for y_ij^k, or (i, j) for type A y_ij, or
    plain indices for a generic kernel basis.
    """

    original: Arrangement
    dual: Arrangement
    inclusion: FieldMatrix
    basis_keys: tuple

    @property
    def dim(self):
        return self.dual.dim

    def basis_names(self) -> list[str]:
        return [variable_name(key) for key in self.basis_keys]


def variable_name(key) -> str:
    if isinstance(key, tuple) and len(key) == 3:
        i, j, k = key
        return f"y{i}{j}^{k}"
    if isinstance(key, tuple) and len(key) == 2:
        return f"y{key[0]}{key[1]}"
    return f"u{key}"


def _explicit_kernel(A: Arrangement):
    """The fixed y-basis for reflection arrangements, else None."""
    F = A.field
    if A.family is None:
        return None
    h = {lab: t for t, lab in enumerate(A.labels)}
    cols, keys = [], []
    if A.family[0] == "G":
        _, m, n = A.family
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                for k in range(m):
                    v = [F.zero] * len(A)
                    # y_ij^k = (h_i - w^k h_j) - h_ij^k
                    v[h[HyperplaneLabel.coord(i)]] = F.one
                    v[h[HyperplaneLabel.coord(j)]] = -F.zeta(k)
                    v[h[HyperplaneLabel.pair(i, j, k)]] = -F.one
                    cols.append(v)
                    keys.append((i, j, k))
    else:
        _, n = A.family
        for i in range(1, n):
            for j in range(i + 1, n):
                v = [F.zero] * len(A)
                # oriented 3-cycle i -> j -> n -> i: h_ij + h_jn - h_in
                v[h[HyperplaneLabel.pair(i, j)]] = F.one
                v[h[HyperplaneLabel.pair(j, n)]] = F.one
                v[h[HyperplaneLabel.pair(i, n)]] = -F.one
                cols.append(v)
                keys.append((i, j))
    return cols, keys


def gale_dual(A: Arrangement) -> GaleDual:
    if len(A) == 0:
        raise ValueError("Gale dual of an empty arrangement")
    F = A.field
    M = A.matrix()
    explicit = _explicit_kernel(A)
    expected_dim = len(A) - rank(M)
    if explicit is not None:
        cols, keys = explicit
        if len(cols) != expected_dim:
            raise AssertionError(
                f"explicit basis has {len(cols)} vectors, kernel has dimension {expected_dim}"
            )
        for v in cols:
            if any(M @ v):
                raise AssertionError("explicit y-vector is not in the kernel")
    else:
        cols = kernel_basis(M)
        keys = list(range(1, len(cols) + 1))
    B = FieldMatrix.from_columns(F, cols, len(A))
    if rank(B) != expected_dim:
        raise AssertionError("kernel basis is not independent")
    dual = Arrangement(F, len(cols), A.labels, tuple(B.entries))
    return GaleDual(A, dual, B, tuple(keys))


# ---------------------------------------------------------------------------
# rho and lines


def rho(A: Arrangement, v) -> int:
    """Number of hyperplanes of A not containing the vector v."""
    v = list(v)
    if len(v) != A.dim:
        raise ValueError(f"vector of length {len(v)} in a {A.dim}-dimensional space")
    count = 0
    for f in A.normals:
        acc = A.field.zero
        for a, b in zip(f, v):
            if a and b:
                acc = acc + a * b
        if acc:
            count += 1
    return count


def _canonical(v):
    for x in v:
        if x:
            inv = x.inverse()
            return tuple(y * inv for y in v)
    raise ValueError("zero vector has no canonical scaling")


def _vector_key(v):
    return tuple((x.num, x.den) for x in v)


def lines(A: Arrangement) -> list[tuple]:
    """One canonical spanning vector per line (1-dimensional flat) of A."""
    if not A.is_essential():
        raise ValueError("lines are only defined here for essential arrangements")
    d = A.dim
    F = A.field
    if d == 1:
        return [(F.one,)]
    found = {}
    span = IncrementalSpan(F, d)
    chosen = []
    N = len(A)

    def rec(start):
        if len(chosen) == d - 1:
            ker = kernel_basis(FieldMatrix.from_rows(F, [A.normals[t] for t in chosen]))
            assert len(ker) == 1
            v = _canonical(ker[0])
            found.setdefault(_vector_key(v), v)
            return
        need = d - 1 - len(chosen)
        for t in range(start, N - need + 1):
            if span.add(A.normals[t]):
                chosen.append(t)
                rec(t + 1)
                chosen.pop()
                span.pop()

    rec(0)
    return [found[k] for k in sorted(found)]


# ---------------------------------------------------------------------------
# Hilbert series from Tutte evaluations


def _laurent_mul(a, b):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def _laurent_pow(a, e):
    out = {0: 1}
    for _ in range(e):
        out = _laurent_mul(out, a)
    return out


def _tutte_substitute(T: TuttePolynomial, p_poly, q_poly, shift):
    total = {}
    for (i, j), c in T.coeffs:
        term = _laurent_mul(_laurent_pow(p_poly, i), _laurent_pow(q_poly, j))
        for e, x in term.items():
            total[e + shift] = total.get(e + shift, 0) + c * x
    return {k: v for k, v in total.items() if v}


def _to_coefficient_list(laurent, what):
    if not laurent:
        return [0]
    if min(laurent) < 0:
        raise ArithmeticError(f"{what} is not a polynomial in q: {laurent}")
    top = max(laurent)
    return [laurent.get(e, 0) for e in range(top + 1)]


def hilbert_via_tutte(A: Arrangement, k: int, T: TuttePolynomial | None = None) -> list[int]:
    """Hilbert series coefficients of S_{A,k} for k in {-2, -1, 0}."""
    if k not in (-2, -1, 0):
        raise ValueError(f"k must be -2, -1 or 0, got {k}")
    if not A.is_essential():
        raise ValueError("Hilbert series via Tutte requires an essential arrangement")
    T = T or tutte(A)
    shift = len(A) - A.rank()
    p_poly = {-2: {}, -1: {0: 1}, 0: {0: 1, 1: 1}}[k]
    return _to_coefficient_list(_tutte_substitute(T, p_poly, {-1: 1}, shift), "Hilbert series")


def nbc_counts(field, vectors, dim) -> list[int]:
    """Numbers b_j of no-broken-circuit sets of size j, for the given element order.

    Sets are grown from the largest index down.  With S fixed, an element e
    above min(S) is allowed only if it is outside cl({s in S : s > e}), so
    the downward scan from min(S) stops at the first element of cl(S); a set
    is NBC exactly when that scan runs off the bottom.
    """
    counts = [0] * (dim + 1)
    inverses = {}  # pivots repeat heavily

    def eliminate(w, pivot, row):
        c = w.get(pivot)
        if not c:
            return w
        w = dict(w)
        for j, x in row.items():
            y = w.get(j)
            nv = (y - c * x) if y is not None else -(c * x)
            if nv:
                w[j] = nv
            else:
                del w[j]
        return w

    # reduced[e]: vectors[e] modulo the current span, for e below the last pick
    def grow(size, reduced):
        for e in range(len(reduced) - 1, -1, -1):
            w = reduced[e]
            if not w:
                return
            p = min(w)
            inv = inverses.get(w[p])
            if inv is None:
                inv = inverses[w[p]] = w[p].inverse()
            row = {j: x * inv for j, x in w.items()}
            grow(size + 1, [eliminate(u, p, row) for u in reduced[:e]])
        counts[size] += 1

    grow(0, [{j: x for j, x in enumerate(v) if x} for v in vectors])
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def dual_internal_hilbert_via_nbc(A: Arrangement) -> list[int]:
    """Hilbert series of the internal algebra of the Gale dual of A.

    Only T_A(x, 0) enters, and that is fixed by the broken-circuit counts:
    H(q) = sum_j b_j q^j (1 - q)^(r - j).  Scales to arrangements far beyond
    the subset-enumeration bound.
    """
    b = nbc_counts(A.field, A.normals, A.dim)
    r = len(b) - 1
    out = [0] * (r + 1)
    for j, bj in enumerate(b):
        for t in range(r - j + 1):
            out[j + t] += bj * math.comb(r - j, t) * (-1) ** t
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def tutte_dual_check(A: Arrangement) -> bool:
    return tutte(gale_dual(A).dual) == tutte(A).swap()


def degrees_codegrees(m: int, n: int):
    """Degrees m, 2m, ..., nm and codegrees 0, m, ..., (n-1)m of G(m,1,n)."""
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    return [m * i for i in range(1, n + 1)], [m * i for i in range(n)]


def orlik_solomon_sides(m: int, n: int):
    """(q^rk T(1 + 1/q, 0), prod (1 + (1 + d'_i) q)) as coefficient lists.

    For m = 1 the braid arrangement is not essential; the codegrees used are
    those of S_n on its (n-1)-dimensional reflection representation.
    """
    A = reflection_arrangement(m, n)
    T = tutte(A)
    r = A.rank()
    lhs = _to_coefficient_list(_tutte_substitute(T, {0: 1, -1: 1}, {}, r), "Orlik-Solomon side")
    _, codeg = degrees_codegrees(m, n)
    if m == 1:
        codeg = list(range(n - 1))
    rhs = {0: 1}
    for d in codeg:
        rhs = _laurent_mul(rhs, {0: 1, 1: 1 + d})
    return lhs, _to_coefficient_list(rhs, "codegree product")


def os_factorization_check(m: int, n: int) -> bool:
    lhs, rhs = orlik_solomon_sides(m, n)
    return lhs == rhs
