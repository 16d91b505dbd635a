"""Zonotopal ideals: the power-of-lines construction and explicit generator sets."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .actions import DualModel, dual_model
from .arrangements import Arrangement, lines, rho
from .polynomials import (
    GroebnerBasis,
    MonomialOrder,
    Polynomial,
    VariableRegistry,
    _reduced,
    buchberger,
    is_groebner_basis,
    standard_monomials,
)
from .wreath import WreathElement, wreath_group

PROVENANCES = ("lines", "explicit-G", "explicit-typeA", "explicit-typeB-GB")


@dataclass(frozen=True)
class IdealPresentation:
    ring: VariableRegistry
    generators: tuple
    provenance: str
    params: tuple = ()

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        for g in self.generators:
            if g.is_zero() or not g.is_homogeneous():
                raise ValueError("generators must be nonzero and homogeneous")

    def __len__(self):
        return len(self.generators)

    def groebner(self, order: MonomialOrder) -> GroebnerBasis:
        return buchberger(list(self.generators), order)

    def to_json(self, order=None):
        return {
            "provenance": self.provenance,
            "params": list(self.params),
            "variables": list(self.ring.names),
            "generators": [g.to_text(order) for g in self.generators],
        }


@dataclass(frozen=True)
class QuotientAlgebra:
    groebner: GroebnerBasis
    graded_basis: tuple  # tuple of tuples of exponent vectors, by degree

    @property
    def top_degree(self) -> int:
        return len(self.graded_basis) - 1

    @property
    def top_basis(self) -> tuple:
        return self.graded_basis[-1] if self.graded_basis else ()

    def hilbert(self) -> list[int]:
        return [len(layer) for layer in self.graded_basis]

    @property
    def dimension(self) -> int:
        return sum(self.hilbert())


def power_ideal_generators(A: Arrangement, k: int, ring: VariableRegistry | None = None
                           ) -> IdealPresentation:
    """One generator h^{rho(h)+k+1} per line h of A.

    An exponent of 0 yields the unit ideal, as h^0 = 1.
    """
    if k not in (-2, -1, 0):
        raise ValueError("k must be -2, -1 or 0")
    if not A.is_essential():
        raise ValueError("power ideals are built here for essential arrangements only")
    if ring is None:
        ring = VariableRegistry([f"u{t + 1}" for t in range(A.dim)], A.field)
    if ring.nvars != A.dim or ring.field is not A.field:
        raise ValueError("registry does not match the arrangement")
    gens = []
    for v in lines(A):
        e = rho(A, v) + k + 1
        if e < 0:
            continue
        gens.append(ring.linear_form(v) ** e)
    return IdealPresentation(ring, tuple(gens), "lines", (k,))


def dual_power_ideal(m: int, n: int, k: int = -2) -> IdealPresentation:
    model = dual_model(m, n)
    return power_ideal_generators(model.gale.dual, k, model.ring)


def triangle_quadric(model: DualModel, i, j, k) -> Polynomial:
    """y_ij^0 y_jk^0 + y_ik^0 y_kj^0 + y_ji^0 y_ik^0."""
    y = model.y
    return y(i, j) * y(j, k) + y(i, k) * y(k, j) + y(j, i) * y(i, k)


def w_orbit(model: DualModel, seeds, order) -> list[Polynomial]:
    """Closure of the seeds under the generators of W, up to scalars."""
    G = wreath_group(max(model.m, 1), model.n)
    gens = G.generators()
    found = {}
    frontier = []
    for s in seeds:
        q = s.monic(order)
        key = frozenset(q.terms.items())
        if key not in found:
            found[key] = q
            frontier.append(q)
    while frontier:
        nxt = []
        for f in frontier:
            for g in gens:
                q = model.act(g, f).monic(order)
                key = frozenset(q.terms.items())
                if key not in found:
                    found[key] = q
                    nxt.append(q)
        frontier = nxt
    return list(found.values())


def internal_generators_G(m: int, n: int) -> IdealPresentation:
    """J_1 (all y_ij^k y_ij^k') plus the W-orbit J_2 of the triangle quadric."""
    if m < 2 or n < 2:
        raise ValueError("need m >= 2 and n >= 2")
    model = dual_model(m, n)
    order = MonomialOrder("grevlex", nvars=model.ring.nvars)
    j1 = []
    for i, j in combinations(range(1, n + 1), 2):
        for a in range(m):
            for b in range(a, m):
                j1.append(model.y(i, j, a) * model.y(i, j, b))
    j2 = w_orbit(model, [triangle_quadric(model, 1, 2, 3)], order) if n >= 3 else []
    return IdealPresentation(model.ring, tuple(j1 + j2), "explicit-G", (m, n, len(j1), len(j2)))


def internal_generators_typeA(n: int) -> IdealPresentation:
    """Squares y_ij^2 and y_ij y_ki + y_ji y_kj + y_ki y_jk on the type A dual of S_n."""
    if n < 3:
        raise ValueError("need n >= 3")
    model = dual_model(1, n)
    y = model.y
    gens = [y(i, j) ** 2 for i, j in combinations(range(1, n), 2)]
    for i, j, k in combinations(range(1, n), 3):
        gens.append(y(i, j) * y(k, i) + y(j, i) * y(k, j) + y(k, i) * y(j, k))
    return IdealPresentation(model.ring, tuple(gens), "explicit-typeA", (n,))


def typeA_marked_basis(n: int):
    """[(y_ij^2, None)] and (-y_ij y_ik + y_ij y_jk - y_ik y_jk, y_ij y_ik)."""
    model = dual_model(1, n)
    y = model.y
    out = [(y(i, j) ** 2, None) for i, j in combinations(range(1, n), 2)]
    for i, j, k in combinations(range(1, n), 3):
        lead = y(i, j) * y(i, k)
        out.append((-lead + y(i, j) * y(j, k) - y(i, k) * y(j, k), lead))
    return out


# ---------------------------------------------------------------------------
# order search


def pair_orders(n: int) -> dict:
    pairs = list(combinations(range(1, n + 1), 2))
    return {
        "lex": sorted(pairs),
        "colex": sorted(pairs, key=lambda p: (p[1], p[0])),
        "revlex": sorted(pairs, reverse=True),
        "revcolex": sorted(pairs, key=lambda p: (p[1], p[0]), reverse=True),
    }


def candidate_orders(model: DualModel):
    """Deterministic list of (name, grevlex order) over structured variable rankings."""
    R = model.ring
    out = []
    for pname, pairs in pair_orders(model.n).items():
        if model.m == 1:
            keys = [p for p in pairs if p[1] < model.n]
            out.append((f"grevlex/{pname}", MonomialOrder(
                "grevlex", [R.key_index[k] for k in keys])))
            continue
        for sup_name, sups in (("up", range(model.m)), ("down", range(model.m - 1, -1, -1))):
            for major in ("superscript", "subscript"):
                if major == "superscript":
                    keys = [(i, j, s) for s in sups for i, j in pairs]
                else:
                    keys = [(i, j, s) for i, j in pairs for s in sups]
                out.append((f"grevlex/{major}-major/{pname}/{sup_name}", MonomialOrder(
                    "grevlex", [R.key_index[k] for k in keys])))
    return out


def search_order(model: DualModel, accept):
    """First candidate order satisfying ``accept(order)``; fails loudly otherwise."""
    tried = []
    for name, order in candidate_orders(model):
        if accept(order):
            return name, order
        tried.append(name)
    raise AssertionError(f"no candidate order satisfies the constraint; tried {tried}")


def _marks_lead(marked, order) -> bool:
    return all(f.leading_monomial(order) == next(iter(lead.terms))
               for f, lead in marked if lead is not None)


def typeA_order(n: int) -> MonomialOrder:
    """Order making every y_ij y_ik (i < j < k) leading in the type A basis."""
    marked = typeA_marked_basis(n)
    return search_order(dual_model(1, n), lambda o: _marks_lead(marked, o))[1]


# ---------------------------------------------------------------------------
# type B (m = 2)


def typeB_explicit_set(n: int, mirrored: bool = False):
    """The explicit type B generating set, each element with its marked monomial.

    Returns a list of (polynomial, marked monomial or None).  The two quadric
    families are taken over the index ranges where the marked term is a
    forbidden +-tree pattern: Q0 with i the smallest index and Q1 with i < k.
    ``mirrored`` relabels the quadrics by v -> n+1-v (i largest, i > k), which
    is the labeling under which the marked terms of the cubics can lead.
    """
    model = dual_model(2, n)
    y = model.y
    out = []
    for i, j in combinations(range(1, n + 1), 2):
        for f in (y(i, j, 0) ** 2, y(i, j, 1) ** 2, y(i, j, 0) * y(i, j, 1)):
            out.append((f, None))
    for i, j, k in combinations(range(1, n + 1), 3):
        out.append((y(i, j, 1) * y(j, k, 1) * y(k, i, 1), None))
    before = (lambda a, b: a > b) if mirrored else (lambda a, b: a < b)
    for i, j, k in permutations(range(1, n + 1), 3):
        if before(i, j) and before(i, k):
            lead = y(j, i, 0) * y(i, k, 0)
            out.append((lead + y(i, j, 0) * y(j, k, 0) + y(i, k, 0) * y(k, j, 0), lead))
        if before(i, k):
            lead = y(j, i, 1) * y(i, k, 0)
            out.append((lead + y(i, j, 1) * y(j, k, 1) - y(i, k, 0) * y(k, j, 1), lead))
    for a, b, c, d in combinations(range(1, n + 1), 4):
        def Y(p, q):
            return y(p, q, 1)
        cubics = [
            (Y(a, b) * Y(a, c) * Y(b, d) - Y(a, b) * Y(a, c) * Y(c, d)
             - Y(a, b) * Y(b, d) * Y(c, d), Y(a, c) * Y(b, d) * Y(c, d)),
            (Y(a, c) * Y(b, c) * Y(a, d) - Y(a, c) * Y(b, c) * Y(b, d)
             - Y(a, c) * Y(a, d) * Y(b, d), Y(b, c) * Y(a, d) * Y(b, d)),
            (Y(a, b) * Y(b, c) * Y(a, d) - Y(a, b) * Y(b, c) * Y(c, d)
             - Y(a, b) * Y(a, d) * Y(c, d), Y(b, c) * Y(a, d) * Y(c, d)),
        ]
        for rest, lead in cubics:
            out.append((rest + lead, lead))
    return out


def _quadric_marks(marked):
    return [(f, lead) for f, lead in marked if lead is not None and f.degree() == 2]


def typeB_order(n: int, mirrored: bool = False) -> MonomialOrder:
    """Searched order for the explicit type B set.

    Unmirrored: the quadric marks lead (cubic marks cannot, together with the
    tree labeling).  Mirrored: every mark, cubics included, leads.
    """
    marked = typeB_explicit_set(n, mirrored)
    check = marked if mirrored else _quadric_marks(marked)
    return search_order(dual_model(2, n), lambda o: _marks_lead(check, o))[1]


def typeB_groebner(n: int, mirrored: bool = False, order: MonomialOrder | None = None
                   ) -> GroebnerBasis:
    """Verify the explicit type B set is a Groebner basis; return it reduced."""
    if n < 2:
        raise ValueError("need n >= 2")
    model = dual_model(2, n)
    order = order or typeB_order(n, mirrored)
    marked = typeB_explicit_set(n, mirrored)
    for f, lead in (marked if mirrored else _quadric_marks(marked)):
        if lead is not None and f.leading_monomial(order) != next(iter(lead.terms)):
            raise AssertionError(
                f"marked term {lead.to_text()} is not leading in {f.to_text(order)}")
    polys = [f for f, _ in marked]
    ok, failures = is_groebner_basis(polys, order)
    if not ok:
        i, j = failures[0]
        raise AssertionError(
            f"S-polynomial of {polys[i].to_text(order)} and {polys[j].to_text(order)} "
            "does not reduce to zero")
    return _reduced(model.ring, order, polys)


def relabel_reversed(model: DualModel, f: Polynomial) -> Polynomial:
    """Apply the vertex relabeling v -> n+1-v."""
    n = model.n
    w = WreathElement.from_permutation(max(model.m, 1), [n + 1 - v for v in range(1, n + 1)])
    return model.act(w, f)


def quotient(ideal: IdealPresentation, order: MonomialOrder | None = None,
             groebner: GroebnerBasis | None = None) -> QuotientAlgebra:
    if groebner is None:
        order = order or MonomialOrder("grevlex", nvars=ideal.ring.nvars)
        groebner = ideal.groebner(order)
    layers = standard_monomials(groebner)
    return QuotientAlgebra(groebner, tuple(tuple(layer) for layer in layers))
