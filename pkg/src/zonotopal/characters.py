"""Characters of graded pieces of zonotopal quotients, by trace via normal forms."""

from __future__ import annotations

import math
from functools import lru_cache

from .actions import DualModel, act_on_polynomial, dual_model
from .cyclotomic import embed
from .ideals import (
    QuotientAlgebra,
    internal_generators_G,
    internal_generators_typeA,
    quotient,
    typeA_order,
    typeB_groebner,
)
from .polynomials import MonomialOrder, Polynomial
from .wreath import ClassFunction, WreathGroup, wreath_group


@lru_cache(maxsize=None)
def internal_quotient(m: int, n: int) -> QuotientAlgebra:
    """Quotient of Sym(K) by J_1 + J_2 (m >= 2) or by the type A ideal (m = 1)."""
    if m == 1:
        return typeA_quotient(n)
    ideal = internal_generators_G(m, n)
    return quotient(ideal, MonomialOrder("grevlex", nvars=ideal.ring.nvars))


@lru_cache(maxsize=None)
def typeA_quotient(n: int) -> QuotientAlgebra:
    ideal = internal_generators_typeA(n)
    return quotient(ideal, typeA_order(n))


@lru_cache(maxsize=None)
def typeB_quotient(n: int) -> QuotientAlgebra:
    return quotient(None, groebner=typeB_groebner(n))


def check_stable(Q: QuotientAlgebra, model: DualModel, elements) -> bool:
    """Every basis element of the ideal maps into the ideal under each element."""
    G = Q.groebner
    return all(G.contains(model.act(w, g)) for w in elements for g in G.polys)


def _trace(Q: QuotientAlgebra, model: DualModel, w, degree: int):
    G = Q.groebner
    ring = model.ring
    F = model.field
    basis = Q.graded_basis[degree] if degree < len(Q.graded_basis) else ()
    images = model.variable_images(w)
    total = F.zero
    for b in basis:
        f = Polynomial(ring, {b: F.one})
        img = act_on_polynomial(images, f)
        for mono, c in img.terms.items():
            nf = G.monomial_normal_form(mono)
            v = nf.get(b)
            if v is not None:
                total = total + c * v
    return total


def character_of_graded_quotient(Q: QuotientAlgebra, model: DualModel, degree: int,
                                 group: WreathGroup | None = None, conductor: int | None = None
                                 ) -> ClassFunction:
    """Character of the degree-d piece as a function on ``group``.

    ``group`` defaults to G(m,1,n) of the model; a smaller G(m,1,k) acts
    through the embedding that fixes the last coordinates.
    """
    group = group or wreath_group(max(model.m, 1), model.n)
    N = conductor or model.field.conductor
    vals = []
    for h in group.class_representatives:
        w = h.embed(model.n)
        vals.append(embed(_trace(Q, model, w, degree), N))
    return ClassFunction(group, tuple(vals), f"degree {degree}")


def top_character(m: int, n: int, group: WreathGroup | None = None, conductor=None
                  ) -> ClassFunction:
    """Character of the top of the internal quotient of the Gale dual of G(m,1,n)."""
    Q = internal_quotient(m, n)
    model = dual_model(m, n)
    N = conductor or math.lcm(max(m, 1), n)
    return character_of_graded_quotient(Q, model, Q.top_degree, group, N)


def graded_characters(m: int, n: int, group: WreathGroup | None = None, conductor=None
                      ) -> list[ClassFunction]:
    Q = internal_quotient(m, n)
    model = dual_model(m, n)
    N = conductor or max(m, 1)
    return [character_of_graded_quotient(Q, model, d, group, N)
            for d in range(Q.top_degree + 1)]
