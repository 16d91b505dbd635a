"""W-action on C^A, on the Gale dual K and on Sym(K).

The action on K is computed from the ambient one: W moves each normal of
the reflection arrangement to a multiple of another normal, which defines a
monomial matrix on C^A; restricting to K and solving in the y-basis gives
the action matrix.  The combinatorial rules on the y's are then a property
that tests check, not an input.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arrangements import gale_dual, reflection_arrangement
from .cyclotomic import CyclotomicField
from .linalg import FieldMatrix, NotInSpan, SpanSolver
from .polynomials import Polynomial, VariableRegistry
from .wreath import WreathElement


@dataclass(frozen=True)
class ActionMatrix:
    element: WreathElement
    matrix: FieldMatrix

    def __matmul__(self, other: "ActionMatrix") -> "ActionMatrix":
        return ActionMatrix(self.element * other.element, self.matrix @ other.matrix)


def _scale_key(v):
    """Key identifying a vector up to nonzero scalars, and the scalar used."""
    for x in v:
        if x:
            inv = x.inverse()
            return tuple((y * inv).num + ((y * inv).den,) for y in v), x
    raise ValueError("zero normal")


class DualModel:
    """Reflection arrangement of G(m,1,n), its Gale dual and the W-action.

    For m = 1 this is the braid arrangement in C^n with S_n acting, and K
    has the type A basis y_ij, i < j < n.
    """

    def __init__(self, m: int, n: int):
        self.m, self.n = m, n
        self.arrangement = reflection_arrangement(m, n)
        self.gale = gale_dual(self.arrangement)
        self.field: CyclotomicField = self.arrangement.field
        self.ring = VariableRegistry(self.gale.basis_names(), self.field,
                                     keys=self.gale.basis_keys)
        self._solver = SpanSolver(self.gale.inclusion)
        self._normal_index = {}
        for t, a in enumerate(self.arrangement.normals):
            key, scale = _scale_key(a)
            self._normal_index[key] = (t, scale)
        self._matrix_cache = {}
        self._image_cache = {}

    @property
    def dim(self):
        return self.gale.dim

    def __repr__(self):
        return f"DualModel(m={self.m}, n={self.n}, dim K={self.dim})"

    # -- ambient -----------------------------------------------------
    def ambient_images(self, w: WreathElement):
        """For each hyperplane t: (t', c) with w h_t = c h_t'."""
        if w.m != max(self.m, 1) or w.n != self.n:
            raise ValueError(f"{w} is not an element of G({self.m},1,{self.n})")
        out = []
        for a in self.arrangement.normals:
            b = w.apply(a, self.field)
            key, s = _scale_key(b)
            hit = self._normal_index.get(key)
            if hit is None:
                raise AssertionError(f"{w} does not preserve the arrangement")
            t2, s2 = hit
            # b = s * canonical, a_t2 = s2 * canonical
            out.append((t2, s * s2.inverse()))
        return out

    def ambient_matrix(self, w) -> FieldMatrix:
        N = len(self.arrangement)
        F = self.field
        rows = [[F.zero] * N for _ in range(N)]
        for t, (t2, c) in enumerate(self.ambient_images(w)):
            rows[t2][t] = c
        return FieldMatrix.from_rows(F, rows)

    # -- on K ----------------------------------------------------------
    def action_matrix(self, w: WreathElement) -> FieldMatrix:
        M = self._matrix_cache.get(w)
        if M is not None:
            return M
        F = self.field
        images = self.ambient_images(w)
        B = self.gale.inclusion
        cols = []
        for col in B.columns():
            v = [F.zero] * len(col)
            for t, x in enumerate(col):
                if x:
                    t2, c = images[t]
                    v[t2] = v[t2] + c * x
            coords = self._solver.solve(v)
            if coords is NotInSpan:
                raise AssertionError(f"{w} does not preserve K")
            cols.append(coords)
        M = FieldMatrix.from_columns(F, cols, self.dim)
        self._matrix_cache[w] = M
        return M

    def action_on_K(self, w) -> ActionMatrix:
        return ActionMatrix(w, self.action_matrix(w))

    def variable_images(self, w) -> list[Polynomial]:
        imgs = self._image_cache.get(w)
        if imgs is None:
            M = self.action_matrix(w)
            imgs = [self.ring.linear_form(M.column(t)) for t in range(self.dim)]
            self._image_cache[w] = imgs
        return imgs

    def act(self, w, f: Polynomial) -> Polynomial:
        return act_on_polynomial(self.variable_images(w), f)

    # -- named vectors -------------------------------------------------
    def y(self, i, j, k=0) -> Polynomial:
        """y_ij^k for any ordered pair, with y_ji^k = -w^k y_ij^{-k} (type A: y_ji = -y_ij)."""
        F = self.field
        if self.m == 1:
            if i == j:
                raise ValueError("need i != j")
            if i < j:
                return self.ring.var(self.ring.key_index[(i, j)])
            return -self.ring.var(self.ring.key_index[(j, i)])
        k %= self.m
        if i < j:
            return self.ring.var(self.ring.key_index[(i, j, k)])
        if i == j:
            raise ValueError("need i != j")
        c = -(F.zeta(k) if self.m > 2 else F(-1) ** k)
        return self.ring.var(self.ring.key_index[(j, i, (-k) % self.m)]).scale(c)


@lru_cache(maxsize=None)
def dual_model(m: int, n: int) -> DualModel:
    return DualModel(m, n)


def action_on_K(w: WreathElement, model: DualModel) -> ActionMatrix:
    return model.action_on_K(w)


def act_on_polynomial(images, f: Polynomial) -> Polynomial:
    """Substitute variable t by images[t] and expand."""
    ring = f.ring
    if all(len(p.terms) == 1 for p in images):
        # monomial action: each variable goes to a scalar times a variable
        single = [next(iter(p.terms.items())) for p in images]
        terms = {}
        for e, c in f.terms.items():
            new = [0] * ring.nvars
            coeff = c
            for t, a in enumerate(e):
                if a:
                    mono, s = single[t]
                    idx = mono.index(1)
                    new[idx] += a
                    coeff = coeff * (s ** a if a > 1 else s)
            key = tuple(new)
            v = terms.get(key)
            terms[key] = coeff if v is None else v + coeff
        return Polynomial(ring, {m: c for m, c in terms.items() if c})
    out = ring.zero()
    powers = {}
    for e, c in f.terms.items():
        term = ring.constant(c)
        for t, a in enumerate(e):
            if a:
                p = powers.get((t, a))
                if p is None:
                    p = powers[(t, a)] = images[t] ** a
                term = term * p
        out = out + term
    return out


def typeA_transposition_rule(model: DualModel, k: int, f_index: int) -> Polynomial:
    """(k n) y_ij by the closed rule: y_ij + y_jk + y_ki if k not in {i, j}, else -y_ij."""
    i, j = model.ring.keys[f_index]
    if k in (i, j):
        return -model.y(i, j)
    return model.y(i, j) + model.y(j, k) + model.y(k, i)


def typeA_extended_action(k: int, n: int) -> ActionMatrix:
    """Matrix of the transposition (k n) on the type A dual, from the ambient action."""
    if not 1 <= k <= n - 1:
        raise ValueError("need 1 <= k <= n-1")
    model = dual_model(1, n)
    return model.action_on_K(WreathElement.transposition(1, n, k, n))
