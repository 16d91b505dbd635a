"""Sparse multivariate polynomials over Q(zeta_N) and Groebner bases.

Monomials are dense exponent tuples indexed by a ``VariableRegistry``.
Buchberger's algorithm uses the normal selection strategy with the
Gebauer-Moeller pair update (which contains the coprime-leading-term
criterion), and returns the reduced basis.  For homogeneous input the
computation stops as soon as some degree has no standard monomials left,
since every S-polynomial of higher degree then reduces to zero.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations

from .cyclotomic import CyclotomicField, CyclotomicNumber

__all__ = [
    "VariableRegistry",
    "MonomialOrder",
    "Polynomial",
    "GroebnerBasis",
    "buchberger",
    "normal_form",
    "s_polynomial",
    "is_groebner_basis",
    "standard_monomials",
    "hilbert_series_of_quotient",
    "InfiniteQuotientError",
]


class InfiniteQuotientError(ValueError):
    pass


class VariableRegistry:
    """Ordered, immutable list of variable names over a fixed field."""

    def __init__(self, names, field: CyclotomicField, keys=None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        self.names = names
        self.field = field
        self.index = {nm: t for t, nm in enumerate(names)}
        self.keys = tuple(keys) if keys is not None else names
        self.key_index = {k: t for t, k in enumerate(self.keys)}
        self.nvars = len(names)

    def __len__(self):
        return self.nvars

    def __repr__(self):
        return f"VariableRegistry({list(self.names)}, Q(zeta_{self.field.conductor}))"

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name_or_index) -> "Polynomial":
        t = name_or_index if isinstance(name_or_index, int) else self.index[name_or_index]
        e = [0] * self.nvars
        e[t] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def gens(self) -> list["Polynomial"]:
        return [self.var(t) for t in range(self.nvars)]

    def monomial(self, exps, coeff=1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): self.field(coeff)})

    def linear_form(self, coords) -> "Polynomial":
        """sum coords[t] * x_t."""
        terms = {}
        for t, c in enumerate(coords):
            c = self.field(c)
            if c:
                e = [0] * self.nvars
                e[t] = 1
                terms[tuple(e)] = c
        return Polynomial(self, terms)

    def monomial_text(self, exps) -> str:
        parts = []
        for t, e in enumerate(exps):
            if e == 1:
                parts.append(self.names[t])
            elif e > 1:
                parts.append(f"{self.names[t]}**{e}")
        return "*".join(parts) if parts else "1"


class MonomialOrder:
    """grevlex or lex after reordering variables.

    ``ranking`` lists variable indices from largest to smallest; the default
    is registry order.  Comparison keys are cached per monomial.
    """

    def __init__(self, kind: str = "grevlex", ranking=None, nvars=None):
        if kind not in ("grevlex", "lex"):
            raise ValueError(f"unknown monomial order {kind!r}")
        if ranking is None:
            if nvars is None:
                raise ValueError("need a ranking or the number of variables")
            ranking = range(nvars)
        self.kind = kind
        self.ranking = tuple(ranking)
        if sorted(self.ranking) != list(range(len(self.ranking))):
            raise ValueError("ranking must be a permutation of the variable indices")
        self._rev = tuple(reversed(self.ranking))
        self._cache = {}

    def key(self, e):
        k = self._cache.get(e)
        if k is None:
            if self.kind == "grevlex":
                k = (sum(e),) + tuple(-e[t] for t in self._rev)
            else:
                k = tuple(e[t] for t in self.ranking)
            self._cache[e] = k
        return k

    def neg_key(self, e):
        return tuple(-x for x in self.key(e))

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.kind, self.ranking) == (
            other.kind, other.ranking)

    def __hash__(self):
        return hash((self.kind, self.ranking))

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}, ranking={list(self.ranking)})"

    def to_json(self, registry=None):
        d = {"kind": self.kind, "ranking": list(self.ranking)}
        if registry is not None:
            d["ranking_names"] = [registry.names[t] for t in self.ranking]
        return d


class Polynomial:
    """Sparse polynomial: dict exponent-tuple -> nonzero CyclotomicNumber."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: VariableRegistry, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- construction helpers -----------------------------------------
    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ring is not self.ring:
                raise ValueError("polynomials live in different registries")
            return other
        return self.ring.constant(other)

    def copy(self):
        return Polynomial(self.ring, dict(self.terms))

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        o = self._check(other)
        t = dict(self.terms)
        for m, c in o.terms.items():
            v = t.get(m)
            if v is None:
                t[m] = c
            else:
                v = v + c
                if v:
                    t[m] = v
                else:
                    del t[m]
        return Polynomial(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, c) -> "Polynomial":
        c = self.ring.field(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: c * x for m, x in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        o = self._check(other)
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = t.get(m)
                t[m] = c1 * c2 if v is None else v + c1 * c2
        return Polynomial(self.ring, {m: c for m, c in t.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_monomial(self, q, c=None) -> "Polynomial":
        """c * x^q * self."""
        if c is None:
            return Polynomial(
                self.ring, {tuple(a + b for a, b in zip(m, q)): x for m, x in self.terms.items()})
        return Polynomial(
            self.ring, {tuple(a + b for a, b in zip(m, q)): c * x for m, x in self.terms.items()})

    # -- inspection ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring is other.ring and self.terms == other.terms
        if isinstance(other, (int,)) or isinstance(other, CyclotomicNumber):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def coefficient(self, exps) -> CyclotomicNumber:
        return self.terms.get(tuple(exps), self.ring.field.zero)

    def leading_monomial(self, order: MonomialOrder):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder) -> CyclotomicNumber:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        return self.scale(self.leading_coefficient(order).inverse())

    def sorted_terms(self, order: MonomialOrder):
        return sorted(self.terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)

    # -- display ------------------------------------------------------
    def to_text(self, order: MonomialOrder | None = None) -> str:
        if not self.terms:
            return "0"
        order = order or MonomialOrder("grevlex", nvars=self.ring.nvars)
        out = []
        for m, c in self.sorted_terms(order):
            mono = self.ring.monomial_text(m)
            if c.is_rational():
                cs = str(c.to_fraction())
            else:
                cs = f"({c})"
            if mono == "1":
                term = cs
            elif cs == "1":
                term = mono
            elif cs == "-1":
                term = "-" + mono
            else:
                term = f"{cs}*{mono}"
            out.append(term)
        s = " + ".join(out)
        return s.replace("+ -", "- ")

    def __repr__(self):
        return self.to_text()

    def to_json(self, order: MonomialOrder | None = None) -> dict:
        order = order or MonomialOrder("grevlex", nvars=self.ring.nvars)
        return {
            "variables": list(self.ring.names),
            "terms": [{"exponents": list(m), "coeff": c.to_json()}
                      for m, c in self.sorted_terms(order)],
        }

    @classmethod
    def from_json(cls, ring: VariableRegistry, data: dict) -> "Polynomial":
        if list(data["variables"]) != list(ring.names):
            raise ValueError("variable list does not match the registry")
        t = {}
        for term in data["terms"]:
            c = ring.field(CyclotomicNumber.from_json(term["coeff"]))
            if c:
                t[tuple(term["exponents"])] = c
        return cls(ring, t)


# ---------------------------------------------------------------------------
# Division, S-polynomials and Buchberger


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a, b):
    return all(not (x and y) for x, y in zip(a, b))


def _mask(e):
    m = 0
    for t, x in enumerate(e):
        if x:
            m |= 1 << t
    return m


class _Reducer:
    """Monic divisors indexed by leading monomial, for repeated reductions."""

    def __init__(self, order: MonomialOrder):
        self.order = order
        self.lms = []
        self.masks = []
        self.tails = []  # list of (monomial, coeff) without the leading term

    def add(self, lm, poly: Polynomial):
        self.lms.append(lm)
        self.masks.append(_mask(lm))
        self.tails.append([(m, c) for m, c in poly.terms.items() if m != lm])

    def find(self, m, mmask):
        for t, lm in enumerate(self.lms):
            if self.masks[t] & ~mmask == 0 and _divides(lm, m):
                return t
        return None

    def reduce(self, terms: dict, full=True) -> dict:
        """Normal form of ``terms``; with full=False stop at the first irreducible lead."""
        order = self.order
        f = dict(terms)
        heap = [(order.neg_key(m), m) for m in f]
        heapq.heapify(heap)
        rem = {}
        while heap:
            _, m = heapq.heappop(heap)
            c = f.pop(m, None)
            if c is None:
                continue
            t = self.find(m, _mask(m))
            if t is None:
                rem[m] = c
                if not full:
                    rem.update(f)
                    return rem
                continue
            q = tuple(a - b for a, b in zip(m, self.lms[t]))
            for mm, cc in self.tails[t]:
                nm = tuple(a + b for a, b in zip(mm, q))
                v = f.get(nm)
                if v is None:
                    f[nm] = -(c * cc)
                    heapq.heappush(heap, (order.neg_key(nm), nm))
                else:
                    v = v - c * cc
                    if v:
                        f[nm] = v
                    else:
                        del f[nm]
        return rem


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    L = _lcm(lf, lg)
    cf, cg = f.terms[lf], g.terms[lg]
    a = f.mul_monomial(tuple(x - y for x, y in zip(L, lf)), cf.inverse())
    b = g.mul_monomial(tuple(x - y for x, y in zip(L, lg)), cg.inverse())
    return a - b


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis: monic, inter-reduced, sorted by leading monomial."""

    ring: VariableRegistry
    order: MonomialOrder
    polys: tuple

    @property
    def leading_monomials(self) -> list:
        return [p.leading_monomial(self.order) for p in self.polys]

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def reducer(self) -> _Reducer:
        r = getattr(self, "_reducer", None)
        if r is None:
            r = _Reducer(self.order)
            for p in self.polys:
                r.add(p.leading_monomial(self.order), p)
            object.__setattr__(self, "_reducer", r)
        return r

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring is not self.ring:
            raise ValueError("polynomial and basis live in different registries")
        return Polynomial(self.ring, self.reducer().reduce(f.terms))

    def monomial_normal_form(self, exps) -> dict:
        """Normal form of a single monomial, cached."""
        cache = getattr(self, "_mono_cache", None)
        if cache is None:
            cache = {}
            object.__setattr__(self, "_mono_cache", cache)
        nf = cache.get(exps)
        if nf is None:
            nf = self.reducer().reduce({exps: self.ring.field.one})
            cache[exps] = nf
        return nf

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return (self.ring is other.ring and self.order == other.order
                and [p.terms for p in self.polys] == [p.terms for p in other.polys])

    def __hash__(self):
        return hash((self.order, len(self.polys)))

    def to_text(self) -> list[str]:
        return [p.to_text(self.order) for p in self.polys]

    def to_json(self) -> dict:
        return {
            "order": self.order.to_json(self.ring),
            "variables": list(self.ring.names),
            "conductor": self.ring.field.conductor,
            "generators": [p.to_json(self.order)["terms"] for p in self.polys],
        }


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    return G.normal_form(f)


def _standard_by_degree(ring, lms, max_degree):
    """Standard monomials (not divisible by any of lms) degree by degree."""
    n = ring.nvars
    reducer_masks = [(_mask(lm), lm) for lm in lms]

    def standard(e):
        em = _mask(e)
        for mk, lm in reducer_masks:
            if mk & ~em == 0 and _divides(lm, e):
                return False
        return True

    one = (0,) * n
    if not standard(one):
        return []
    layers = [[one]]
    d = 0
    while max_degree is None or d < max_degree:
        nxt = set()
        for e in layers[-1]:
            last = max((t for t in range(n) if e[t]), default=0)
            # extend only at or after the last used variable: each monomial once
            for t in range(last, n):
                f = list(e)
                f[t] += 1
                f = tuple(f)
                if standard(f):
                    nxt.add(f)
        if not nxt:
            break
        layers.append(sorted(nxt))
        d += 1
    return layers


def _has_pure_powers(ring, lms):
    if any(not any(lm) for lm in lms):
        return True  # unit ideal
    for t in range(ring.nvars):
        if not any(lm[t] and sum(lm) == lm[t] for lm in lms):
            return False
    return True


def buchberger(generators, order: MonomialOrder) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``generators``."""
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        raise ValueError("buchberger needs at least one nonzero generator")
    ring = gens[0].ring
    for g in gens:
        if g.ring is not ring:
            raise ValueError("generators live in different registries")
    homogeneous = all(g.is_homogeneous() for g in gens)

    polys = []          # every basis element ever added (monic)
    lms = []
    active = []         # indices forming the current Buchberger set G
    pairs = []          # heap of (deg, key(lcm), i, j)
    reducer = _Reducer(order)
    key = order.key

    def add(poly):
        lm = poly.leading_monomial(order)
        poly = poly.scale(poly.terms[lm].inverse())
        h = len(polys)
        polys.append(poly)
        lms.append(lm)
        reducer.add(lm, poly)
        _gm_update(h)

    def _gm_update(h):
        nonlocal pairs, active
        lh = lms[h]
        C = [(g, _lcm(lh, lms[g])) for g in active]
        D = []
        while C:
            g1, L1 = C.pop()
            if _coprime(lh, lms[g1]):
                D.append((g1, L1))
                continue
            if not any(_divides(L2, L1) for _, L2 in C) and not any(
                    _divides(L2, L1) for _, L2 in D):
                D.append((g1, L1))
        E = [(g, L) for g, L in D if not _coprime(lh, lms[g])]
        kept = []
        for item in pairs:
            _, _, i, j, L = item
            if _divides(lh, L) and _lcm(lms[i], lh) != L and _lcm(lms[j], lh) != L:
                continue
            kept.append(item)
        for g, L in E:
            kept.append((sum(L), key(L), g, h, L))
        heapq.heapify(kept)
        pairs = kept
        active = [g for g in active if not _divides(lh, lms[g])] + [h]

    # inter-reduce the input a little: process generators by increasing lead
    pending = sorted(gens, key=lambda p: key(p.leading_monomial(order)))
    pending_by_degree = {}
    for p in pending:
        pending_by_degree.setdefault(p.degree(), []).append(p)

    def feed_generators(up_to):
        for d in sorted(list(pending_by_degree)):
            if d > up_to:
                break
            for p in pending_by_degree.pop(d):
                r = reducer.reduce(p.terms)
                if r:
                    add(Polynomial(ring, r))

    current_degree = None
    while pairs or pending_by_degree:
        next_pair_deg = pairs[0][0] if pairs else None
        next_gen_deg = min(pending_by_degree) if pending_by_degree else None
        d = min(x for x in (next_pair_deg, next_gen_deg) if x is not None)
        if homogeneous and d != current_degree:
            current_degree = d
            layers = _standard_by_degree(ring, lms, d - 1)
            if len(layers) < d:
                # some degree below d is already entirely in the initial ideal
                break
        if next_gen_deg is not None and next_gen_deg <= d:
            feed_generators(d)
            continue
        _, _, i, j, L = heapq.heappop(pairs)
        fi, fj = polys[i], polys[j]
        s = fi.mul_monomial(tuple(a - b for a, b in zip(L, lms[i]))) - fj.mul_monomial(
            tuple(a - b for a, b in zip(L, lms[j])))
        r = reducer.reduce(s.terms)
        if r:
            add(Polynomial(ring, r))

    return _reduced(ring, order, [polys[g] for g in active])


def _reduced(ring, order, polys) -> GroebnerBasis:
    key = order.key
    items = sorted(((p.leading_monomial(order), p) for p in polys), key=lambda t: key(t[0]))
    minimal = []
    for lm, p in items:
        if any(_divides(lm2, lm) for lm2, _ in minimal):
            continue
        minimal.append((lm, p))
    out = []
    for t, (lm, p) in enumerate(minimal):
        r = _Reducer(order)
        for s, (lm2, p2) in enumerate(minimal):
            if s != t:
                r.add(lm2, p2)
        tail = {m: c for m, c in p.terms.items() if m != lm}
        tail = r.reduce(tail)
        tail[lm] = p.terms[lm]
        q = Polynomial(ring, tail)
        out.append(q.scale(q.terms[lm].inverse()))
    out.sort(key=lambda p: key(p.leading_monomial(order)))
    return GroebnerBasis(ring, order, tuple(out))


def is_groebner_basis(polys, order: MonomialOrder, skip_coprime=True):
    """Buchberger criterion: every S-polynomial reduces to 0 modulo ``polys``.

    Returns (ok, failures) with failures a list of index pairs.
    """
    polys = [p for p in polys if not p.is_zero()]
    r = _Reducer(order)
    lms = []
    for p in polys:
        lm = p.leading_monomial(order)
        lms.append(lm)
        r.add(lm, p.monic(order))
    failures = []
    for i, j in combinations(range(len(polys)), 2):
        if skip_coprime and _coprime(lms[i], lms[j]):
            continue
        s = s_polynomial(polys[i], polys[j], order)
        if r.reduce(s.terms):
            failures.append((i, j))
    return not failures, failures


def standard_monomials(G: GroebnerBasis, max_degree=None) -> list[list[tuple]]:
    """Graded lists of standard monomials, each sorted decreasingly in G.order."""
    lms = G.leading_monomials
    if max_degree is None and not _has_pure_powers(G.ring, lms):
        raise InfiniteQuotientError("quotient ring is infinite-dimensional")
    layers = _standard_by_degree(G.ring, lms, max_degree)
    key = G.order.key
    return [sorted(layer, key=key, reverse=True) for layer in layers]


def hilbert_series_of_quotient(G: GroebnerBasis) -> list[int]:
    return [len(layer) for layer in standard_monomials(G)]
