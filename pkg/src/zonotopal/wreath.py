"""The groups G(m,1,n) as monomial matrices, with exact class functions.

An element is stored as (perm, weights) meaning e_j -> w^{weights[j]} e_{perm[j]}
with w = exp(2 pi i / m) and 0-based indices.  Products compose right to left,
matching matrix multiplication.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field as dc_field
from itertools import permutations, product

from .cyclotomic import CyclotomicNumber, cyclotomic_field, embed
from .linalg import FieldMatrix

GROUP_SIZE_BOUND = 10_000


class GroupSizeError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class WreathElement:
    m: int
    perm: tuple
    weights: tuple

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise ValueError(f"{self.perm} is not a permutation of 0..{n - 1}")
        if len(self.weights) != n:
            raise ValueError("need one weight per coordinate")
        object.__setattr__(self, "weights", tuple(w % self.m for w in self.weights))

    @property
    def n(self):
        return len(self.perm)

    # -- named elements (1-based labels in the arguments) ---------------
    @classmethod
    def identity(cls, m, n):
        return cls(m, tuple(range(n)), (0,) * n)

    @classmethod
    def from_permutation(cls, m, images):
        """images[j-1] = pi(j), 1-based."""
        return cls(m, tuple(x - 1 for x in images), (0,) * len(images))

    @classmethod
    def transposition(cls, m, n, a, b):
        p = list(range(n))
        p[a - 1], p[b - 1] = b - 1, a - 1
        return cls(m, tuple(p), (0,) * n)

    @classmethod
    def long_cycle(cls, m, n):
        """The n-cycle j -> j-1 (and 1 -> n), i.e. e_1 -> e_n, e_2 -> e_1, ..."""
        return cls(m, tuple((j - 1) % n for j in range(n)), (0,) * n)

    @classmethod
    def g(cls, m, n, i):
        w = [0] * n
        w[i - 1] = 1
        return cls(m, tuple(range(n)), tuple(w))

    @classmethod
    def central(cls, m, n):
        """g_1 g_2 ... g_n, the scalar matrix w."""
        return cls(m, tuple(range(n)), (1,) * n)

    # -- group law -----------------------------------------------------
    def __mul__(self, other: "WreathElement") -> "WreathElement":
        if self.m != other.m or self.n != other.n:
            raise ValueError("elements of different groups")
        pa, wa = self.perm, self.weights
        pb, wb = other.perm, other.weights
        return WreathElement(
            self.m,
            tuple(pa[pb[j]] for j in range(self.n)),
            tuple(wb[j] + wa[pb[j]] for j in range(self.n)),
        )

    def inverse(self) -> "WreathElement":
        n = self.n
        p = [0] * n
        w = [0] * n
        for j in range(n):
            p[self.perm[j]] = j
            w[self.perm[j]] = -self.weights[j]
        return WreathElement(self.m, tuple(p), tuple(w))

    def __pow__(self, k: int) -> "WreathElement":
        if k < 0:
            return self.inverse() ** (-k)
        result = WreathElement.identity(self.m, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return self.perm == tuple(range(self.n)) and not any(self.weights)

    def order(self) -> int:
        # a cycle of length l and weight sum s has order l * m / gcd(s, m)
        out = 1
        for length, s in self.cycle_type():
            out = math.lcm(out, length * (self.m // math.gcd(s, self.m)))
        return out

    def cycles(self) -> list[tuple]:
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cyc = []
            j = start
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = self.perm[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple:
        """Sorted (length, weight sum mod m) pairs; a complete class invariant."""
        return tuple(sorted(
            (len(c), sum(self.weights[j] for j in c) % self.m) for c in self.cycles()))

    def embed(self, n_big: int) -> "WreathElement":
        """Image under G(m,1,n) -> G(m,1,n_big) fixing the extra coordinates."""
        extra = n_big - self.n
        if extra < 0:
            raise ValueError("cannot embed into a smaller group")
        return WreathElement(
            self.m, self.perm + tuple(range(self.n, n_big)), self.weights + (0,) * extra)

    def matrix(self, field=None) -> FieldMatrix:
        F = field or cyclotomic_field(self.m)
        if F.conductor % self.m and self.m > 2:
            raise ValueError("field does not contain the m-th roots of unity")
        rows = [[F.zero] * self.n for _ in range(self.n)]
        for j in range(self.n):
            rows[self.perm[j]][j] = _root(F, self.weights[j], self.m)
        return FieldMatrix.from_rows(F, rows)

    def apply(self, v, field=None):
        F = field or cyclotomic_field(self.m)
        out = [F.zero] * self.n
        for j, x in enumerate(v):
            out[self.perm[j]] = F(x) * _root(F, self.weights[j], self.m)
        return out

    def __str__(self):
        parts = []
        for c in self.cycles():
            labels = " ".join(str(j + 1) for j in c)
            ws = ",".join(str(self.weights[j]) for j in c)
            parts.append(f"({labels})[{ws}]")
        return "".join(parts)

    def to_json(self):
        return {"m": self.m, "perm": [p + 1 for p in self.perm], "weights": list(self.weights),
                "cycles": str(self)}


def _root(F, k, m):
    """w^k with w = exp(2 pi i/m) inside the field F."""
    k %= m
    if k == 0:
        return F.one
    if m == 2:
        return -F.one
    return F.zeta(k * (F.conductor // m))


class WreathGroup:
    """All m^n n! elements of G(m,1,n) in a fixed order, with conjugacy classes."""

    def __init__(self, m: int, n: int, bound: int = GROUP_SIZE_BOUND):
        if m < 1 or n < 1:
            raise ValueError("need m >= 1 and n >= 1")
        size = m ** n * math.factorial(n)
        if size > bound:
            raise GroupSizeError(
                f"G({m},1,{n}) has {size} elements, above the enumeration bound {bound}")
        self.m, self.n = m, n
        self.elements = [WreathElement(m, p, w)
                         for p in permutations(range(n))
                         for w in product(range(m), repeat=n)]
        self.index = {g: t for t, g in enumerate(self.elements)}
        self._classes = None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return g in self.index

    def __repr__(self):
        return f"G({self.m},1,{self.n})"

    def identity(self):
        return WreathElement.identity(self.m, self.n)

    def generators(self) -> list[WreathElement]:
        """Adjacent transpositions and g_1."""
        gens = [WreathElement.transposition(self.m, self.n, a, a + 1) for a in range(1, self.n)]
        if self.m > 1:
            gens.append(WreathElement.g(self.m, self.n, 1))
        return gens

    def _compute_classes(self):
        class_of = {}
        reps, members = [], []
        for g in self.elements:
            if g in class_of:
                continue
            t = len(reps)
            orbit = set()
            for x in self.elements:
                orbit.add(x * g * x.inverse())
            for h in orbit:
                class_of[h] = t
            reps.append(g)
            members.append(sorted(orbit, key=self.index.__getitem__))
        self._classes = (reps, members, class_of)

    @property
    def class_representatives(self) -> list[WreathElement]:
        if self._classes is None:
            self._compute_classes()
        return self._classes[0]

    def class_members(self, t) -> list[WreathElement]:
        if self._classes is None:
            self._compute_classes()
        return self._classes[1][t]

    def class_sizes(self) -> list[int]:
        if self._classes is None:
            self._compute_classes()
        return [len(c) for c in self._classes[1]]

    def class_index(self, g) -> int:
        if self._classes is None:
            self._compute_classes()
        return self._classes[2][g]

    def conjugacy_classes(self) -> list[tuple]:
        return list(zip(self.class_representatives, self.class_sizes()))


_GROUPS = {}


def wreath_group(m, n) -> WreathGroup:
    g = _GROUPS.get((m, n))
    if g is None:
        g = _GROUPS[(m, n)] = WreathGroup(m, n)
    return g


def group_enumerate(m, n) -> list[WreathElement]:
    return list(wreath_group(m, n).elements)


def conjugacy_classes(G: WreathGroup) -> list[tuple]:
    return G.conjugacy_classes()


class Subgroup:
    def __init__(self, group: WreathGroup, generators):
        self.group = group
        self.generators = list(generators)
        e = group.identity()
        seen = {e}
        frontier = [e]
        while frontier:
            nxt = []
            for x in frontier:
                for s in self.generators:
                    y = s * x
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        self.elements = sorted(seen, key=group.index.__getitem__)
        self.element_set = seen

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self.element_set

    def is_abelian(self) -> bool:
        return all(a * b == b * a for a in self.generators for b in self.generators)


# ---------------------------------------------------------------------------
# class functions


@dataclass(frozen=True)
class ClassFunction:
    """Exact values on the conjugacy classes of a WreathGroup, in class order."""

    group: WreathGroup = dc_field(compare=False)
    values: tuple
    name: str = dc_field(default="", compare=False)

    def __post_init__(self):
        if len(self.values) != len(self.group.class_representatives):
            raise ValueError("need one value per conjugacy class")
        fields = {v.field.conductor for v in self.values}
        if len(fields) > 1:
            raise ValueError("class function values must share a field")

    @property
    def field(self):
        return self.values[0].field

    @classmethod
    def from_function(cls, group, f, field, name=""):
        F = field if not isinstance(field, int) else cyclotomic_field(field)
        return cls(group, tuple(F(f(g)) for g in group.class_representatives), name)

    @classmethod
    def trivial(cls, group, field=1):
        return cls.from_function(group, lambda g: 1, field, "trivial")

    @classmethod
    def regular(cls, group, field=1):
        return cls.from_function(group, lambda g: len(group) if g.is_identity() else 0,
                                 field, "regular")

    def __call__(self, g):
        return self.values[self.group.class_index(g)]

    def degree(self):
        return self(self.group.identity())

    def in_field(self, conductor) -> "ClassFunction":
        if conductor == self.field.conductor:
            return self
        F = cyclotomic_field(conductor)
        return ClassFunction(self.group, tuple(embed(v, F) for v in self.values), self.name)

    def _align(self, other):
        if other.group is not self.group:
            raise ValueError("class functions on different groups")
        N = math.lcm(self.field.conductor, other.field.conductor)
        return self.in_field(N), other.in_field(N)

    def __add__(self, other):
        a, b = self._align(other)
        return ClassFunction(self.group, tuple(x + y for x, y in zip(a.values, b.values)))

    def __sub__(self, other):
        a, b = self._align(other)
        return ClassFunction(self.group, tuple(x - y for x, y in zip(a.values, b.values)))

    def __neg__(self):
        return ClassFunction(self.group, tuple(-x for x in self.values))

    def tensor(self, other):
        a, b = self._align(other)
        return ClassFunction(self.group, tuple(x * y for x, y in zip(a.values, b.values)))

    __mul__ = tensor

    def scale(self, c):
        return ClassFunction(self.group, tuple(self.field(c) * x for x in self.values))

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        if other.group is not self.group:
            return False
        a, b = self._align(other)
        return a.values == b.values

    def __hash__(self):
        return hash(len(self.values))

    def restrict(self, small: WreathGroup) -> "ClassFunction":
        """Pull back along G(m,1,k) -> G(m,1,n) fixing the last n-k coordinates."""
        if small.m != self.group.m or small.n > self.group.n:
            raise ValueError(f"no standard embedding of {small} in {self.group}")
        n = self.group.n
        return ClassFunction(
            small, tuple(self(h.embed(n)) for h in small.class_representatives), self.name)

    def inner_product(self, other) -> CyclotomicNumber:
        """(1/|G|) sum_g f(g) conj(h(g)) with conj via inversion on the class of g^-1."""
        a, b = self._align(other)
        G = self.group
        F = a.field
        total = F.zero
        for rep, size in G.conjugacy_classes():
            total = total + F(size) * a(rep) * b(rep.inverse())
        return total / F(len(G))

    def table_row(self):
        return [v.to_json() for v in self.values]


def class_table_json(group: WreathGroup, functions: dict) -> dict:
    """JSON character table: classes x named class functions."""
    classes = [{"representative": str(r), "cycle_type": [list(t) for t in r.cycle_type()],
                "size": s} for r, s in group.conjugacy_classes()]
    return {
        "group": {"m": group.m, "n": group.n, "order": len(group)},
        "classes": classes,
        "characters": {name: [str(v) for v in f.values] for name, f in functions.items()},
        "characters_exact": {name: f.table_row() for name, f in functions.items()},
    }


def class_table_csv(group: WreathGroup, functions: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["class", "size"] + list(functions))
    for t, (rep, size) in enumerate(group.conjugacy_classes()):
        w.writerow([str(rep), size] + [str(f.values[t]) for f in functions.values()])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# induced, Lie and Whitehouse characters


def induced_character(G: WreathGroup, H_elements, chi, conductor=None) -> ClassFunction:
    """Ind_H^G chi by the full sum (1/|H|) sum_{x in G, x^-1 g x in H} chi(x^-1 g x).

    ``chi`` maps each element of H to its value; it must be constant on
    H-conjugacy classes.
    """
    H = list(H_elements)
    Hset = set(H)
    if isinstance(chi, dict):
        values = chi
    else:
        values = {h: chi(h) for h in H}
    if set(values) != Hset:
        raise ValueError("character must be given on every element of H")
    N = conductor or math.lcm(*(v.field.conductor for v in values.values()
                                if isinstance(v, CyclotomicNumber)))
    F = cyclotomic_field(N)
    values = {h: embed(v, F) if isinstance(v, CyclotomicNumber) else F(v)
              for h, v in values.items()}
    for h in H:
        for x in H:
            if values[x * h * x.inverse()] != values[h]:
                raise ValueError("chi is not constant on conjugacy classes of H")
    invs = [x.inverse() for x in G.elements]
    out = []
    order_H = F(len(H))
    for g in G.class_representatives:
        acc = F.zero
        for x, xi in zip(G.elements, invs):
            y = xi * g * x
            v = values.get(y)
            if v is not None:
                acc = acc + v
        out.append(acc / order_H)
    return ClassFunction(G, tuple(out), "induced")


def induce_class_function(G: WreathGroup, f: ClassFunction) -> ClassFunction:
    """Ind from the standard copy of f.group inside G."""
    small = f.group
    chi = {h.embed(G.n): f(h) for h in small.elements}
    return induced_character(G, list(chi), chi, f.field.conductor)


def _mobius(k: int) -> int:
    result, p = 1, 2
    while p * p <= k:
        if k % p == 0:
            k //= p
            if k % p == 0:
                return 0
            result = -result
        p += 1
    return -result if k > 1 else result


def lie_character(n: int) -> ClassFunction:
    """Closed form (d-1)! (n/d)^{d-1} mu(n/d) on the class of c^d, zero elsewhere."""
    if n < 1:
        raise ValueError("need n >= 1")
    G = wreath_group(1, n)

    def value(g):
        lengths = {length for length, _ in g.cycle_type()}
        if len(lengths) != 1:
            return 0
        (ell,) = lengths
        d = n // ell
        return math.factorial(d - 1) * ell ** (d - 1) * _mobius(ell)

    return ClassFunction.from_function(G, value, max(n, 1), f"Lie_{n}")


def lie_character_induced(n: int) -> ClassFunction:
    """Ind from <c> of c -> exp(2 pi i/n), by brute force."""
    G = wreath_group(1, n)
    F = cyclotomic_field(n)
    c = WreathElement.long_cycle(1, n)
    chi = {}
    x = G.identity()
    for a in range(n):
        chi[x] = F.zeta(a)
        x = c * x
    return induced_character(G, list(chi), chi, n)


def whitehouse_character(n: int) -> ClassFunction:
    if n < 3:
        raise ValueError("Whitehouse character needs n >= 3")
    G = wreath_group(1, n)
    ind = induce_class_function(G, lie_character(n - 1))
    return ind - lie_character(n)


def standard_character(n: int) -> ClassFunction:
    """1-perp: fixed points minus one, the (n-1)-dimensional standard character."""
    G = wreath_group(1, n)
    return ClassFunction.from_function(
        G, lambda g: sum(1 for j in range(n) if g.perm[j] == j) - 1, 1, "standard")


def e1_character(m: int, n: int) -> ClassFunction:
    """Ind from G(m,1,n-1) to G(m,1,n) of the trivial character."""
    G = wreath_group(m, n)
    small = wreath_group(m, n - 1)
    return induce_class_function(G, ClassFunction.trivial(small))


def chi_on_C(m: int, n: int):
    """C = <c, g_1...g_n> with chi(c) = exp(2 pi i/n), chi(g_1...g_n) = w^{n-1}.

    Returns (C, chi) with chi a dict element -> value in Q(zeta_lcm(m, n)).
    """
    G = wreath_group(m, n)
    N = math.lcm(m, n)
    F = cyclotomic_field(N)
    c = WreathElement.long_cycle(m, n)
    z = WreathElement.central(m, n)
    C = Subgroup(G, [c, z])
    zeta_n = F.zeta(N // n)
    omega = F.zeta(N // m) if m > 1 else F.one
    chi = {}
    for a in range(n):
        for b in range(m):
            x = (c ** a) * (z ** b)
            v = zeta_n ** a * omega ** (b * (n - 1))
            if x in chi and chi[x] != v:
                raise ValueError("inconsistent character values on C")
            chi[x] = v
    if set(chi) != C.element_set:
        raise AssertionError("words c^a z^b do not exhaust C")
    for x in C.elements:
        for y in C.elements:
            if chi[x * y] != chi[x] * chi[y]:
                raise ValueError("chi is not multiplicative on C")
    return C, chi
