"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, z, ..., z^(phi-1) reduced modulo
the N-th cyclotomic polynomial, as a tuple of integer numerators over one
positive common denominator.  The representation is canonical, so equality
and hashing are coordinate-wise.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "CyclotomicField",
    "CyclotomicNumber",
    "cyclotomic_field",
    "cyclotomic_polynomial",
    "root_of_unity",
    "embed",
    "common_field",
]


def _poly_divmod_int(num, den):
    """Divide integer polynomials (low-to-high lists); den must be monic."""
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    q = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            q[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    rem = num[:dd] or [0]
    return q, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (constant term first) of the n-th cyclotomic polynomial.

    Computed by exact division of x^n - 1 by the cyclotomic polynomials of
    the proper divisors of n.
    """
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            q, r = _poly_divmod_int(poly, cyclotomic_polynomial(d))
            assert not any(r), "cyclotomic division left a remainder"
            poly = q
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


class CyclotomicField:
    """The field Q(zeta_N), power basis modulo Phi_N."""

    def __init__(self, conductor: int):
        if conductor < 1:
            raise ValueError(f"conductor must be positive, got {conductor}")
        self.conductor = conductor
        self.minpoly = cyclotomic_polynomial(conductor)
        self.phi = len(self.minpoly) - 1
        phi = self.phi
        # x^j reduced mod Phi_N for j = 0 .. max(N, 2 phi - 1)
        top = max(conductor, 2 * phi - 1)
        powers = []
        cur = [1] + [0] * (phi - 1)
        for _ in range(top + 1):
            powers.append(tuple(cur))
            lead = cur[-1]
            cur = [0] + cur[:-1]
            if lead:
                for j in range(phi):
                    cur[j] -= lead * self.minpoly[j]
        self._powers = powers
        self._fold = powers[phi : 2 * phi - 1]
        self.zero = CyclotomicNumber(self, (0,) * phi, 1)
        self.one = CyclotomicNumber(self, (1,) + (0,) * (phi - 1), 1)

    def __repr__(self):
        return f"CyclotomicField({self.conductor})"

    def __reduce__(self):
        return (cyclotomic_field, (self.conductor,))

    def __call__(self, value) -> "CyclotomicNumber":
        """Coerce an int, Fraction, coefficient sequence or element."""
        if isinstance(value, CyclotomicNumber):
            if value.field is self:
                return value
            return embed(value, self)
        if isinstance(value, int):
            return CyclotomicNumber(self, (value,) + (0,) * (self.phi - 1), 1)
        if isinstance(value, Fraction):
            return CyclotomicNumber._make(
                self, (value.numerator,) + (0,) * (self.phi - 1), value.denominator
            )
        return self.from_coeffs(value)

    def from_coeffs(self, coeffs) -> "CyclotomicNumber":
        """Element sum c_j z^j; the sequence may be longer than phi."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        nums = [c.numerator * (den // c.denominator) for c in fr]
        return CyclotomicNumber._make(self, self._reduce(nums), den)

    def _reduce(self, nums):
        phi = self.phi
        if len(nums) <= phi:
            return tuple(nums) + (0,) * (phi - len(nums))
        out = list(nums[:phi])
        for j in range(phi, len(nums)):
            c = nums[j]
            if c:
                p = self._powers[j] if j < len(self._powers) else self._power(j)
                for t in range(phi):
                    if p[t]:
                        out[t] += c * p[t]
        return tuple(out)

    def _power(self, j):
        return self._powers[j % self.conductor]

    def zeta(self, k: int = 1) -> "CyclotomicNumber":
        """zeta_N^k, with k read modulo N."""
        return CyclotomicNumber(self, self._powers[k % self.conductor], 1)

    def is_root_of_unity_power(self, a: "CyclotomicNumber"):
        """Return k with a == zeta^k, or None."""
        for k in range(self.conductor):
            if a.den == 1 and a.num == self._powers[k]:
                return k
        return None


@lru_cache(maxsize=None)
def cyclotomic_field(conductor: int) -> CyclotomicField:
    return CyclotomicField(conductor)


def root_of_unity(field: CyclotomicField | int, k: int) -> "CyclotomicNumber":
    if isinstance(field, int):
        field = cyclotomic_field(field)
    return field.zeta(k)


class CyclotomicNumber:
    """An exact element of Q(zeta_N).

    ``num`` holds integer numerators of the power-basis coordinates and
    ``den`` the common positive denominator, always in lowest terms.
    """

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field, num, den):
        self.field = field
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _make(cls, field, num, den):
        if den < 0:
            num = tuple(-x for x in num)
            den = -den
        g = math.gcd(den, *num)
        if g != 1:
            num = tuple(x // g for x in num)
            den //= g
        return cls(field, num, den)

    # -- inspection ---------------------------------------------------
    @property
    def conductor(self) -> int:
        return self.field.conductor

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self):
        return any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def __int__(self):
        f = self.to_fraction()
        if f.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return f.numerator

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.field is not self.field:
                raise ValueError(
                    f"context mismatch: Q(zeta_{self.field.conductor}) vs "
                    f"Q(zeta_{other.field.conductor})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return CyclotomicNumber._make(
                self.field, tuple(a + b for a, b in zip(self.num, o.num)), self.den
            )
        d1, d2 = self.den, o.den
        return CyclotomicNumber._make(
            self.field, tuple(a * d2 + b * d1 for a, b in zip(self.num, o.num)), d1 * d2
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.field, tuple(-a for a in self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicNumber._make(
                self.field, tuple(a * other for a in self.num), self.den
            )
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        F = self.field
        phi = F.phi
        a, b = self.num, o.num
        if phi == 1:
            return CyclotomicNumber._make(F, (a[0] * b[0],), self.den * o.den)
        prod = [0] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:phi]
        for t, c in enumerate(prod[phi:]):
            if c:
                p = F._fold[t]
                for s in range(phi):
                    if p[s]:
                        out[s] += c * p[s]
        return CyclotomicNumber._make(F, tuple(out), self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        F = self.field
        if F.phi == 1 or self.is_rational():
            return CyclotomicNumber._make(
                F, (self.den,) + (0,) * (F.phi - 1), self.num[0]
            )
        # s * a + t * Phi = gcd (a constant, since Phi is irreducible)
        a = [Fraction(x, self.den) for x in self.num]
        phi_poly = [Fraction(x) for x in F.minpoly]
        r0, r1 = _trim(phi_poly), _trim(a)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, r = _qpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))
        g = r1[0]
        assert g != 0, "cyclotomic polynomial is not irreducible?"
        return F.from_coeffs([c / g for c in s1])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, CyclotomicNumber):
            return (
                self.field.conductor == other.field.conductor
                and self.den == other.den
                and self.num == other.num
            )
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return (
                self.is_rational()
                and self.num[0] == f.numerator
                and self.den == f.denominator
            )
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.field.conductor, self.num, self.den))
        return self._hash

    # -- display / serialization ---------------------------------------
    def __repr__(self):
        return f"CyclotomicNumber({self.field.conductor}, {self})"

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                base = "z" if j == 1 else f"z^{j}"
                if c == 1:
                    terms.append(base)
                elif c == -1:
                    terms.append("-" + base)
                else:
                    terms.append(f"{c}*{base}")
        if not terms:
            return "0"
        s = " + ".join(terms).replace("+ -", "- ")
        return s

    def to_json(self) -> dict:
        return {
            "conductor": self.field.conductor,
            "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs],
        }

    @staticmethod
    def from_json(data: dict) -> "CyclotomicNumber":
        F = cyclotomic_field(int(data["conductor"]))
        coeffs = [Fraction(int(n), int(d)) for n, d in data["coeffs"]]
        if len(coeffs) != F.phi:
            raise ValueError(f"expected {F.phi} coefficients, got {len(coeffs)}")
        return F.from_coeffs(coeffs)


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _qpoly_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [Fraction(0)], _trim(a)
    q = [Fraction(0)] * (len(a) - db)
    lead = b[-1]
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] / lead
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    return _trim(q), _trim(a[:db] or [Fraction(0)])


def _qpoly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _qpoly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def embed(a: CyclotomicNumber, target: CyclotomicField | int) -> CyclotomicNumber:
    """Image of a under zeta_d -> zeta_N^(N/d), where d divides N."""
    if isinstance(target, int):
        target = cyclotomic_field(target)
    d, N = a.field.conductor, target.conductor
    if a.field is target:
        return a
    if a.is_rational():
        return target(a.to_fraction())
    if N % d:
        raise ValueError(f"cannot embed Q(zeta_{d}) into Q(zeta_{N}): {d} does not divide {N}")
    step = N // d
    nums = [0] * N
    for j, c in enumerate(a.num):
        if c:
            nums[(j * step) % N] += c
    return CyclotomicNumber._make(target, target._reduce(nums), a.den)


def common_field(*conductors: int) -> CyclotomicField:
    """The field Q(zeta_lcm) containing all the given cyclotomic fields."""
    return cyclotomic_field(math.lcm(*conductors))
