"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are residues modulo the N-th cyclotomic polynomial Phi_N, stored as
tuples of ``Fraction`` coefficients of length phi(N) in the power basis
1, zeta, ..., zeta^{phi(N)-1}.  Reduction mod Phi_N is the canonical form, so
equality is a coefficient comparison.  All operations are exact; nothing is
ever rounded.

Fields are interned per modulus (``CycField.get(N)``) and every value is
immutable, so scalars can be shared freely.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

from .errors import FieldMismatch, ParseError

Q0 = Fraction(0)
Q1 = Fraction(1)


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def _poly_trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a: Sequence, b: Sequence) -> list:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y != 0:
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod_exact(num: Sequence, den: Sequence) -> list:
    """Exact quotient of integer polynomials known to divide evenly."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = num[k + len(den) - 1]
        if c % den[-1] != 0:
            raise ArithmeticError("non-exact cyclotomic division")
        c //= den[-1]
        q[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    if any(num):
        raise ArithmeticError("non-exact cyclotomic division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple:
    """Integer coefficients of Phi_n, little-endian."""
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _poly_mul(den, cyclotomic_poly(d))
    return tuple(_poly_divmod_exact(num, den))


class CycField:
    """The field Q(zeta_N), with precomputed reduction data."""

    _cache: dict = {}

    def __new__(cls, modulus: int):
        if modulus < 1:
            raise ParseError("cyclotomic modulus must be a positive integer", modulus=modulus)
        if modulus in cls._cache:
            return cls._cache[modulus]
        self = super().__new__(cls)
        self.modulus = modulus
        phi = cyclotomic_poly(modulus)
        self.degree = len(phi) - 1
        # x^k mod Phi_N for k up to 2*(degree-1); row k holds the residue.
        rows = [[Q0] * self.degree for _ in range(2 * self.degree - 1)]
        for k in range(self.degree):
            rows[k][k] = Q1
        top = [Fraction(-c, phi[-1]) for c in phi[:-1]]
        for k in range(self.degree, 2 * self.degree - 1):
            prev = rows[k - 1]
            shifted = [Q0] + prev[:-1]
            lead = prev[-1]
            if lead:
                shifted = [shifted[i] + lead * top[i] for i in range(self.degree)]
            rows[k] = shifted
        self._reduction = tuple(tuple(r) for r in rows)
        self.zero = CycScalar(self, (Q0,) * self.degree)
        self.one = self.rational(1)
        cls._cache[modulus] = self
        return self

    @staticmethod
    def get(modulus: int) -> "CycField":
        return CycField(modulus)

    def rational(self, value) -> "CycScalar":
        coeffs = [Q0] * self.degree
        coeffs[0] = Fraction(value)
        return CycScalar(self, tuple(coeffs))

    def zeta(self, power: int = 1) -> "CycScalar":
        power %= self.modulus
        poly = [Q0] * (power + 1)
        poly[power] = Q1
        return self.from_poly(poly)

    def from_poly(self, poly: Sequence) -> "CycScalar":
        """Canonical reduction of a polynomial in zeta_N (little-endian)."""
        coeffs = [Q0] * self.degree
        for k, c in enumerate(poly):
            c = Fraction(c)
            if c == 0:
                continue
            k %= self.modulus
            if k < self.degree:
                coeffs[k] += c
            else:
                row = self._residue(k)
                for i in range(self.degree):
                    if row[i]:
                        coeffs[i] += c * row[i]
        return CycScalar(self, tuple(coeffs))

    def _residue(self, k: int) -> tuple:
        # Residue of x^k mod Phi_N for k < modulus; extend the table on demand.
        if k < len(self._reduction):
            return self._reduction[k]
        rows = list(self._reduction)
        phi = cyclotomic_poly(self.modulus)
        top = [Fraction(-c, phi[-1]) for c in phi[:-1]]
        while len(rows) <= k:
            prev = rows[-1]
            shifted = [Q0] + list(prev[:-1])
            lead = prev[-1]
            if lead:
                shifted = [shifted[i] + lead * top[i] for i in range(self.degree)]
            rows.append(tuple(shifted))
        self._reduction = tuple(rows)
        return self._reduction[k]

    def __repr__(self):
        return f"CycField({self.modulus})"


class CycScalar:
    """An element of Q(zeta_N) in canonical form."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: CycField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs
        self._hash = None

    def _check(self, other: "CycScalar"):
        if self.field is not other.field:
            raise FieldMismatch(
                "scalars live in different cyclotomic fields; promote first",
                left=self.field.modulus,
                right=other.field.modulus,
            )

    def __add__(self, other):
        other = _coerce(other, self.field)
        self._check(other)
        return CycScalar(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-_coerce(other, self.field))

    def __rsub__(self, other):
        return _coerce(other, self.field) - self

    def __mul__(self, other):
        other = _coerce(other, self.field)
        self._check(other)
        d = self.field.degree
        out = [Q0] * d
        red = self.field._reduction
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                k = i + j
                c = a * b
                if k < d:
                    out[k] += c
                else:
                    row = red[k]
                    for t in range(d):
                        if row[t]:
                            out[t] += c * row[t]
        return CycScalar(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic scalar")
        # Extended Euclid in Q[x] against Phi_N.
        phi = [Fraction(c) for c in cyclotomic_poly(self.field.modulus)]
        r0, r1 = phi, _poly_trim(list(self.coeffs))
        s0, s1 = [], [Q1]
        while True:
            r1 = _poly_trim(r1)
            if len(r1) == 1:
                inv = [c / r1[0] for c in s1]
                return self.field.from_poly(inv)
            q, rem = _qpoly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _qpoly_sub(s0, _poly_mul(q, s1))

    def __truediv__(self, other):
        other = _coerce(other, self.field)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other, self.field) / self

    def conj(self) -> "CycScalar":
        """Image under zeta_N -> zeta_N^{N-1} (complex conjugation)."""
        n = self.field.modulus
        poly = [Q0] * n
        for k, c in enumerate(self.coeffs):
            if c != 0:
                poly[(k * (n - 1)) % n] += c
        return self.field.from_poly(poly)

    def embed(self, modulus: int) -> "CycScalar":
        """Re-express in Q(zeta_M) via zeta_N -> zeta_M^{M/N}; requires N | M."""
        n = self.field.modulus
        if modulus % n != 0:
            raise ParseError("embedding requires the source modulus to divide the target",
                             source=n, target=modulus)
        target = CycField.get(modulus)
        step = modulus // n
        poly = [Q0] * ((self.field.degree - 1) * step + 1 or 1)
        for k, c in enumerate(self.coeffs):
            if c != 0:
                poly[k * step] += c
        return target.from_poly(poly)

    def real_part(self) -> "CycScalar":
        return (self + self.conj()) * self.field.rational(Fraction(1, 2))

    def imag_is_zero(self) -> bool:
        return self == self.conj()

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ParseError("scalar is not rational", coeffs=[str(c) for c in self.coeffs])
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.rational(other)
        if not isinstance(other, CycScalar):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.modulus, self.coeffs))
        return self._hash

    def __repr__(self):
        return f"CycScalar(N={self.field.modulus}, {self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                z = f"z{self.field.modulus}" + (f"^{k}" if k > 1 else "")
                if c == 1:
                    parts.append(z)
                elif c == -1:
                    parts.append(f"-{z}")
                else:
                    parts.append(f"{c}*{z}")
        return " + ".join(parts).replace("+ -", "- ")


def _coerce(value, field: CycField) -> CycScalar:
    if isinstance(value, CycScalar):
        return value
    if isinstance(value, (int, Fraction)):
        return field.rational(value)
    raise TypeError(f"cannot coerce {type(value).__name__} into {field!r}")


def _qpoly_divmod(a: list, b: list):
    a = list(a)
    q = [Q0] * max(len(a) - len(b) + 1, 0)
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1] / b[-1]
        q[k] = c
        if c:
            for j, d in enumerate(b):
                a[k + j] -= c * d
    return _poly_trim(q), _poly_trim(a)


def _qpoly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else Q0) - (b[i] if i < len(b) else Q0) for i in range(n)]
    return _poly_trim(out)


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)
