"""Length-2 Witt vectors W_2(F_q).

A Witt vector ``(a0, a1)`` has ghost components ``a0`` and ``a0^p + p*a1``.
Matching ghost components gives the classical laws

    (a0, a1) + (b0, b1) = (a0 + b0, a1 + b1 + S1(a0, b0))
    (a0, a1) * (b0, b1) = (a0*b0, a0^p*b1 + b0^p*a1)

with the carry ``S1(X, Y) = (X^p + Y^p - (X + Y)^p) / p``.  The product has
no carry term at length 2: the ``p*a1*b1`` contribution dies in
characteristic p.  W_2(F_p) is isomorphic to Z/p^2 (see :func:`from_integer`).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import comb

from . import gf
from .errors import ExtensionFieldNotSupported, FieldMismatch, NonUnit
from .gf import FieldElement, FieldParams


@dataclass(frozen=True)
class CarryTable:
    """Coefficients of ``S1(X, Y) = -sum_{i=1}^{p-1} c_i X^i Y^(p-i)``,
    ``c_i = binom(p, i) / p mod p``."""

    p: int
    coeffs: tuple[int, ...]  # c_1 .. c_{p-1}

    def evaluate(self, x, y):
        """Evaluate the carry on any commutative ring of characteristic p
        whose elements accept ``*``, ``**`` and integer scaling."""
        total = None
        for i, c in enumerate(self.coeffs, start=1):
            term = c * (x**i * y ** (self.p - i))
            total = term if total is None else total + term
        return -total


@functools.lru_cache(maxsize=None)
def carry_table(p: int) -> CarryTable:
    coeffs = []
    for i in range(1, p):
        b = comb(p, i)
        assert b % p == 0
        coeffs.append((b // p) % p)
    return CarryTable(p, tuple(coeffs))


@functools.lru_cache(maxsize=None)
def _carry_ratio_table(field: FieldParams) -> list[int]:
    """Index table of h(t) = sum c_i t^i, so that S1(x, y) = -y^p h(x/y)."""
    ct = carry_table(field.p)
    out = []
    for t in gf.enumerate_field(field):
        acc = field.zero
        for c in reversed(ct.coeffs):
            acc = (acc + c) * t
        out.append(acc.index)
    return out


class W2Element:
    __slots__ = ("a0", "a1")

    def __init__(self, a0: FieldElement, a1: FieldElement):
        if a0.field != a1.field:
            raise FieldMismatch("Witt components live in different fields")
        self.a0 = a0
        self.a1 = a1

    @property
    def field(self) -> FieldParams:
        return self.a0.field

    def _coerce(self, other) -> "W2Element":
        if isinstance(other, W2Element):
            if other.a0.field is not self.a0.field and other.a0.field != self.a0.field:
                raise FieldMismatch(f"{other.field!r} vs {self.field!r}")
            return other
        if isinstance(other, int):
            return int_to_w2(other, self.field)
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return W2Element(self.a0 + b.a0, self.a1 + b.a1 + carry(self.a0, b.a0))

    __radd__ = __add__

    def __neg__(self):
        return W2Element(-self.a0, -self.a1)

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self + (-b)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return b + (-self)

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        a0, a1, b0, b1 = self.a0, self.a1, b.a0, b.a1
        return W2Element(a0 * b0, a0.frobenius() * b1 + b0.frobenius() * a1)

    __rmul__ = __mul__

    def inverse(self) -> "W2Element":
        if not self.a0:
            raise NonUnit(f"{self} is not a unit")
        p = self.field.p
        i0 = self.a0.inverse()
        return W2Element(i0, -self.a1 * i0 ** (2 * p))

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self * b.inverse()

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return b * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = W2Element(self.field.one, self.field.zero)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def is_unit(self) -> bool:
        return bool(self.a0)

    def is_zero(self) -> bool:
        return not self.a0 and not self.a1

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, W2Element):
            return self.a0 == other.a0 and self.a1 == other.a1
        if isinstance(other, int):
            return self == int_to_w2(other, self.field)
        return NotImplemented

    def __hash__(self):
        return hash((self.a0, self.a1))

    def sort_key(self) -> tuple[int, int]:
        return (self.a0.index, self.a1.index)

    def __str__(self):
        return f"({self.a0}, {self.a1})"

    __repr__ = __str__


def carry(x: FieldElement, y: FieldElement) -> FieldElement:
    """S1(x, y) in F_q."""
    f = x.field
    if not x.index or not y.index:
        return f.zero
    h = _carry_ratio_table(f)[f._mul(x.index, f._inv(y.index))]
    yp = y.index if f.k == 1 else f._frob[y.index]
    return f.element(f._neg[f._mul(yp, h)])


def _check_same(a: W2Element, b: W2Element) -> None:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")


def w_add(a: W2Element, b: W2Element) -> W2Element:
    _check_same(a, b)
    return a + b


def w_mul(a: W2Element, b: W2Element) -> W2Element:
    _check_same(a, b)
    return a * b


def w_neg(a: W2Element) -> W2Element:
    return -a


def w_inv(a: W2Element) -> W2Element:
    return a.inverse()


def w_pow(a: W2Element, n: int) -> W2Element:
    if n < 0:
        raise ValueError("w_pow takes a nonnegative exponent")
    return a**n


def teich(a: FieldElement) -> W2Element:
    return W2Element(a, a.field.zero)


def ver(a: FieldElement) -> W2Element:
    return W2Element(a.field.zero, a)


def reduce(w: W2Element) -> FieldElement:
    return w.a0


def w_frobenius(w: W2Element) -> W2Element:
    p = w.field.p
    return W2Element(w.a0**p, w.a1**p)


def int_to_w2(n: int, field: FieldParams) -> W2Element:
    """Image of the integer n in W_2(F_q) (through W_2(F_p) = Z/p^2)."""
    p = field.p
    r = n % p
    return W2Element(field(r), field(((n - r**p) // p) % p))


def from_integer(n: int, field: FieldParams) -> W2Element:
    if field.k != 1:
        raise ExtensionFieldNotSupported("W_2(F_p) = Z/p^2 needs a prime field")
    return int_to_w2(n, field)


def to_integer(w: W2Element) -> int:
    """Inverse of :func:`from_integer`, as a residue in [0, p^2)."""
    if w.field.k != 1:
        raise ExtensionFieldNotSupported("W_2(F_p) = Z/p^2 needs a prime field")
    p = w.field.p
    a0, a1 = w.a0.index, w.a1.index
    return (a0**p + p * a1) % (p * p)


def enumerate_w2(field: FieldParams) -> list[W2Element]:
    gf.check_size(field.q**2)
    elems = gf.enumerate_field(field)
    return [W2Element(a0, a1) for a0 in elems for a1 in elems]


def embed_w2(w: W2Element, target: FieldParams) -> W2Element:
    """Componentwise field embedding; a ring map by functoriality."""
    return W2Element(gf.embed(w.a0, target), gf.embed(w.a1, target))


def restrict_w2(w: W2Element, source: FieldParams) -> W2Element:
    return W2Element(gf.restrict(w.a0, source), gf.restrict(w.a1, source))


# symbolic laws ----------------------------------------------------------
# The same formulas over an arbitrary ring of characteristic p (polynomials,
# Laurent polynomials), for expanding Witt products symbolically.

def witt_mul_parts(a, b, p: int):
    (a0, a1), (b0, b1) = a, b
    return (a0 * b0, a0**p * b1 + b0**p * a1)


def witt_add_parts(a, b, p: int):
    (a0, a1), (b0, b1) = a, b
    return (a0 + b0, a1 + b1 + carry_table(p).evaluate(a0, b0))
