"""Exact arithmetic in small finite fields F_{p^k}.

An element of F_{p^k} = F_p[t]/(m(t)) is stored by its *index*
``c0 + c1*p + ... + c_{k-1}*p^{k-1}`` where ``c0..c_{k-1}`` are its
coefficients (low to high).  Index order is the enumeration order used
everywhere in the package, so the prime subfield comes first.

Elements are interned per field: arithmetic works on indices through
lookup tables (log / antilog / Zech logarithms for k > 1) and hands back
the shared element objects.
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterable, Sequence

from .errors import (
    DegreeOutOfRange,
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    NotPrime,
    ReducibleModulus,
)

MAX_PRIME = 97
MAX_DEGREE = 4
# Upper bound on q for anything that walks the whole field.  Read at call
# time so the CLI can lower or raise it.
FIELD_SIZE_CEILING = 10**6


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_rem(a: list[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` by the monic polynomial ``m`` over F_p."""
    a = _trim([x % p for x in a])
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1]
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _is_irreducible(m: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(m)/2."""
    k = len(m) - 1
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_rem(list(m), list(low) + [1], p):
                return False
    return True


def _check_prime(p: int) -> None:
    if not isinstance(p, int) or p % 2 == 0 or not is_prime(p):
        raise NotPrime(f"{p!r} is not an odd prime")
    if p > MAX_PRIME:
        raise NotPrime(f"p={p} exceeds the configured ceiling {MAX_PRIME}")


class FieldParams:
    """The field F_p[t]/(modulus).  Build instances with :func:`make_field`."""

    def __init__(self, p: int, k: int, modulus: Sequence[int]):
        self.p = p
        self.k = k
        self.modulus = tuple(modulus)
        self.q = p**k
        self._built = False

    # identity ---------------------------------------------------------
    def _key(self):
        return (self.p, self.k, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldParams) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k}; {_format_modulus(self.modulus)})"

    def to_json(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}

    # tables -----------------------------------------------------------
    def _build(self) -> None:
        if self._built:
            return
        p, k, q = self.p, self.k, self.q
        self._digits = [tuple((n // p**i) % p for i in range(k)) for n in range(q)]
        self._elems = [FieldElement(self, n) for n in range(q)]
        self._neg = [self._index([(-c) % p for c in d]) for d in self._digits]
        if k > 1:
            self._build_logs()
            self._frob = [self._pow(n, p) for n in range(q)]
        roots: dict[int, int] = {}
        for b in range(q):
            roots.setdefault(self._mul(b, b), b)
        self._sqrt = roots
        self._built = True

    def _index(self, coeffs: Sequence[int]) -> int:
        n = 0
        for c in reversed(coeffs):
            n = n * self.p + c
        return n

    def _build_logs(self) -> None:
        p, q = self.p, self.q
        order = q - 1
        for g in range(p, q):
            gc = list(self._digits[g])
            exp = [1]
            cur = [1]
            while True:
                prod = [0] * (2 * self.k - 1)
                for i, ci in enumerate(cur):
                    if ci:
                        for j, gj in enumerate(gc):
                            prod[i + j] += ci * gj
                cur = _poly_rem(prod, self.modulus, p)
                n = self._index(cur)
                if n == 1:
                    break
                exp.append(n)
            if len(exp) == order:
                break
        else:  # pragma: no cover - every finite field has a generator
            raise RuntimeError("no primitive element found")
        log = [-1] * q
        for i, n in enumerate(exp):
            log[n] = i
        zech = []
        for n in exp:
            c0 = n % p
            m = n - c0 + (c0 + 1) % p
            zech.append(log[m] if m else -1)
        self._exp, self._log, self._zech = exp, log, zech

    # raw index arithmetic ---------------------------------------------
    def _add(self, n: int, m: int) -> int:
        if self.k == 1:
            r = n + m
            return r - self.p if r >= self.p else r
        if n == 0:
            return m
        if m == 0:
            return n
        log = self._log
        ln = log[n]
        d = log[m] - ln
        if d < 0:
            d += self.q - 1
        z = self._zech[d]
        if z < 0:
            return 0
        return self._exp[(ln + z) % (self.q - 1)]

    def _mul(self, n: int, m: int) -> int:
        if self.k == 1:
            return n * m % self.p
        if n == 0 or m == 0:
            return 0
        return self._exp[(self._log[n] + self._log[m]) % (self.q - 1)]

    def _inv(self, n: int) -> int:
        if n == 0:
            raise DivisionByZero(f"inverse of zero in {self!r}")
        if self.k == 1:
            return pow(n, -1, self.p)
        return self._exp[(-self._log[n]) % (self.q - 1)]

    def _pow(self, n: int, e: int) -> int:
        if n == 0:
            if e < 0:
                raise DivisionByZero(f"zero to a negative power in {self!r}")
            return 1 if e == 0 else 0
        if self.k == 1:
            return pow(n, e, self.p)
        return self._exp[(self._log[n] * e) % (self.q - 1)]

    # element construction ---------------------------------------------
    def element(self, index: int) -> "FieldElement":
        self._build()
        return self._elems[index]

    def __call__(self, value) -> "FieldElement":
        """Coerce an int (prime-field constant), a coefficient sequence or an
        element of this field."""
        self._build()
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"{value!r} is not in {self!r}")
            return self._elems[value.index]
        if isinstance(value, int):
            return self._elems[value % self.p]
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.k:
            raise ValueError(f"too many coefficients for {self!r}")
        return self._elems[self._index(coeffs)]

    @property
    def zero(self) -> "FieldElement":
        return self.element(0)

    @property
    def one(self) -> "FieldElement":
        return self.element(1)

    @property
    def gen(self) -> "FieldElement":
        """The class of t."""
        return self.element(self.p if self.k > 1 else 0)


def _format_modulus(m: Sequence[int]) -> str:
    terms = []
    for i in range(len(m) - 1, -1, -1):
        c = m[i]
        if c == 0:
            continue
        mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        if mono and c == 1:
            terms.append(mono)
        elif mono:
            terms.append(f"{c}*{mono}")
        else:
            terms.append(str(c))
    return "+".join(terms)


class FieldElement:
    __slots__ = ("field", "index")

    def __init__(self, field: FieldParams, index: int):
        self.field = field
        self.index = index

    def _other(self, other) -> int:
        if type(other) is FieldElement:
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"{other.field!r} vs {self.field!r}")
            return other.index
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def _wrap(self, n: int) -> "FieldElement":
        return self.field._elems[n]

    def __add__(self, other):
        m = self._other(other)
        if m is NotImplemented:
            return m
        return self._wrap(self.field._add(self.index, m))

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(self.field._neg[self.index])

    def __sub__(self, other):
        m = self._other(other)
        if m is NotImplemented:
            return m
        f = self.field
        return self._wrap(f._add(self.index, f._neg[m]))

    def __rsub__(self, other):
        m = self._other(other)
        if m is NotImplemented:
            return m
        f = self.field
        return self._wrap(f._add(m, f._neg[self.index]))

    def __mul__(self, other):
        m = self._other(other)
        if m is NotImplemented:
            return m
        return self._wrap(self.field._mul(self.index, m))

    __rmul__ = __mul__

    def __truediv__(self, other):
        m = self._other(other)
        if m is NotImplemented:
            return m
        f = self.field
        return self._wrap(f._mul(self.index, f._inv(m)))

    def __rtruediv__(self, other):
        m = self._other(other)
        if m is NotImplemented:
            return m
        f = self.field
        return self._wrap(f._mul(m, f._inv(self.index)))

    def __pow__(self, e: int):
        return self._wrap(self.field._pow(self.index, e))

    def inverse(self) -> "FieldElement":
        return self._wrap(self.field._inv(self.index))

    def frobenius(self) -> "FieldElement":
        f = self.field
        if f.k == 1:
            return self
        return self._wrap(f._frob[self.index])

    def sqrt(self) -> "FieldElement | None":
        n = self.field._sqrt.get(self.index)
        return None if n is None else self._wrap(n)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field._digits[self.index]

    def is_zero(self) -> bool:
        return self.index == 0

    def in_prime_field(self) -> bool:
        return self.index < self.field.p

    def __bool__(self):
        return self.index != 0

    def __eq__(self, other):
        if type(other) is FieldElement:
            return self.index == other.index and self.field == other.field
        if isinstance(other, int):
            return self.index == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.index))

    def __str__(self):
        c = self.coeffs
        if self.field.k == 1:
            return str(c[0])
        terms = []
        for i, ci in enumerate(c):
            if ci == 0:
                continue
            if i == 0:
                terms.append(str(ci))
            elif i == 1:
                terms.append(f"{ci}*t")
            else:
                terms.append(f"{ci}*t^{i}")
        return "+".join(terms) if terms else "0"

    def __repr__(self):
        return f"{self}@{self.field!r}"


@functools.lru_cache(maxsize=None)
def _make_field(p: int, k: int, modulus: tuple[int, ...] | None) -> FieldParams:
    _check_prime(p)
    if not isinstance(k, int) or not 1 <= k <= MAX_DEGREE:
        raise DegreeOutOfRange(f"k={k!r} outside 1..{MAX_DEGREE}")
    if modulus is None:
        for low in itertools.product(range(p), repeat=k):
            cand = low + (1,)
            if _is_irreducible(cand, p):
                modulus = cand
                break
    else:
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ReducibleModulus(f"modulus {modulus} is not monic of degree {k}")
        if not _is_irreducible(modulus, p):
            raise ReducibleModulus(f"{_format_modulus(modulus)} is reducible mod {p}")
    return FieldParams(p, k, modulus)


def make_field(p: int, k: int = 1, modulus: Iterable[int] | None = None) -> FieldParams:
    """Return F_{p^k}.

    Without ``modulus`` the lexicographically smallest monic irreducible
    (compared low-to-high) is used, so the same call always gives the same
    field.
    """
    return _make_field(p, k, None if modulus is None else tuple(modulus))


def _check_same(a: FieldElement, b: FieldElement) -> None:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def power(a: FieldElement, n: int) -> FieldElement:
    return a**n


def frobenius(a: FieldElement) -> FieldElement:
    return a.frobenius()


def sqrt(a: FieldElement) -> FieldElement | None:
    """First square root of ``a`` in enumeration order, or None."""
    return a.sqrt()


def check_size(q: int) -> None:
    if q > FIELD_SIZE_CEILING:
        raise FieldTooLarge(f"q={q} exceeds the enumeration ceiling {FIELD_SIZE_CEILING}")


def enumerate_field(params: FieldParams) -> list[FieldElement]:
    """All q elements, in index order."""
    check_size(params.q)
    params._build()
    return list(params._elems)


def units(params: FieldParams) -> list[FieldElement]:
    return enumerate_field(params)[1:]


# embeddings -----------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _embedding_image(src: FieldParams, dst: FieldParams) -> tuple[int, ...]:
    if src.p != dst.p or dst.k % src.k:
        raise FieldMismatch(f"{src!r} does not embed in {dst!r}")
    if src.k == 1:
        return tuple(range(src.p))
    # image of t: the first root of src.modulus in dst
    root = None
    for r in enumerate_field(dst):
        acc = dst.zero
        for c in reversed(src.modulus):
            acc = acc * r + c
        if acc.is_zero():
            root = r
            break
    assert root is not None
    powers = [dst.one]
    for _ in range(src.k - 1):
        powers.append(powers[-1] * root)
    src._build()
    image = []
    for d in src._digits:
        acc = dst.zero
        for c, pw in zip(d, powers):
            acc = acc + pw * c
        image.append(acc.index)
    return tuple(image)


def embed(a: FieldElement, target: FieldParams) -> FieldElement:
    """Image of ``a`` under the fixed embedding of its field into ``target``."""
    if a.field == target:
        return target.element(a.index)
    if a.field.k == 1:
        if a.field.p != target.p:
            raise FieldMismatch(f"{a.field!r} does not embed in {target!r}")
        return target.element(a.index)
    return target.element(_embedding_image(a.field, target)[a.index])


@functools.lru_cache(maxsize=None)
def _restriction(src: FieldParams, dst: FieldParams) -> dict[int, int]:
    return {m: n for n, m in enumerate(_embedding_image(src, dst))}


def restrict(b: FieldElement, source: FieldParams) -> FieldElement:
    """Preimage of ``b`` under :func:`embed` from ``source``; ValueError if none."""
    if b.field == source:
        return source.element(b.index)
    if source.k == 1:
        if b.index >= source.p:
            raise ValueError(f"{b} is not in {source!r}")
        return source.element(b.index)
    n = _restriction(source, b.field).get(b.index)
    if n is None:
        raise ValueError(f"{b} is not in the image of {source!r}")
    return source.element(n)
