"""Dense univariate polynomials and Laurent polynomials over F_q."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from . import gf
from .errors import (
    DivisionByZeroPolynomial,
    DuplicateAbscissa,
    FieldMismatch,
    ZeroPolynomial,
)
from .gf import FieldElement, FieldParams


def _trim(coeffs: list[FieldElement]) -> tuple[FieldElement, ...]:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


def _coeff_str(c: FieldElement, with_monomial: bool) -> str:
    s = str(c)
    if c.field.k > 1 and not c.in_prime_field():
        return f"({s})"
    if with_monomial and s == "1":
        return ""
    return s


def _mono(e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return "x"
    return f"x^{e}"


def _format_terms(terms: Iterable[tuple[int, FieldElement]]) -> str:
    out = []
    for e, c in terms:
        out.append(_coeff_str(c, e != 0) + _mono(e))
    return "+".join(out) if out else "0"


class Poly:
    """Polynomial with coefficients low-to-high and no trailing zeros."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldParams, coeffs: Iterable = ()):
        self.field = field
        self.coeffs = _trim([field(c) for c in coeffs])

    @classmethod
    def from_terms(cls, field: FieldParams, terms: Mapping[int, object]) -> "Poly":
        """Build from an ``{exponent: coefficient}`` mapping."""
        if not terms:
            return cls(field)
        c = [0] * (max(terms) + 1)
        for e, v in terms.items():
            c[e] = v
        return cls(field, c)

    @classmethod
    def monomial(cls, field: FieldParams, e: int, c=1) -> "Poly":
        return cls.from_terms(field, {e: c})

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> dict[int, FieldElement]:
        return {i: c for i, c in enumerate(self.coeffs) if c}

    def lead(self) -> FieldElement:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatch(f"{other.field!r} vs {self.field!r}")
            return other
        if isinstance(other, (int, FieldElement)):
            return Poly(self.field, [other])
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return p_add(self, b)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return p_sub(self, b)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return p_sub(b, self)

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return p_mul(self, b)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Poly(self.field, [1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        return p_divrem(self, self._coerce(other))

    def __call__(self, x: FieldElement) -> FieldElement:
        return p_eval(self, x)

    def derivative(self) -> "Poly":
        return p_derivative(self)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __str__(self):
        return _format_terms((i, self.coeffs[i]) for i in range(self.degree, -1, -1)
                             if self.coeffs[i])

    def __repr__(self):
        return f"Poly({self} over {self.field!r})"

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "coeffs": [str(c) for c in self.coeffs]}


def _check(a: Poly, b: Poly) -> None:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")


def p_add(a: Poly, b: Poly) -> Poly:
    _check(a, b)
    n = max(len(a.coeffs), len(b.coeffs))
    z = a.field.zero
    ac = a.coeffs + (z,) * (n - len(a.coeffs))
    bc = b.coeffs + (z,) * (n - len(b.coeffs))
    return Poly(a.field, [x + y for x, y in zip(ac, bc)])


def p_sub(a: Poly, b: Poly) -> Poly:
    return p_add(a, -b)


def p_mul(a: Poly, b: Poly) -> Poly:
    _check(a, b)
    if a.is_zero() or b.is_zero():
        return Poly(a.field)
    out = [a.field.zero] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j, y in enumerate(b.coeffs):
            out[i + j] = out[i + j] + x * y
    return Poly(a.field, out)


def p_eval(a: Poly, x: FieldElement) -> FieldElement:
    """Evaluate at a point of any extension of the coefficient field."""
    target = x.field
    coeffs = a.coeffs if target == a.field else [gf.embed(c, target) for c in a.coeffs]
    acc = target.zero
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def p_derivative(a: Poly) -> Poly:
    return Poly(a.field, [c * i for i, c in enumerate(a.coeffs)][1:])


def p_divrem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    _check(a, b)
    if b.is_zero():
        raise DivisionByZeroPolynomial("division by the zero polynomial")
    rem = list(a.coeffs)
    db = b.degree
    inv_lead = b.lead().inverse()
    quot = [a.field.zero] * max(len(rem) - db, 0)
    while len(rem) - 1 >= db and rem:
        c = rem[-1] * inv_lead
        shift = len(rem) - 1 - db
        quot[shift] = c
        for i, bc in enumerate(b.coeffs):
            rem[shift + i] = rem[shift + i] - c * bc
        rem.pop()
        while rem and not rem[-1]:
            rem.pop()
    return Poly(a.field, quot), Poly(a.field, rem)


def p_interpolate(points: Sequence[tuple[FieldElement, FieldElement]]) -> Poly:
    """The unique polynomial of degree < len(points) through ``points``."""
    if not points:
        raise ValueError("interpolation needs at least one point")
    field = points[0][0].field
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa("interpolation abscissas must be distinct")
    zero = field.zero
    # master polynomial prod (X - x_i), coefficients low-to-high
    master = [field.one]
    for x in xs:
        nxt = [zero] * (len(master) + 1)
        for i, c in enumerate(master):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] - c * x
        master = nxt
    n = len(xs)
    result = [zero] * n
    for x, y in points:
        # synthetic division master / (X - x)
        q = [zero] * n
        carry = zero
        for i in range(n, 0, -1):
            carry = master[i] + carry * x
            q[i - 1] = carry
        denom = zero
        for c in reversed(q):
            denom = denom * x + c
        w = y / denom
        if w:
            for i in range(n):
                result[i] = result[i] + w * q[i]
    return Poly(field, result)


def p_roots(a: Poly, ext_k: int) -> list[FieldElement]:
    """All roots in F_{p^ext_k}, by exhaustive evaluation, in index order."""
    if a.is_zero():
        raise ZeroPolynomial("every element is a root of the zero polynomial")
    target = gf.make_field(a.field.p, ext_k) if ext_k != a.field.k else a.field
    coeffs = [gf.embed(c, target) for c in a.coeffs]
    roots = []
    for x in gf.enumerate_field(target):
        acc = target.zero
        for c in reversed(coeffs):
            acc = acc * x + c
        if not acc:
            roots.append(x)
    return roots


class LaurentPoly:
    """sum_i coeffs[i] * x^(offset + i), with nonzero first and last
    coefficients (the zero polynomial has offset 0 and no coefficients)."""

    __slots__ = ("field", "offset", "coeffs")

    def __init__(self, field: FieldParams, offset: int = 0, coeffs: Iterable = ()):
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        lead = 0
        while lead < len(cs) and not cs[lead]:
            lead += 1
        cs = cs[lead:]
        self.field = field
        self.offset = offset + lead if cs else 0
        self.coeffs = tuple(cs)

    @classmethod
    def from_poly(cls, a: Poly, shift: int = 0) -> "LaurentPoly":
        return cls(a.field, shift, a.coeffs)

    @classmethod
    def from_terms(cls, field: FieldParams, terms: Mapping[int, object]) -> "LaurentPoly":
        if not terms:
            return cls(field)
        lo, hi = min(terms), max(terms)
        c = [0] * (hi - lo + 1)
        for e, v in terms.items():
            c[e - lo] = v
        return cls(field, lo, c)

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> dict[int, FieldElement]:
        return {self.offset + i: c for i, c in enumerate(self.coeffs) if c}

    def support(self) -> list[int]:
        return sorted(self.terms())

    def coefficient(self, e: int) -> FieldElement:
        i = e - self.offset
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def shift(self, n: int) -> "LaurentPoly":
        """Multiply by x^n."""
        return LaurentPoly(self.field, self.offset + n, self.coeffs)

    def numerator(self) -> Poly:
        """The polynomial x^(-offset) * self (no factor of x left over)."""
        return Poly(self.field, self.coeffs)

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.field != self.field:
                raise FieldMismatch(f"{other.field!r} vs {self.field!r}")
            return other
        if isinstance(other, Poly):
            return LaurentPoly.from_poly(other)
        if isinstance(other, (int, FieldElement)):
            return LaurentPoly(self.field, 0, [other])
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return l_add(self, b)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.field, self.offset, [-c for c in self.coeffs])

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return l_add(self, -b)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return l_add(b, -self)

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return l_mul(self, b)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.coeffs) != 1:
                raise ValueError("only monomials have Laurent inverses")
            c = self.coeffs[0].inverse()
            return LaurentPoly(self.field, -self.offset, [c]) ** (-n)
        result = LaurentPoly(self.field, 0, [1])
        for _ in range(n):
            result = result * self
        return result

    def __call__(self, x: FieldElement) -> FieldElement:
        acc = p_eval(self.numerator(), x)
        return acc * x**self.offset

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return (self.field == other.field and self.offset == other.offset
                    and self.coeffs == other.coeffs)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.offset, self.coeffs))

    def __str__(self):
        t = self.terms()
        return _format_terms((e, t[e]) for e in sorted(t, reverse=True))

    def __repr__(self):
        return f"LaurentPoly({self} over {self.field!r})"

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "offset": self.offset,
                "coeffs": [str(c) for c in self.coeffs]}


def l_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    lo = min(a.offset, b.offset)
    hi = max(a.offset + len(a.coeffs), b.offset + len(b.coeffs))
    out = [a.field.zero] * (hi - lo)
    for src in (a, b):
        for i, c in enumerate(src.coeffs):
            out[src.offset - lo + i] = out[src.offset - lo + i] + c
    return LaurentPoly(a.field, lo, out)


def l_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")
    prod = p_mul(a.numerator(), b.numerator())
    return LaurentPoly(a.field, a.offset + b.offset, prod.coeffs)


def laurent_substitute(f: Poly, exponent_scale: int, pre_multiplier: int) -> LaurentPoly:
    """x^pre_multiplier * f(x^exponent_scale)."""
    if exponent_scale == 0:
        raise ValueError("exponent_scale must be nonzero")
    terms = {exponent_scale * i + pre_multiplier: c for i, c in f.terms().items()}
    return LaurentPoly.from_terms(f.field, terms)


def l_equal_up_to_unit(a: LaurentPoly, b: LaurentPoly) -> FieldElement | None:
    """The nonzero scalar c with a == c*b, or None.  Zero matches zero with
    c = 1."""
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")
    if a.is_zero() and b.is_zero():
        return a.field.one
    if a.is_zero() or b.is_zero():
        return None
    if a.offset != b.offset or len(a.coeffs) != len(b.coeffs):
        return None
    c = a.coeffs[0] / b.coeffs[0]
    if all(x == c * y for x, y in zip(a.coeffs, b.coeffs)):
        return c
    return None
