"""Elliptic curves y^2 = x^3 + a x + b over F_q, over W_2(F_q) and over Q,
plus the quartic model y^2 = q(x) used for point enumeration.

Over W_2(F_q) points are projective triples and the group law is total.
It uses two addition laws of bidegree (2, 2) from the three-dimensional
space of such laws on a short Weierstrass cubic:

* ``_law_y`` (the law attached to the line Y = 0) is exceptional exactly
  at pairs with P - Q a nonzero 2-torsion point;
* ``_law_z`` (attached to Z = 0) is exceptional exactly on the diagonal.

A law's value at (P, Q) reduces to its value at the reductions, so at least
one of the two outputs has a unit coordinate and represents P + Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import gf
from .errors import FieldMismatch, PointNotOnCurve, SingularCurve
from .gf import FieldElement, FieldParams
from .witt2 import W2Element, embed_w2, int_to_w2, teich, ver


# ---------------------------------------------------------------- over F_q

@dataclass(frozen=True)
class CurveFq:
    field: FieldParams
    a: FieldElement
    b: FieldElement

    def __post_init__(self):
        if not (4 * self.a**3 + 27 * self.b**2):
            raise SingularCurve(f"y^2 = x^3 + {self.a}x + {self.b} is singular")

    @classmethod
    def from_ints(cls, field: FieldParams, a: int, b: int) -> "CurveFq":
        return cls(field, field(a), field(b))

    def rhs(self, x: FieldElement) -> FieldElement:
        return (x * x + self.a) * x + self.b

    def contains(self, P: "PointFq") -> bool:
        if P.x is None:
            return True
        if P.x.field != self.field or P.y.field != self.field:
            return False
        return P.y * P.y == self.rhs(P.x)

    def base_change(self, field: FieldParams) -> "CurveFq":
        return CurveFq(field, gf.embed(self.a, field), gf.embed(self.b, field))

    def __str__(self):
        return f"y^2 = x^3 + ({self.a})x + ({self.b}) over {self.field!r}"


@dataclass(frozen=True)
class PointFq:
    """Affine point, or the point at infinity when ``x`` is None."""

    x: FieldElement | None = None
    y: FieldElement | None = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def to_json(self):
        if self.x is None:
            return "infinity"
        return {"x": str(self.x), "y": str(self.y)}

    def __str__(self):
        return "O" if self.x is None else f"({self.x}, {self.y})"


INFINITY = PointFq()


def _require_fq(curve: CurveFq, *points: PointFq) -> None:
    for P in points:
        if not curve.contains(P):
            raise PointNotOnCurve(f"{P} is not on {curve}")


def _add_fq(curve: CurveFq, P: PointFq, Q: PointFq) -> PointFq:
    if P.x is None:
        return Q
    if Q.x is None:
        return P
    if P.x == Q.x:
        if P.y != Q.y or not P.y:
            return INFINITY
        lam = (3 * P.x * P.x + curve.a) / (2 * P.y)
    else:
        lam = (Q.y - P.y) / (Q.x - P.x)
    x3 = lam * lam - P.x - Q.x
    return PointFq(x3, lam * (P.x - x3) - P.y)


def ec_add_fq(curve: CurveFq, P: PointFq, Q: PointFq) -> PointFq:
    _require_fq(curve, P, Q)
    return _add_fq(curve, P, Q)


def ec_neg_fq(curve: CurveFq, P: PointFq) -> PointFq:
    _require_fq(curve, P)
    return P if P.x is None else PointFq(P.x, -P.y)


def _smul_fq(curve: CurveFq, n: int, P: PointFq) -> PointFq:
    if n < 0:
        n, P = -n, (P if P.x is None else PointFq(P.x, -P.y))
    acc, base = INFINITY, P
    while n:
        if n & 1:
            acc = _add_fq(curve, acc, base)
        n >>= 1
        if n:
            base = _add_fq(curve, base, base)
    return acc


def ec_smul_fq(curve: CurveFq, n: int, P: PointFq) -> PointFq:
    _require_fq(curve, P)
    return _smul_fq(curve, n, P)


def point_order_fq(curve: CurveFq, P: PointFq) -> int:
    """Order by repeated addition."""
    _require_fq(curve, P)
    n, R = 1, P
    while R.x is not None:
        R = _add_fq(curve, R, P)
        n += 1
    return n


def enumerate_points_fq(curve: CurveFq) -> list[PointFq]:
    """Affine points by x in index order (root from gf.sqrt first, then its
    negative), then the point at infinity."""
    pts = []
    for x in gf.enumerate_field(curve.field):
        s = curve.rhs(x).sqrt()
        if s is None:
            continue
        pts.append(PointFq(x, s))
        if s:
            pts.append(PointFq(x, -s))
    pts.append(INFINITY)
    return pts


def two_torsion_abscissas(curve: CurveFq) -> list[FieldElement]:
    return [x for x in gf.enumerate_field(curve.field) if not curve.rhs(x)]


# ------------------------------------------------------------ over W_2(F_q)

@dataclass(frozen=True)
class CurveW2:
    a: W2Element
    b: W2Element

    def __post_init__(self):
        if self.a.field != self.b.field:
            raise FieldMismatch("curve coefficients in different rings")
        self.reduction()  # nonsingular reduction or SingularCurve

    @classmethod
    def from_ints(cls, field: FieldParams, a: int, b: int) -> "CurveW2":
        return cls(int_to_w2(a, field), int_to_w2(b, field))

    @property
    def field(self) -> FieldParams:
        return self.a.field

    def reduction(self) -> CurveFq:
        return CurveFq(self.field, self.a.a0, self.b.a0)

    def base_change(self, field: FieldParams) -> "CurveW2":
        return CurveW2(embed_w2(self.a, field), embed_w2(self.b, field))

    def rhs(self, x: W2Element) -> W2Element:
        return (x * x + self.a) * x + self.b

    def contains(self, P: "PointW2") -> bool:
        if P.X.field != self.field:
            return False
        X, Y, Z = P.X, P.Y, P.Z
        ZZ = Z * Z
        return Y * Y * Z == X * X * X + self.a * X * ZZ + self.b * ZZ * Z

    def __str__(self):
        return f"y^2 = x^3 + {self.a}x + {self.b} over W2({self.field!r})"


class PointW2:
    """Normalized projective point: Z = 1 when Z is a unit, otherwise
    Y = 1 (and then X, Z lie in the maximal ideal)."""

    __slots__ = ("X", "Y", "Z")

    def __init__(self, X: W2Element, Y: W2Element, Z: W2Element):
        self.X, self.Y, self.Z = X, Y, Z

    @classmethod
    def from_projective(cls, X: W2Element, Y: W2Element, Z: W2Element) -> "PointW2":
        if Z.a0:
            zi = Z.inverse()
            return cls(X * zi, Y * zi, int_to_w2(1, Z.field))
        if Y.a0:
            yi = Y.inverse()
            return cls(X * yi, int_to_w2(1, Y.field), Z * yi)
        raise PointNotOnCurve(f"({X} : {Y} : {Z}) has no admissible normalization")

    @classmethod
    def affine(cls, x: W2Element, y: W2Element) -> "PointW2":
        return cls(x, y, int_to_w2(1, x.field))

    @classmethod
    def identity(cls, field: FieldParams) -> "PointW2":
        z = field.zero
        return cls(W2Element(z, z), W2Element(field.one, z), W2Element(z, z))

    @property
    def field(self) -> FieldParams:
        return self.X.field

    def is_identity(self) -> bool:
        return self.Z.is_zero() and self.X.is_zero()

    def is_affine(self) -> bool:
        return self.Z.is_unit()

    def in_kernel(self) -> bool:
        """True when the point reduces to the identity."""
        return not self.Z.a0

    def xy(self) -> tuple[W2Element, W2Element]:
        if not self.is_affine():
            raise ValueError(f"{self} is not affine")
        return self.X, self.Y

    def _key(self):
        return (self.X.sort_key(), self.Y.sort_key(), self.Z.sort_key())

    def sort_key(self):
        # affine points first, by (x, y); then the kernel of reduction
        return (0 if self.is_affine() else 1, self.X.sort_key(), self.Y.sort_key())

    def __eq__(self, other):
        if not isinstance(other, PointW2):
            return NotImplemented
        return (self.X == other.X and self.Y == other.Y and self.Z == other.Z)

    def __hash__(self):
        return hash((self.X, self.Y, self.Z))

    def __str__(self):
        return f"({self.X} : {self.Y} : {self.Z})"

    __repr__ = __str__

    def to_json(self) -> list[str]:
        return [str(self.X), str(self.Y), str(self.Z)]


def _law_y(a, b3, a2, three, P, Q):
    X1, Y1, Z1 = P
    X2, Y2, Z2 = Q
    xz = X1 * Z2 + X2 * Z1
    zz = Z1 * Z2
    yy = Y1 * Y2
    xx = X1 * X2
    A = X1 * Y2 + X2 * Y1
    B = yy - a * xz - b3 * zz
    C = Y1 * Z2 + Y2 * Z1
    D = a * xx + b3 * xz - a2 * zz
    E = yy + a * xz + b3 * zz
    F = three * xx + a * zz
    return (A * B - C * D, E * B + F * D, C * E + A * F)


def _law_z(a, b3, two, three, P, Q):
    X1, Y1, Z1 = P
    X2, Y2, Z2 = Q
    x1z2 = X1 * Z2
    x2z1 = X2 * Z1
    y1z2 = Y1 * Z2
    y2z1 = Y2 * Z1
    x1y2 = X1 * Y2
    x2y1 = X2 * Y1
    xx = X1 * X2
    yy = Y1 * Y2
    zz = Z1 * Z2
    D = x1z2 - x2z1
    E = x1y2 - x2y1
    G = y1z2 - y2z1
    X3 = (a * (x1z2 + x2z1) + b3 * zz - two * yy) * D - x1y2 * y2z1 + x2y1 * y1z2
    Y3 = ((three * xx + two * a * zz) * E - a * (x1z2 * y1z2 - x2z1 * y2z1)
          + (yy - b3 * zz) * G)
    Z3 = (y1z2 + y2z1) * G - (three * xx + a * zz) * D
    return (X3, Y3, Z3)


def _constants(curve: CurveW2):
    f = curve.field
    three = int_to_w2(3, f)
    return (curve.a, three * curve.b, curve.a * curve.a, int_to_w2(2, f), three)


_CONST_CACHE: dict = {}


def _add_w2(curve: CurveW2, P: PointW2, Q: PointW2) -> PointW2:
    consts = _CONST_CACHE.get(curve)
    if consts is None:
        consts = _CONST_CACHE[curve] = _constants(curve)
    a, b3, a2, two, three = consts
    Pt, Qt = (P.X, P.Y, P.Z), (Q.X, Q.Y, Q.Z)
    R = _law_y(a, b3, a2, three, Pt, Qt)
    if not (R[0].a0 or R[1].a0 or R[2].a0):
        R = _law_z(a, b3, two, three, Pt, Qt)
    return PointW2.from_projective(*R)


def _require_w2(curve: CurveW2, *points: PointW2) -> None:
    for P in points:
        if not curve.contains(P):
            raise PointNotOnCurve(f"{P} is not on {curve}")


def ec_add_w2(curve: CurveW2, P: PointW2, Q: PointW2) -> PointW2:
    _require_w2(curve, P, Q)
    return _add_w2(curve, P, Q)


def _neg_w2(P: PointW2) -> PointW2:
    if P.Y.a0 and not P.Z.a0:
        # kernel form (X : 1 : Z); rescale so Y stays 1
        return PointW2(-P.X, P.Y, -P.Z)
    return PointW2(P.X, -P.Y, P.Z)


def ec_neg_w2(curve: CurveW2, P: PointW2) -> PointW2:
    _require_w2(curve, P)
    return _neg_w2(P)


def _smul_w2(curve: CurveW2, n: int, P: PointW2) -> PointW2:
    if n < 0:
        n, P = -n, _neg_w2(P)
    acc, base = PointW2.identity(curve.field), P
    while n:
        if n & 1:
            acc = _add_w2(curve, acc, base)
        n >>= 1
        if n:
            base = _add_w2(curve, base, base)
    return acc


def ec_smul_w2(curve: CurveW2, n: int, P: PointW2) -> PointW2:
    _require_w2(curve, P)
    return _smul_w2(curve, n, P)


def point_order_w2(curve: CurveW2, P: PointW2, limit: int | None = None) -> int:
    _require_w2(curve, P)
    if limit is None:
        limit = curve.field.q * (curve.field.q + 1 + 2 * int(curve.field.q**0.5) + 1)
    n, R = 1, P
    while not R.is_identity():
        R = _add_w2(curve, R, P)
        n += 1
        if n > limit:
            raise RuntimeError(f"order of {P} exceeds {limit}")
    return n


def w2_sqrts(r: W2Element) -> list[W2Element]:
    """Every y in W_2(F_q) with y^2 = r."""
    f = r.field
    if r.a0:
        s = r.a0.sqrt()
        if s is None:
            return []
        out = []
        for y0 in (s, -s):
            out.append(W2Element(y0, r.a1 / (2 * y0.frobenius())))
        return out
    if r.a1:
        return []
    return [W2Element(f.zero, t) for t in gf.enumerate_field(f)]


def enumerate_points_w2(curve: CurveW2) -> list[PointW2]:
    """All q * #E0(F_q) points: affine ones ordered by (x, y), then the
    kernel of reduction (ver(t) : 1 : 0) by t."""
    f = curve.field
    gf.check_size(f.q**2)
    elems = gf.enumerate_field(f)
    one = int_to_w2(1, f)
    pts = []
    for x0 in elems:
        for x1 in elems:
            x = W2Element(x0, x1)
            for y in sorted(w2_sqrts(curve.rhs(x)), key=W2Element.sort_key):
                pts.append(PointW2(x, y, one))
    zero = W2Element(f.zero, f.zero)
    pts.extend(PointW2(ver(t), one, zero) for t in elems)
    return pts


def kernel_point(t: FieldElement) -> PointW2:
    f = t.field
    return PointW2(ver(t), W2Element(f.one, f.zero), W2Element(f.zero, f.zero))


def reduce_point(P: PointW2) -> PointFq:
    if not P.Z.a0:
        return INFINITY
    z = P.Z.a0
    return PointFq(P.X.a0 / z, P.Y.a0 / z)


def lift_point_any(curve: CurveW2, P0: PointFq) -> PointW2:
    """Some point of E(W_2(F_q)) reducing to P0."""
    _require_fq(curve.reduction(), P0)
    f = curve.field
    if P0.x is None:
        return PointW2.identity(f)
    x0, y0 = P0.x, P0.y
    if y0:
        x = teich(x0)
        r = curve.rhs(x)
        y = W2Element(y0, r.a1 / (2 * y0.frobenius()))
        return PointW2.affine(x, y)
    # 2-torsion reduction: keep y = 0 and move x to the exact root
    r1 = curve.rhs(teich(x0)).a1
    d0 = 3 * x0 * x0 + curve.a.a0
    x = W2Element(x0, -r1 / d0.frobenius())
    P = PointW2.affine(x, W2Element(f.zero, f.zero))
    assert curve.contains(P)
    return P


# ------------------------------------------------------------------ over Q

@dataclass(frozen=True)
class RatPoint:
    x: Fraction | None = None
    y: Fraction | None = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self):
        return "O" if self.x is None else f"({self.x}, {self.y})"


RAT_INFINITY = RatPoint()


def rat_point(x, y) -> RatPoint:
    return RatPoint(Fraction(x), Fraction(y))


def _rat_on(a: int, b: int, P: RatPoint) -> bool:
    return P.x is None or P.y * P.y == P.x**3 + a * P.x + b


def ec_add_rat(a: int, b: int, P: RatPoint, Q: RatPoint) -> RatPoint:
    """Chord-tangent law on y^2 = x^3 + a x + b over Q."""
    for R in (P, Q):
        if not _rat_on(a, b, R):
            raise PointNotOnCurve(f"{R} is not on y^2 = x^3 + {a}x + {b}")
    if P.x is None:
        return Q
    if Q.x is None:
        return P
    if P.x == Q.x:
        if P.y != Q.y or P.y == 0:
            return RAT_INFINITY
        lam = (3 * P.x * P.x + a) / (2 * P.y)
    else:
        lam = (Q.y - P.y) / (Q.x - P.x)
    x3 = lam * lam - P.x - Q.x
    return RatPoint(x3, lam * (P.x - x3) - P.y)


def rat_point_order_up_to(a: int, b: int, P: RatPoint, bound: int = 16) -> int | None:
    R = P
    for n in range(1, bound + 1):
        if R.x is None:
            return n
        R = ec_add_rat(a, b, R, P)
    return None


# ------------------------------------------------------------ quartic model

@dataclass(frozen=True)
class QuarticCurve:
    """y^2 = sum coeffs[i] x^i (degree <= 4) over a field or a Witt ring."""

    coeffs: tuple

    def rhs(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def contains(self, x, y) -> bool:
        return y * y == self.rhs(x)

    @property
    def field(self) -> FieldParams:
        c = self.coeffs[0]
        return c.field


def fermat_quartic(field: FieldParams, witt: bool = False) -> QuarticCurve:
    """y^2 = 1 - x^4, over F_q or (with ``witt``) over W_2(F_q)."""
    if witt:
        z = int_to_w2(0, field)
        return QuarticCurve((int_to_w2(1, field), z, z, z, int_to_w2(-1, field)))
    return QuarticCurve((field.one, field.zero, field.zero, field.zero, -field.one))


def enumerate_points_quartic(curve: QuarticCurve) -> tuple[list[tuple[FieldElement, FieldElement]], int]:
    """Affine points (x in index order, first root then its negative) and the
    number of points at infinity on the smooth model."""
    f = curve.field
    if not isinstance(curve.coeffs[0], FieldElement):
        raise TypeError("enumeration needs a quartic over a finite field")
    pts = []
    for x in gf.enumerate_field(f):
        s = curve.rhs(x).sqrt()
        if s is None:
            continue
        pts.append((x, s))
        if s:
            pts.append((x, -s))
    lead = _top(curve.coeffs)
    if lead[0] == 4:
        n_inf = 2 if lead[1].sqrt() is not None else 0
    elif lead[0] == 3:
        n_inf = 1
    else:
        n_inf = 0
    return pts, n_inf


def _top(coeffs: Sequence) -> tuple[int, FieldElement]:
    for i in range(len(coeffs) - 1, -1, -1):
        if coeffs[i]:
            return i, coeffs[i]
    return -1, coeffs[0]
