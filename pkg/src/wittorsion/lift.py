"""The elliptic Teichmüller lift and the polynomial describing its
x-coordinate.

For a point P0 of order n prime to p, any lift Q of P0 to E(W_2(F_q)) can
be moved to the unique lift of order n by multiplying by lam with
lam = 0 (mod p) and lam = 1 (mod n): two lifts differ by an element of the
kernel of reduction, which has exponent p.

The second Witt coordinate x1 of x(tau(P0)) is then sampled over a finite
field, interpolated as a polynomial in x0 and checked against fresh samples
from a different extension.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import gf
from .ec import (
    CurveW2,
    PointFq,
    PointW2,
    QuarticCurve,
    _smul_w2,
    enumerate_points_fq,
    enumerate_points_quartic,
    fermat_quartic,
    lift_point_any,
    point_order_fq,
    two_torsion_abscissas,
)
from .errors import (
    DegenerateTransport,
    InsufficientSamples,
    OrderDivisibleByP,
    PointNotOnCurve,
    ValidationFailed,
)
from .gf import FieldElement, FieldParams
from .poly import Poly, p_eval, p_interpolate
from .witt2 import W2Element


def crt_multiplier(p: int, n: int) -> int:
    """lam with lam = 0 mod p and lam = 1 mod n (requires gcd(p, n) = 1)."""
    if n == 1:
        return 0
    return p * pow(p, -1, n)


def teichmuller_lift(curve: CurveW2, P0: PointFq) -> PointW2:
    E0 = curve.reduction()
    if not E0.contains(P0):
        raise PointNotOnCurve(f"{P0} is not on {E0}")
    n = point_order_fq(E0, P0)
    p = curve.field.p
    if n % p == 0:
        raise OrderDivisibleByP(f"{P0} has order {n}, divisible by {p}")
    return _smul_w2(curve, crt_multiplier(p, n), lift_point_any(curve, P0))


@dataclass(frozen=True)
class TauSample:
    base: PointFq
    order: int
    lifted: PointW2
    x: W2Element

    @property
    def x0(self) -> FieldElement:
        return self.x.a0

    @property
    def x1(self) -> FieldElement:
        return self.x.a1


def tau_samples(curve: CurveW2, ext_k: int) -> tuple[list[TauSample], list[PointFq]]:
    """Teichmüller samples at every affine point over F_{p^ext_k}.

    ``curve`` must be defined over W_2(F_p); points whose order is divisible
    by p are returned separately.
    """
    target = gf.make_field(curve.field.p, ext_k)
    E = curve.base_change(target)
    E0 = E.reduction()
    samples, skipped = [], []
    p = target.p
    for P0 in enumerate_points_fq(E0):
        if P0.is_infinity:
            continue
        n = point_order_fq(E0, P0)
        if n % p == 0:
            skipped.append(P0)
            continue
        T = _smul_w2(E, crt_multiplier(p, n), lift_point_any(E, P0))
        samples.append(TauSample(P0, n, T, T.X))
    return samples, skipped


@dataclass
class TauPolyResult:
    poly: Poly
    prime: int
    sample_ext_k: int
    validate_ext_k: int
    sample_count: int
    abscissa_count: int
    holdout_count: int
    skipped: int
    verdicts: dict = dc_field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "sample_ext": self.sample_ext_k,
            "validate_ext": self.validate_ext_k,
            "sample_count": self.sample_count,
            "abscissa_count": self.abscissa_count,
            "holdout_count": self.holdout_count,
            "skipped": self.skipped,
            "polynomial": str(self.poly),
            "coeffs": self.poly.to_json()["coeffs"],
            "degree": self.poly.degree,
            "verdicts": dict(self.verdicts),
        }


def interpolate_x1(pairs: list[tuple[FieldElement, FieldElement]], prime_field: FieldParams) -> Poly:
    """Interpolate x1 as a function of x0 and descend to F_p.

    Raises InsufficientSamples when the data cannot pin the polynomial down:
    fewer than (observed degree + 2) abscissas, or abscissas covering all of
    F_q^x, where interpolation only sees exponents modulo q - 1.
    """
    by_x: dict[FieldElement, FieldElement] = {}
    for x0, x1 in pairs:
        seen = by_x.setdefault(x0, x1)
        if seen != x1:
            raise ValidationFailed(f"x1 is not a function of x0 at x0 = {x0}", x0)
    if not by_x:
        raise InsufficientSamples("no usable samples")
    field = next(iter(by_x)).field
    pts = sorted(by_x.items(), key=lambda kv: kv[0].index)
    nonzero = sum(1 for x, _ in pts if x)
    if nonzero >= field.q - 1:
        raise InsufficientSamples(
            f"abscissas cover all of F_{field.q}^x; interpolation cannot see degrees >= {field.q - 1}")
    interp = p_interpolate(pts)
    if len(pts) < interp.degree + 2:
        raise InsufficientSamples(
            f"{len(pts)} abscissas for an interpolant of degree {interp.degree}")
    try:
        coeffs = [gf.restrict(c, prime_field) for c in interp.coeffs]
    except ValueError:
        raise ValidationFailed(f"interpolant {interp} has coefficients outside F_{prime_field.p}")
    return Poly(prime_field, coeffs)


def _holdout(poly: Poly, pairs) -> None:
    for x0, x1 in pairs:
        if p_eval(poly, x0) != x1:
            raise ValidationFailed(f"holdout mismatch at x0 = {x0}: {p_eval(poly, x0)} != {x1}", x0)


def tau_x_poly_result(curve: CurveW2, sample_ext_k: int = 2, validate_ext_k: int = 3) -> TauPolyResult:
    prime_field = curve.field
    samples, skipped = tau_samples(curve, sample_ext_k)
    pairs = [(s.x0, s.x1) for s in samples]
    poly = interpolate_x1(pairs, prime_field)
    holdout, skipped_v = tau_samples(curve, validate_ext_k)
    _holdout(poly, [(s.x0, s.x1) for s in holdout])
    for ext, group in ((sample_ext_k, samples), (validate_ext_k, holdout)):
        E0 = curve.base_change(gf.make_field(prime_field.p, ext)).reduction()
        for x in two_torsion_abscissas(E0):
            if p_eval(poly, x):
                raise ValidationFailed(f"x1 does not vanish at the 2-torsion abscissa {x}", x)
        for s in group:
            if not s.base.y and s.x1:
                raise ValidationFailed(f"lift of 2-torsion point {s.base} has x1 = {s.x1}", s.x0)
    return TauPolyResult(
        poly=poly,
        prime=prime_field.p,
        sample_ext_k=sample_ext_k,
        validate_ext_k=validate_ext_k,
        sample_count=len(samples),
        abscissa_count=len({s.x0 for s in samples}),
        holdout_count=len(holdout),
        skipped=len(skipped) + len(skipped_v),
        verdicts={"prime_subfield": True, "holdout": True, "two_torsion_vanishing": True},
    )


def tau_x_poly(curve: CurveW2, sample_ext_k: int = 2, validate_ext_k: int = 3) -> Poly:
    """Polynomial over F_p giving x1(tau(P)) from x(P)."""
    return tau_x_poly_result(curve, sample_ext_k, validate_ext_k).poly


# ------------------------------------------------------------ quartic model

class TransportMaps:
    """Birational maps between y^2 = 1 - x^4 and v^2 = u^3 + 4u.

    forward (x, y) -> (2(1+y)/x^2, 4(1+y)/x^3), backward
    (u, v) -> (2u/v, 2u^3/v^2 - 1).  On the quartic,
    v^2 - u^3 - 4u = -8(1+y)(y^2 - 1 + x^4)/x^6, so the forward image lies
    on the cubic whenever x and 1+y are units.
    """

    weierstrass_a = 4
    weierstrass_b = 0

    @staticmethod
    def forward(x, y):
        s = 1 + y
        return 2 * s / x**2, 4 * s / x**3

    @staticmethod
    def backward(u, v):
        return 2 * u / v, 2 * u**3 / v**2 - 1

    @classmethod
    def weierstrass_w2(cls, field: FieldParams) -> CurveW2:
        return CurveW2.from_ints(field, cls.weierstrass_a, cls.weierstrass_b)


def quartic_teichmuller_x(curve: QuarticCurve, P0: tuple[FieldElement, FieldElement]) -> W2Element:
    """Witt x-coordinate of the Teichmüller lift of an affine point of
    y^2 = 1 - x^4, computed through the Weierstrass model."""
    field = curve.field
    x0, y0 = P0
    if x0.field != field or not (y0 * y0 == 1 - x0**4):
        raise PointNotOnCurve(f"({x0}, {y0}) is not on y^2 = 1 - x^4 over {field!r}")
    if not x0 or not (1 + y0):
        raise DegenerateTransport(f"transport undefined at ({x0}, {y0})")
    u0, v0 = TransportMaps.forward(x0, y0)
    E = TransportMaps.weierstrass_w2(field)
    T = teichmuller_lift(E, PointFq(u0, v0))
    U, V = T.xy()
    x, y = TransportMaps.backward(U, V)
    if not curve.contains(x, y):  # pragma: no cover - guarded by the identity above
        raise PointNotOnCurve(f"backward image ({x}, {y}) is off the quartic")
    return x


def quartic_samples(p: int, ext_k: int):
    """(pairs, skipped) over F_{p^ext_k}: pairs (x0, x1) at every
    non-degenerate affine point; skipped lists (point, reason)."""
    field = gf.make_field(p, ext_k)
    X = fermat_quartic(field, witt=True)
    pts, _ = enumerate_points_quartic(fermat_quartic(field))
    pairs, skipped = [], []
    for x0, y0 in pts:
        try:
            w = quartic_teichmuller_x(X, (x0, y0))
        except DegenerateTransport:
            skipped.append(((x0, y0), "degenerate transport"))
            continue
        except OrderDivisibleByP:
            skipped.append(((x0, y0), "order divisible by p"))
            continue
        pairs.append((x0, w.a1))
    return pairs, skipped


def quartic_tau_x_poly_result(p: int = 5, sample_ext_k: int = 2, validate_ext_k: int = 3) -> TauPolyResult:
    prime_field = gf.make_field(p)
    while True:
        pairs, skipped = quartic_samples(p, sample_ext_k)
        try:
            poly = interpolate_x1(pairs, prime_field)
            break
        except InsufficientSamples:
            if sample_ext_k >= gf.MAX_DEGREE:
                raise
            sample_ext_k += 1
            if validate_ext_k == sample_ext_k:
                validate_ext_k = sample_ext_k + 1 if sample_ext_k < gf.MAX_DEGREE else sample_ext_k - 1
    holdout, skipped_v = quartic_samples(p, validate_ext_k)
    _holdout(poly, holdout)
    even = [e for e in poly.terms() if e % 2 == 0]
    if even:
        raise ValidationFailed(f"{poly} has even-degree terms {even}")
    return TauPolyResult(
        poly=poly,
        prime=p,
        sample_ext_k=sample_ext_k,
        validate_ext_k=validate_ext_k,
        sample_count=len(pairs),
        abscissa_count=len({x for x, _ in pairs}),
        holdout_count=len(holdout),
        skipped=len(skipped) + len(skipped_v),
        verdicts={"prime_subfield": True, "holdout": True, "odd": True},
    )


def quartic_tau_x_poly(p: int = 5, sample_ext_k: int = 2, validate_ext_k: int = 3) -> Poly:
    return quartic_tau_x_poly_result(p, sample_ext_k, validate_ext_k).poly


def curve_e(p: int = 7) -> CurveW2:
    """y^2 = x^3 + 1 over W_2(F_p)."""
    return CurveW2.from_ints(gf.make_field(p), 0, 1)
