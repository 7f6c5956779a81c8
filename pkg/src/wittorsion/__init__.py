"""Finite fields, length-2 Witt vectors and elliptic curves over them, with
the elliptic Teichmüller lift and two torsion-packet computations built on
top."""

from .errors import WittorsionError
from .gf import FieldElement, FieldParams, make_field
from .witt2 import W2Element, from_integer, teich, ver
from .poly import LaurentPoly, Poly
from .ec import CurveFq, CurveW2, PointFq, PointW2
from .lift import quartic_tau_x_poly, tau_x_poly, teichmuller_lift

__all__ = [
    "WittorsionError",
    "FieldElement",
    "FieldParams",
    "make_field",
    "W2Element",
    "from_integer",
    "teich",
    "ver",
    "LaurentPoly",
    "Poly",
    "CurveFq",
    "CurveW2",
    "PointFq",
    "PointW2",
    "quartic_tau_x_poly",
    "tau_x_poly",
    "teichmuller_lift",
]

__version__ = "0.1.0"
