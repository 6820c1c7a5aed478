"""Constrained polynomial approximation of rational Bezier curves.

A rational Bezier curve is replaced by a polynomial Bezier curve of any
degree that matches the original's endpoint derivatives up to a chosen
contact order and minimizes a weighted L2 distance elsewhere.
"""

from .bernstein import BernsteinPoly, basis_eval, binomial, multiply
from .constrain import ConstrainedSkeleton, ContactOrder, constrained_points, default_contact
from .curves import BezierCurve, RationalBezierCurve, eval_bezier, eval_rational
from .errors import (
    ApproximationError,
    CurveValidationError,
    InfeasibleContactError,
    SingularSystemError,
)
from .lsq import ApproximationProblem, WeightChoice, approximate, objective
from .metrics import ErrorReport, d_l1, d_max, error_report, hausdorff

__version__ = "0.1.0"

__all__ = [
    "ApproximationError",
    "ApproximationProblem",
    "BernsteinPoly",
    "BezierCurve",
    "ConstrainedSkeleton",
    "ContactOrder",
    "CurveValidationError",
    "ErrorReport",
    "InfeasibleContactError",
    "RationalBezierCurve",
    "SingularSystemError",
    "WeightChoice",
    "approximate",
    "basis_eval",
    "binomial",
    "constrained_points",
    "d_l1",
    "d_max",
    "default_contact",
    "error_report",
    "eval_bezier",
    "eval_rational",
    "hausdorff",
    "multiply",
    "objective",
]
