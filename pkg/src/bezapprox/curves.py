"""Polynomial and rational Bezier curve types and their evaluation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .bernstein import BernsteinPoly, _check_t, basis_matrix
from .errors import CurveValidationError

__all__ = [
    "BezierCurve",
    "EndpointDerivatives",
    "RationalBezierCurve",
    "endpoint_derivatives",
    "endpoint_jet",
    "eval_bezier",
    "eval_rational",
    "numerator",
]

SUPPORTED_DIMENSIONS = (2, 3)

End = Literal["start", "finish"]


def _as_points(points: ArrayLike, name: str) -> NDArray[np.float64]:
    try:
        arr = np.array(points, dtype=float)
    except (TypeError, ValueError) as exc:
        raise CurveValidationError(f"{name}: points must be numeric coordinate arrays") from exc
    if arr.ndim != 2:
        raise CurveValidationError(f"{name}: points must be a list of coordinate tuples")
    if arr.shape[0] < 2:
        raise CurveValidationError(f"{name}: at least 2 control points are required")
    if arr.shape[1] not in SUPPORTED_DIMENSIONS:
        raise CurveValidationError(
            f"{name}: dimension must be one of {SUPPORTED_DIMENSIONS}, got {arr.shape[1]}"
        )
    if not np.all(np.isfinite(arr)):
        raise CurveValidationError(f"{name}: control point coordinates must be finite")
    arr.setflags(write=False)
    return arr


def _de_casteljau(points: NDArray[np.float64], ts: NDArray[np.float64]) -> NDArray[np.float64]:
    # points (k+1, d), ts (N,) -> (N, d)
    t = ts[:, None, None]
    work = np.broadcast_to(points, (ts.size,) + points.shape).copy()
    for k in range(points.shape[0] - 1, 0, -1):
        work = (1.0 - t) * work[:, :k] + t * work[:, 1 : k + 1]
    return work[:, 0]


@dataclass(frozen=True, eq=False)
class BezierCurve:
    """Polynomial Bezier curve ``Q(t) = sum_i B_i^m(t) q_i``."""

    points: NDArray[np.float64]

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", _as_points(self.points, "BezierCurve"))

    @property
    def degree(self) -> int:
        return self.points.shape[0] - 1

    @property
    def dimension(self) -> int:
        return self.points.shape[1]

    def __call__(self, t: float) -> NDArray[np.float64]:
        return eval_bezier(self, t)

    def sample(self, ts: ArrayLike) -> NDArray[np.float64]:
        """Evaluate at every parameter in ``ts``; returns shape ``(len(ts), d)``."""
        return _de_casteljau(self.points, _check_t(ts).reshape(-1))

    def derivative_points(self) -> NDArray[np.float64]:
        """Control points of the hodograph ``Q'`` (degree ``m - 1``)."""
        return self.degree * np.diff(self.points, axis=0)


@dataclass(frozen=True, eq=False)
class RationalBezierCurve:
    """Rational Bezier curve ``P(t) = sum w_i p_i B_i^n / sum w_i B_i^n``.

    Weights must be strictly positive and the curve must be in standard form
    (first and last weight equal to 1). Pass ``normalize_endpoints=True`` to
    reparameterize a non-standard curve into standard form instead of
    rejecting it; the traced point set is unchanged.
    """

    points: NDArray[np.float64]
    weights: NDArray[np.float64]
    normalize_endpoints: bool = False

    def __post_init__(self) -> None:
        pts = _as_points(self.points, "RationalBezierCurve")
        try:
            w = np.array(self.weights, dtype=float).reshape(-1)
        except (TypeError, ValueError) as exc:
            raise CurveValidationError("weights must be numbers") from exc
        if w.size != pts.shape[0]:
            raise CurveValidationError(
                f"points and weights must have equal length ({pts.shape[0]} != {w.size})"
            )
        if not np.all(np.isfinite(w)):
            raise CurveValidationError("weights must be finite")
        if np.any(w <= 0.0):
            raise CurveValidationError("weights must be strictly positive (positivity invariant)")
        if w[0] != 1.0 or w[-1] != 1.0:
            if not self.normalize_endpoints:
                raise CurveValidationError(
                    "curve is not in standard form: first and last weights must equal 1 "
                    f"(got {w[0]!r}, {w[-1]!r}); use normalize_endpoints to reparameterize"
                )
            n = w.size - 1
            i = np.arange(n + 1)
            w = w / (w[0] ** (1.0 - i / n) * w[-1] ** (i / n))
            w[0] = w[-1] = 1.0
        w.setflags(write=False)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "weights", w)

    @property
    def degree(self) -> int:
        return self.points.shape[0] - 1

    @property
    def dimension(self) -> int:
        return self.points.shape[1]

    def __call__(self, t: float) -> NDArray[np.float64]:
        return eval_rational(self, t)

    def sample(self, ts: ArrayLike) -> NDArray[np.float64]:
        """Evaluate at every parameter in ``ts``; returns shape ``(len(ts), d)``."""
        basis = basis_matrix(self.degree, ts)
        den = basis @ self.weights
        num = basis @ (self.weights[:, None] * self.points)
        return num / den[:, None]


def eval_bezier(curve: BezierCurve, t: float) -> NDArray[np.float64]:
    """Evaluate a polynomial Bezier curve at ``t`` by de Casteljau."""
    return curve.sample(np.array([t]))[0]


def eval_rational(curve: RationalBezierCurve, t: float) -> NDArray[np.float64]:
    """Evaluate ``x(t) / w(t)`` with both parts from the stable basis recurrence."""
    return curve.sample(np.array([t]))[0]


def numerator(curve: RationalBezierCurve) -> tuple[list[BernsteinPoly], BernsteinPoly]:
    """Split ``P = x / w`` into per-coordinate numerators ``x`` and denominator ``w``."""
    wp = curve.weights[:, None] * curve.points
    return [BernsteinPoly(wp[:, c]) for c in range(curve.dimension)], BernsteinPoly(curve.weights)


@dataclass(frozen=True)
class EndpointDerivatives:
    """Value and first two derivatives of a curve at one end.

    Orders that were not requested are left as ``None``.
    """

    end: End
    value: NDArray[np.float64]
    first: NDArray[np.float64] | None = None
    second: NDArray[np.float64] | None = None

    @property
    def order(self) -> int:
        return 2 if self.second is not None else 1 if self.first is not None else 0

    def __getitem__(self, r: int) -> NDArray[np.float64]:
        out = (self.value, self.first, self.second)[r]
        if out is None:
            raise KeyError(f"derivative order {r} not populated")
        return out


def endpoint_derivatives(curve: RationalBezierCurve, order: int, end: End = "start") -> NDArray[np.float64]:
    """Closed-form derivative of order 0, 1 or 2 of a standard-form curve at one end.

    The ``finish`` end is obtained by mirroring the ``start`` formulas
    (reversing the control polygon flips the sign of odd derivatives).
    """
    if order not in (0, 1, 2):
        raise ValueError(f"derivative order must be 0, 1 or 2, got {order}")
    n = curve.degree
    if n < order:
        raise ValueError(f"degree {n} curve is too low for the order-{order} endpoint formula")
    if end == "start":
        p, w, sign = curve.points, curve.weights, 1.0
    elif end == "finish":
        p, w, sign = curve.points[::-1], curve.weights[::-1], -1.0
    else:
        raise ValueError(f"end must be 'start' or 'finish', got {end!r}")

    if order == 0:
        return p[0].copy()
    if order == 1:
        return sign * n * w[1] * (p[1] - p[0])
    return n * (
        w[2] * (n - 1) * p[2]
        + 2.0 * w[1] * (1.0 - n * w[1]) * p[1]
        + (2.0 * w[1] * (n * w[1] - 1.0) + w[2] * (1.0 - n)) * p[0]
    )


def endpoint_jet(curve: RationalBezierCurve, order: int, end: End = "start") -> EndpointDerivatives:
    """All endpoint derivatives up to ``order`` bundled in one record."""
    values = [endpoint_derivatives(curve, r, end) for r in range(order + 1)]
    values += [None] * (3 - len(values))
    return EndpointDerivatives(end, values[0], values[1], values[2])
