"""Sampled error measures between a rational curve and its approximant."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Literal

import numpy as np
from numpy.typing import NDArray
from scipy.spatial.distance import cdist

from .curves import BezierCurve, RationalBezierCurve
from .lsq import objective

__all__ = ["DEFAULT_SAMPLES", "ErrorReport", "d_l1", "d_max", "error_report", "hausdorff", "pointwise_distance"]

DEFAULT_SAMPLES = 1000

Norm = Literal["euclidean", "manhattan"]


def _grid(H: int) -> NDArray[np.float64]:
    if H < 1:
        raise ValueError(f"number of subintervals H must be >= 1, got {H}")
    return np.arange(H + 1) / H


def pointwise_distance(
    P: RationalBezierCurve | BezierCurve,
    Q: RationalBezierCurve | BezierCurve,
    H: int = DEFAULT_SAMPLES,
    norm: Norm = "euclidean",
) -> NDArray[np.float64]:
    """``|P(t_i) - Q(t_i)|`` on the uniform grid ``t_i = i / H``."""
    t = _grid(H)
    diff = P.sample(t) - Q.sample(t)
    if norm == "euclidean":
        return np.sqrt(np.sum(diff * diff, axis=1))
    if norm == "manhattan":
        return np.sum(np.abs(diff), axis=1)
    raise ValueError(f"unknown norm {norm!r}")


def d_max(P, Q, H: int = DEFAULT_SAMPLES) -> float:
    """Largest same-parameter Euclidean distance over ``H + 1`` uniform samples."""
    return float(np.max(pointwise_distance(P, Q, H)))


def d_l1(P, Q, H: int = DEFAULT_SAMPLES, norm: Norm = "manhattan") -> float:
    """Composite trapezoid integral of the same-parameter distance.

    The per-sample distance defaults to the coordinate-sum (Manhattan) norm,
    matching the reference error tables; pass
    ``norm="euclidean"`` for the Euclidean variant, which is always
    ``<= d_max``.
    """
    d = pointwise_distance(P, Q, H, norm)
    return float(np.sum(d[:-1] + d[1:]) / (2 * H))


def hausdorff(P, Q, H: int = DEFAULT_SAMPLES) -> float:
    """Symmetric Hausdorff distance between the two sets of ``H + 1`` samples."""
    t = _grid(H)
    return hausdorff_points(P.sample(t), Q.sample(t))


def hausdorff_points(a: NDArray[np.float64], b: NDArray[np.float64]) -> float:
    dist = cdist(np.atleast_2d(a), np.atleast_2d(b))
    return float(max(dist.min(axis=1).max(), dist.min(axis=0).max()))


@dataclass(frozen=True)
class ErrorReport:
    d_max: float
    d_l1: float
    hausdorff: float
    objective_value: float
    samples: int
    hausdorff_samples: int | None = None

    def __post_init__(self) -> None:
        for name in ("d_max", "d_l1", "hausdorff", "objective_value"):
            v = getattr(self, name)
            if not (np.isfinite(v) and v >= 0.0):
                raise ValueError(f"ErrorReport.{name} must be finite and non-negative, got {v!r}")
        if self.samples < 1:
            raise ValueError("ErrorReport.samples must be positive")

    def as_dict(self) -> dict:
        return asdict(self)


def error_report(
    P: RationalBezierCurve,
    Q: BezierCurve,
    rho="omega",
    H: int = DEFAULT_SAMPLES,
    hausdorff_samples: int | None = None,
) -> ErrorReport:
    """All error measures for one pair of curves.

    ``hausdorff_samples`` overrides ``H`` for the Hausdorff distance only.
    """
    hs = H if hausdorff_samples is None else hausdorff_samples
    return ErrorReport(
        d_max=d_max(P, Q, H),
        d_l1=d_l1(P, Q, H),
        hausdorff=hausdorff(P, Q, hs),
        objective_value=objective(P, Q, rho),
        samples=H,
        hausdorff_samples=hs,
    )
