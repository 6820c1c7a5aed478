"""Deterministic SVG rendering of a rational curve and its approximant."""

from __future__ import annotations

from typing import Sequence

import numpy as np
from numpy.typing import NDArray

from .curves import BezierCurve, RationalBezierCurve

WIDTH, HEIGHT = 800, 600
CURVE_SAMPLES = 400
MARGIN = 0.05


def _fmt(v: float) -> str:
    return f"{v:.12g}"


def _points_attr(pts: NDArray[np.float64]) -> str:
    # y is negated so the drawing reads with geometric y pointing up
    return " ".join(f"{_fmt(x)},{_fmt(-y)}" for x, y in pts[:, :2])


def _bbox(*arrays: NDArray[np.float64]) -> tuple[float, float, float, float]:
    allpts = np.vstack([a[:, :2] for a in arrays])
    x0, y0 = allpts.min(axis=0)
    x1, y1 = allpts.max(axis=0)
    span = max(x1 - x0, y1 - y0, 1e-12)
    pad = MARGIN * span
    return x0 - pad, y0 - pad, x1 + pad, y1 + pad


def render_svg(
    P: RationalBezierCurve,
    Q: BezierCurve,
    zoom: Sequence[float] | None = None,
    samples: int = CURVE_SAMPLES,
) -> str:
    """SVG document with both curves and both control polygons.

    Args:
        P: Original rational curve (drawn solid blue).
        Q: Approximant (drawn dashed red).
        zoom: Optional ``(x0, y0, x1, y1)`` box in curve coordinates to show
            instead of the whole drawing.
        samples: Number of polyline vertices per curve.

    Only the first two coordinates are drawn for spatial curves.
    """
    t = np.linspace(0.0, 1.0, samples)
    p_pts, q_pts = P.sample(t), Q.sample(t)
    if zoom is None:
        x0, y0, x1, y1 = _bbox(p_pts, q_pts, P.points, Q.points)
    else:
        x0, y0, x1, y1 = (float(v) for v in zoom)
        if not (x1 > x0 and y1 > y0):
            raise ValueError("zoom box must satisfy x0 < x1 and y0 < y1")
    view = f"{_fmt(x0)} {_fmt(-y1)} {_fmt(x1 - x0)} {_fmt(y1 - y0)}"
    stroke = 'vector-effect="non-scaling-stroke" fill="none"'
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="{view}" preserveAspectRatio="xMidYMid meet">',
        f'  <rect x="{_fmt(x0)}" y="{_fmt(-y1)}" width="{_fmt(x1 - x0)}" height="{_fmt(y1 - y0)}" fill="white"/>',
        f'  <polyline id="P-polygon" points="{_points_attr(P.points)}" stroke="#9bb7d4" stroke-width="1" {stroke}/>',
        f'  <polyline id="Q-polygon" points="{_points_attr(Q.points)}" stroke="#e0a0a0" stroke-width="1" '
        f'stroke-dasharray="2,3" {stroke}/>',
        f'  <polyline id="P" points="{_points_attr(p_pts)}" stroke="#1f4e9a" stroke-width="2" {stroke}/>',
        f'  <polyline id="Q" points="{_points_attr(q_pts)}" stroke="#c0282d" stroke-width="1.5" '
        f'stroke-dasharray="6,4" {stroke}/>',
        "</svg>",
        "",
    ]
    return "\n".join(lines)
