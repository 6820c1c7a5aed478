"""Fixed control points of the approximant from endpoint contact conditions."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .curves import BezierCurve, RationalBezierCurve
from .errors import InfeasibleContactError

__all__ = ["ConstrainedSkeleton", "ContactOrder", "constrained_points", "default_contact", "parse_contact"]


@dataclass(frozen=True)
class ContactOrder:
    """Number of matched derivatives at t=0 (``k``) and t=1 (``h``)."""

    k: int
    h: int

    def __post_init__(self) -> None:
        for name, v in (("k", self.k), ("h", self.h)):
            if v not in (0, 1, 2):
                raise InfeasibleContactError(f"contact order {name}={v!r} must be 0, 1 or 2")

    def check_degree(self, m: int) -> None:
        """Raise unless the head ``q_0..q_k`` and tail ``q_{m-h}..q_m`` are disjoint."""
        if self.k + self.h + 2 > m + 1:
            raise InfeasibleContactError(
                f"contact order ({self.k},{self.h}) fixes {self.k + self.h + 2} control points "
                f"but degree {m} has only {m + 1}"
            )

    def __str__(self) -> str:
        return f"{self.k},{self.h}"


def parse_contact(text: str) -> ContactOrder | None:
    """Parse ``"k,h"``; ``"auto"`` returns ``None``."""
    if text.strip().lower() == "auto":
        return None
    try:
        k, h = (int(part) for part in text.split(","))
    except ValueError as exc:
        raise InfeasibleContactError(f"contact must be 'auto' or 'k,h', got {text!r}") from exc
    return ContactOrder(k, h)


def default_contact(m: int) -> ContactOrder:
    """Default schedule: ``k`` = 0, 1, 2 for m = 1, 2..3, >=4; ``h`` = 0, 1, 2 for m = 1..2, 3..4, >=5."""
    if m < 1:
        raise ValueError(f"target degree must be >= 1, got {m}")
    k = 0 if m == 1 else 1 if m <= 3 else 2
    h = 0 if m <= 2 else 1 if m <= 4 else 2
    return ContactOrder(k, h)


@dataclass(frozen=True, eq=False)
class ConstrainedSkeleton:
    m: int
    contact: ContactOrder
    head: NDArray[np.float64]
    tail: NDArray[np.float64]

    @property
    def free_indices(self) -> range:
        return range(self.contact.k + 1, self.m - self.contact.h)

    @property
    def head_indices(self) -> range:
        return range(0, self.contact.k + 1)

    @property
    def tail_indices(self) -> range:
        return range(self.m - self.contact.h, self.m + 1)

    def fixed_items(self) -> list[tuple[int, NDArray[np.float64]]]:
        return list(zip(self.head_indices, self.head)) + list(zip(self.tail_indices, self.tail))

    def assemble(self, free_points: NDArray[np.float64] | None = None) -> BezierCurve:
        """Full control polygon with ``free_points`` filling the free slots."""
        d = self.head.shape[1]
        q = np.zeros((self.m + 1, d))
        for i, pt in self.fixed_items():
            q[i] = pt
        free = self.free_indices
        if len(free):
            if free_points is None:
                raise ValueError(f"{len(free)} free control points must be supplied")
            q[free.start : free.stop] = free_points
        return BezierCurve(q)


def constrained_points(curve: RationalBezierCurve, m: int, contact: ContactOrder) -> ConstrainedSkeleton:
    """Control points of a degree-``m`` curve forced by the endpoint contact order.

    Matching ``Q^(r)`` to ``P^(r)`` at t=0 for ``r <= k`` and at t=1 for
    ``r <= h`` pins ``q_0..q_k`` and ``q_{m-h}..q_m``.

    Raises:
        InfeasibleContactError: The head and tail overlap at degree ``m``, or
            the curve's degree is below the requested contact order.
    """
    if m < 1:
        raise InfeasibleContactError(f"target degree must be >= 1, got {m}")
    contact.check_degree(m)
    n = curve.degree
    if max(contact.k, contact.h) > n:
        raise InfeasibleContactError(
            f"contact order ({contact.k},{contact.h}) needs a curve of degree >= "
            f"{max(contact.k, contact.h)}, got {n}"
        )
    return ConstrainedSkeleton(
        m=m,
        contact=contact,
        head=_end_points(curve.points, curve.weights, m, contact.k),
        tail=_end_points(curve.points[::-1], curve.weights[::-1], m, contact.h)[::-1],
    )


def _end_points(p: NDArray[np.float64], w: NDArray[np.float64], m: int, order: int) -> NDArray[np.float64]:
    # Start-end formulas; the t=1 end calls this with the polygon reversed.
    n = p.shape[0] - 1
    out = [p[0].copy()]
    if order >= 1:
        a = n / m * w[1]
        out.append(a * p[1] + (1.0 - a) * p[0])
    if order >= 2:
        out.append(
            (
                n * (n - 1) * w[2] * p[2]
                + 2.0 * n * w[1] * (m - n * w[1]) * p[1]
                + (m * (m - 1) + 2.0 * n * w[1] * (n * w[1] - m) + n * w[2] * (1 - n)) * p[0]
            )
            / (m * (m - 1))
        )
    return np.array(out)
