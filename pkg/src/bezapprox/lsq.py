"""Weighted least-squares fit of the free control points.

The free points ``q_l`` (``k < l < m - h``) satisfy the normal equations

    sum_i q_i * int rho B_i^m B_l^m dt = int x (rho / w) B_l^m dt

where ``x`` is the rational curve's numerator and ``rho`` is either ``w``
or ``w**2``; in both cases ``rho / w`` is a polynomial, so every integral is
a closed-form sum over products of Bernstein polynomials.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg
from numpy.typing import NDArray

from .bernstein import BernsteinPoly, binomial, binomial_ratio, multiply
from .constrain import ConstrainedSkeleton, ContactOrder, constrained_points, default_contact
from .curves import BezierCurve, RationalBezierCurve, numerator
from .errors import CurveValidationError, SingularSystemError

__all__ = [
    "ApproximationProblem",
    "NormalSystem",
    "WeightChoice",
    "approximate",
    "assemble",
    "objective",
    "rho_poly",
    "solve",
    "weight_square",
]

PIVOT_TOLERANCE = 1e-14


class WeightChoice(enum.Enum):
    OMEGA = "omega"
    OMEGA_SQUARED = "omega2"

    @classmethod
    def parse(cls, value: str | WeightChoice) -> WeightChoice:
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            raise CurveValidationError(f"rho must be 'omega' or 'omega2', got {value!r}") from None


def weight_square(omega: BernsteinPoly) -> BernsteinPoly:
    """``w * w`` in degree ``2n``."""
    return multiply(omega, omega)


def rho_poly(curve: RationalBezierCurve, rho: WeightChoice) -> BernsteinPoly:
    """Bernstein coefficients of the weight function ``rho``."""
    omega = BernsteinPoly(curve.weights)
    return omega if rho is WeightChoice.OMEGA else weight_square(omega)


def _rhs_numerator(curve: RationalBezierCurve, rho: WeightChoice) -> NDArray[np.float64]:
    """Coefficients of ``x * rho / w`` as an ``(a+1, d)`` array."""
    xs, omega = numerator(curve)
    if rho is WeightChoice.OMEGA_SQUARED:
        xs = [multiply(x, omega) for x in xs]
    return np.column_stack([x.as_array() for x in xs])


@dataclass(frozen=True)
class ApproximationProblem:
    """Everything needed to compute one approximant.

    ``contact=None`` selects :func:`default_contact` for degree ``m``.
    """

    curve: RationalBezierCurve
    m: int
    contact: ContactOrder | None = None
    rho: WeightChoice = WeightChoice.OMEGA

    def __post_init__(self) -> None:
        if not isinstance(self.curve, RationalBezierCurve):
            raise CurveValidationError("curve must be a RationalBezierCurve")
        if not isinstance(self.m, (int, np.integer)) or self.m < 1:
            raise CurveValidationError(f"target degree must be an integer >= 1, got {self.m!r}")
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "rho", WeightChoice.parse(self.rho))
        if self.contact is None:
            object.__setattr__(self, "contact", default_contact(self.m))
        self.contact.check_degree(self.m)


@dataclass(frozen=True, eq=False)
class NormalSystem:
    """Normal equations ``gram @ X = rhs`` for the free control points."""

    gram: NDArray[np.float64]
    rhs: NDArray[np.float64]
    free_indices: range = field(default=range(0))


def _gram_entry(r: NDArray[np.float64], m: int, i: int, l: int) -> float:
    # int_0^1 rho B_i^m B_l^m dt for rho of degree s with Bernstein coefficients r
    s = r.size - 1
    total = 0.0
    for j in range(s + 1):
        total += r[j] * binomial_ratio([(s, j), (m, i), (m, l)], (s + 2 * m, i + j + l))
    return total / (s + 2 * m + 1)


def _moment(coeffs: NDArray[np.float64], m: int, l: int) -> NDArray[np.float64]:
    # int_0^1 f B_l^m dt for (vector) f of degree a
    a = coeffs.shape[0] - 1
    weights = np.array([binomial_ratio([(a, j), (m, l)], (a + m, j + l)) for j in range(a + 1)])
    return weights @ coeffs / (a + m + 1)


def assemble(problem: ApproximationProblem, skeleton: ConstrainedSkeleton | None = None) -> NormalSystem:
    """Build the normal equations for the free control points of ``problem``.

    Gram entries are exact triple-product integrals of Bernstein polynomials;
    the contribution of the fixed head and tail points is moved to the
    right-hand side.

    Raises:
        ValueError: No free control points exist for this contact order.
        CurveValidationError: A non-finite entry appeared.
    """
    if skeleton is None:
        skeleton = constrained_points(problem.curve, problem.m, problem.contact)
    free = skeleton.free_indices
    if len(free) == 0:
        raise ValueError("no free control points: the skeleton already defines the curve")
    m = problem.m
    r = rho_poly(problem.curve, problem.rho).as_array()
    xr = _rhs_numerator(problem.curve, problem.rho)
    fixed = skeleton.fixed_items()

    gram = np.empty((len(free), len(free)))
    rhs = np.empty((len(free), problem.curve.dimension))
    for row, l in enumerate(free):
        for col, i in enumerate(free):
            if col < row:
                gram[row, col] = gram[col, row]
            else:
                gram[row, col] = _gram_entry(r, m, i, l)
        rhs[row] = _moment(xr, m, l)
        for i, q in fixed:
            rhs[row] -= _gram_entry(r, m, i, l) * q
    if not (np.all(np.isfinite(gram)) and np.all(np.isfinite(rhs))):
        raise CurveValidationError("normal equations contain non-finite values; check the weights")
    return NormalSystem(gram, rhs, free)


def _assemble_rearranged(problem: ApproximationProblem, skeleton: ConstrainedSkeleton) -> NormalSystem:
    """Normal equations in the rearranged, binomial-sum layout (test reference only).

    Row ``l`` of this system equals row ``l`` of :func:`assemble` scaled by
    ``(2m + s + 1) / C(m, l)`` where ``s`` is the degree of ``rho``. For
    ``rho = w**2`` the right-hand factor is ``(2m+2n+1)/(m+2n+1)``.
    """
    curve, m = problem.curve, problem.m
    n = curve.degree
    w, p = curve.weights, curve.points
    if problem.rho is WeightChoice.OMEGA:
        s, big_w = n, w
    else:
        s, big_w = 2 * n, weight_square(BernsteinPoly(w)).as_array()
    free = skeleton.free_indices
    fixed = skeleton.fixed_items()

    def lhs(i: int, l: int) -> float:
        return sum(
            binomial(s, j) * binomial(m, i) / binomial(2 * m + s, i + j + l) * big_w[j]
            for j in range(s + 1)
        )

    gram = np.array([[lhs(i, l) for i in free] for l in free])
    rhs = np.zeros((len(free), curve.dimension))
    for row, l in enumerate(free):
        if problem.rho is WeightChoice.OMEGA:
            factor = (2 * m + n + 1) / (m + n + 1)
            acc = sum(binomial(n, i) / binomial(n + m, i + l) * w[i] * p[i] for i in range(n + 1))
        else:
            factor = (2 * m + 2 * n + 1) / (m + 2 * n + 1)
            acc = sum(
                binomial(n, i) * binomial(n, j) / binomial(2 * n + m, i + j + l) * w[i] * w[j] * p[i]
                for i in range(n + 1)
                for j in range(n + 1)
            )
        rhs[row] = factor * acc - sum(lhs(i, l) * q for i, q in fixed)
    return NormalSystem(gram, rhs, free)


def solve(system: NormalSystem) -> NDArray[np.float64]:
    """Solve ``gram @ X = rhs`` by LU with partial pivoting plus one refinement step.

    Raises:
        SingularSystemError: A pivot falls below ``1e-14 * max|gram|``.
    """
    gram = np.asarray(system.gram, dtype=float)
    rhs = np.asarray(system.rhs, dtype=float)
    squeeze = rhs.ndim == 1
    if squeeze:
        rhs = rhs[:, None]
    scale = np.max(np.abs(gram)) if gram.size else 0.0
    if scale == 0.0:
        raise SingularSystemError("normal matrix is zero")
    with warnings.catch_warnings():
        # singularity is reported below through the pivot test
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(gram, check_finite=True)
    if np.min(np.abs(np.diag(lu))) < PIVOT_TOLERANCE * scale:
        raise SingularSystemError("normal matrix is numerically singular (tiny LU pivot)")
    x = scipy.linalg.lu_solve((lu, piv), rhs)
    x += scipy.linalg.lu_solve((lu, piv), rhs - gram @ x)
    return x[:, 0] if squeeze else x


def approximate(problem: ApproximationProblem) -> BezierCurve:
    """Degree-``m`` polynomial approximant of ``problem.curve``.

    With no free control points the constrained skeleton alone is returned.
    """
    skeleton = constrained_points(problem.curve, problem.m, problem.contact)
    if len(skeleton.free_indices) == 0:
        return skeleton.assemble()
    return skeleton.assemble(solve(assemble(problem, skeleton)))


def objective(
    P: RationalBezierCurve,
    Q: BezierCurve,
    rho: WeightChoice | str = WeightChoice.OMEGA,
    nodes: int = 128,
) -> float:
    """Weighted squared L2 distance ``int rho |P - Q|^2 dt`` by Gauss-Legendre quadrature."""
    if nodes < 16:
        raise ValueError("objective needs at least 16 quadrature nodes")
    rho = WeightChoice.parse(rho)
    x, wq = np.polynomial.legendre.leggauss(nodes)
    t = 0.5 * (x + 1.0)
    diff = P.sample(t) - Q.sample(t)
    weight = rho_poly(P, rho)(t)
    return float(0.5 * np.sum(wq * weight * np.sum(diff * diff, axis=1)))
