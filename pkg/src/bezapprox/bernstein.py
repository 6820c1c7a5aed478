"""Bernstein basis algebra.

Binomial coefficients are exact Python integers; ratios of binomials are
formed with integer true division, which CPython rounds correctly, so no
intermediate ever overflows or loses precision before the final float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

__all__ = [
    "BernsteinPoly",
    "basis_eval",
    "basis_matrix",
    "binomial",
    "binomial_ratio",
    "integral_of_basis",
    "multiply",
    "product_pair",
]


@lru_cache(maxsize=None)
def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient C(n, k); zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError(f"binomial: n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def binomial_ratio(numerators: Sequence[tuple[int, int]], denominator: tuple[int, int]) -> float:
    """Return ``prod C(a, b) / C(c, d)`` rounded once to the nearest double."""
    num = 1
    for a, b in numerators:
        num *= binomial(a, b)
    den = binomial(*denominator)
    if den == 0:
        raise ZeroDivisionError(f"C{denominator} is zero")
    return num / den


def _check_t(t: ArrayLike) -> NDArray[np.float64]:
    arr = np.asarray(t, dtype=float)
    if np.any(~np.isfinite(arr)) or np.any(arr < 0.0) or np.any(arr > 1.0):
        raise ValueError("parameter t must lie in [0, 1]")
    return arr


def basis_eval(n: int, t: float) -> NDArray[np.float64]:
    """Evaluate all degree-``n`` Bernstein basis functions at ``t``.

    Uses the triangular recurrence ``B_i^k = (1-t) B_i^{k-1} + t B_{i-1}^{k-1}``
    which stays accurate near both ends of the interval.

    Args:
        n: Degree, ``n >= 0``.
        t: Parameter in ``[0, 1]``.

    Returns:
        Array ``[B_0^n(t), ..., B_n^n(t)]``.
    """
    return basis_matrix(n, _check_t(float(t)).reshape(1))[0]


def basis_matrix(n: int, ts: ArrayLike) -> NDArray[np.float64]:
    """Vectorized :func:`basis_eval`; row ``r`` holds the basis at ``ts[r]``."""
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    t = _check_t(ts).reshape(-1)
    s = 1.0 - t
    out = np.zeros((t.size, n + 1))
    out[:, 0] = 1.0
    for k in range(1, n + 1):
        prev = out[:, :k].copy()
        out[:, :k] = prev * s[:, None]
        out[:, 1 : k + 1] += prev * t[:, None]
    return out


def product_pair(n1: int, i1: int, n2: int, i2: int) -> tuple[float, int, int]:
    """Express ``B_{i1}^{n1} * B_{i2}^{n2}`` as ``coeff * B_{i1+i2}^{n1+n2}``."""
    if not (0 <= i1 <= n1 and 0 <= i2 <= n2):
        raise IndexError(f"basis index out of range: ({n1},{i1}), ({n2},{i2})")
    coeff = binomial_ratio([(n1, i1), (n2, i2)], (n1 + n2, i1 + i2))
    return coeff, n1 + n2, i1 + i2


def integral_of_basis(n: int) -> float:
    """Integral over [0, 1] of any single ``B_i^n``."""
    return 1.0 / (n + 1)


@dataclass(frozen=True)
class BernsteinPoly:
    """Scalar polynomial stored by its Bernstein coefficients on [0, 1]."""

    coeffs: tuple[float, ...]

    def __init__(self, coeffs: ArrayLike) -> None:
        arr = np.asarray(coeffs, dtype=float).reshape(-1)
        if arr.size == 0:
            raise ValueError("BernsteinPoly needs at least one coefficient")
        if not np.all(np.isfinite(arr)):
            raise ValueError("BernsteinPoly coefficients must be finite")
        object.__setattr__(self, "coeffs", tuple(float(c) for c in arr))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def as_array(self) -> NDArray[np.float64]:
        return np.array(self.coeffs)

    def __call__(self, t: ArrayLike) -> NDArray[np.float64] | float:
        t_arr = np.asarray(t, dtype=float)
        values = basis_matrix(self.degree, t_arr) @ self.as_array()
        return float(values[0]) if t_arr.ndim == 0 else values.reshape(t_arr.shape)

    def __mul__(self, other: BernsteinPoly) -> BernsteinPoly:
        if not isinstance(other, BernsteinPoly):
            return NotImplemented
        return multiply(self, other)


def multiply(f: BernsteinPoly, g: BernsteinPoly) -> BernsteinPoly:
    """Product of two Bernstein-form polynomials in degree ``deg f + deg g``.

    Coefficient ``i`` is the binomial-weighted convolution
    ``sum_j C(a,j) C(b,i-j) / C(a+b,i) * f_j * g_{i-j}``.
    """
    a, b = f.degree, g.degree
    fc, gc = f.coeffs, g.coeffs
    out = []
    for i in range(a + b + 1):
        total = 0.0
        for j in range(max(0, i - b), min(a, i) + 1):
            total += binomial_ratio([(a, j), (b, i - j)], (a + b, i)) * fc[j] * gc[i - j]
        out.append(total)
    return BernsteinPoly(out)
