import math

import mpmath
import numpy as np
import pytest

from bezapprox.curves import (
    BezierCurve,
    RationalBezierCurve,
    endpoint_derivatives,
    endpoint_jet,
    eval_bezier,
    eval_rational,
    numerator,
)
from bezapprox.errors import CurveValidationError

from .conftest import random_curve


def fd_derivatives(curve: RationalBezierCurve, t0: float) -> tuple[np.ndarray, np.ndarray]:
    """4th-order central stencils for P' and P'' at t0, in 40-digit arithmetic.

    The rational function is evaluated from its defining sums, so the stencil
    may step slightly outside [0, 1].
    """
    mpmath.mp.dps = 40
    n = curve.degree
    pts = [[mpmath.mpf(float(c)) for c in p] for p in curve.points]
    ws = [mpmath.mpf(float(w)) for w in curve.weights]

    def P(t):
        b = [math.comb(n, i) * t**i * (1 - t) ** (n - i) for i in range(n + 1)]
        den = sum(w * bi for w, bi in zip(ws, b))
        return [sum(w * bi * p[c] for w, bi, p in zip(ws, b, pts)) / den for c in range(len(pts[0]))]

    h = mpmath.mpf("1e-9")
    t = mpmath.mpf(t0)
    f = {k: P(t + k * h) for k in (-2, -1, 0, 1, 2)}
    d1 = [(f[-2][c] - 8 * f[-1][c] + 8 * f[1][c] - f[2][c]) / (12 * h) for c in range(len(pts[0]))]
    d2 = [
        (-f[-2][c] + 16 * f[-1][c] - 30 * f[0][c] + 16 * f[1][c] - f[2][c]) / (12 * h**2)
        for c in range(len(pts[0]))
    ]
    return np.array(d1, dtype=float), np.array(d2, dtype=float)


class TestValidation:
    def test_rejects_zero_weight(self):
        with pytest.raises(CurveValidationError, match="positive"):
            RationalBezierCurve([(0, 0), (1, 1), (2, 0)], [1, 0, 1])

    def test_rejects_length_mismatch(self):
        with pytest.raises(CurveValidationError, match="equal length"):
            RationalBezierCurve([(0, 0), (1, 1), (2, 0)], [1, 1])

    def test_rejects_single_point(self):
        with pytest.raises(CurveValidationError):
            BezierCurve([(0, 0)])

    @pytest.mark.parametrize("dim", [1, 4])
    def test_rejects_unsupported_dimension(self, dim):
        with pytest.raises(CurveValidationError, match="dimension"):
            BezierCurve(np.zeros((3, dim)))

    def test_rejects_nonfinite(self):
        with pytest.raises(CurveValidationError):
            BezierCurve([(0, 0), (np.nan, 1)])

    def test_rejects_non_standard_form(self):
        with pytest.raises(CurveValidationError, match="standard form"):
            RationalBezierCurve([(0, 0), (1, 1), (2, 0)], [2, 1, 1])

    def test_normalize_endpoints_reparameterizes(self, rng):
        pts = rng.uniform(-1, 1, (5, 2))
        w = np.array([2.0, 0.7, 3.0, 1.1, 0.5])
        original_w = w.copy()
        curve = RationalBezierCurve(pts, w, normalize_endpoints=True)
        assert curve.weights[0] == curve.weights[-1] == 1.0
        # same point set under t(s) = b s / (a (1 - s) + b s), a = w0^(-1/n), b = wn^(-1/n)
        n = 4
        a, b = original_w[0] ** (-1 / n), original_w[-1] ** (-1 / n)
        for s in np.linspace(0, 1, 11):
            t = b * s / (a * (1 - s) + b * s)
            basis = np.array([math.comb(n, i) * t**i * (1 - t) ** (n - i) for i in range(n + 1)])
            expected = (basis * original_w) @ pts / (basis @ original_w)
            np.testing.assert_allclose(curve(s), expected, atol=1e-13)

    def test_immutable(self, example1):
        with pytest.raises(ValueError):
            example1.points[0, 0] = 5.0


class TestEvaluation:
    def test_bezier_endpoints(self):
        q = BezierCurve([(0, 0), (1, 1)])
        np.testing.assert_array_equal(eval_bezier(q, 0.0), [0, 0])
        q = BezierCurve([(0, 0), (1, 0), (2, 2), (3, -1)])
        np.testing.assert_array_equal(eval_bezier(q, 1.0), [3, -1])

    def test_bezier_de_casteljau_hand(self):
        q = BezierCurve([(0, 0), (1, 0), (2, 2)])
        np.testing.assert_allclose(eval_bezier(q, 0.5), [1.0, 0.5], rtol=1e-15)

    def test_rejects_bad_t(self, example1):
        with pytest.raises(ValueError):
            eval_bezier(BezierCurve([(0, 0), (1, 1)]), 1.5)
        with pytest.raises(ValueError):
            eval_rational(example1, -0.1)

    def test_rational_endpoints(self, example1):
        np.testing.assert_array_equal(eval_rational(example1, 0.0), [0.0, 0.0])
        np.testing.assert_array_equal(eval_rational(example1, 1.0), [1.0, 0.0])

    def test_unit_weights_equal_polynomial(self, rng):
        pts = rng.uniform(-3, 3, (6, 3))
        P = RationalBezierCurve(pts, np.ones(6))
        Q = BezierCurve(pts)
        t = rng.uniform(0, 1, 100)
        np.testing.assert_allclose(P.sample(t), Q.sample(t), rtol=0, atol=1e-13)

    def test_endpoint_interpolation_random(self, rng):
        for _ in range(20):
            P = random_curve(rng, int(rng.integers(1, 9)))
            assert np.max(np.abs(P(0.0) - P.points[0])) <= 1e-15
            assert np.max(np.abs(P(1.0) - P.points[-1])) <= 1e-15

    def test_weight_scaling_invariance(self, rng):
        P = random_curve(rng, 6)
        t = rng.uniform(0, 1, 50)
        base = P.sample(t)
        for lam in (1e-3, 0.37, 42.0):
            scaled = RationalBezierCurve.__new__(RationalBezierCurve)
            # bypass standard-form validation: scaled weights are deliberately non-standard
            object.__setattr__(scaled, "points", P.points)
            object.__setattr__(scaled, "weights", P.weights * lam)
            np.testing.assert_allclose(scaled.sample(t), base, rtol=0, atol=1e-13)


class TestNumerator:
    def test_unit_weights(self, rng):
        pts = rng.uniform(-1, 1, (4, 2))
        xs, w = numerator(RationalBezierCurve(pts, np.ones(4)))
        for c in range(2):
            np.testing.assert_array_equal(xs[c].coeffs, pts[:, c])
        assert w.coeffs == (1.0, 1.0, 1.0, 1.0)

    def test_example1(self, example1):
        xs, w = numerator(example1)
        np.testing.assert_allclose(xs[0].coeffs, [0, 0.24, 1.2, 1], rtol=1e-15)
        assert w.coeffs == (1.0, 1.2, 1.5, 1.0)

    def test_quotient_reproduces_curve(self, example3):
        xs, w = numerator(example3)
        t = np.linspace(0, 1, 23)
        ratio = np.column_stack([x(t) for x in xs]) / w(t)[:, None]
        np.testing.assert_allclose(ratio, example3.sample(t), atol=1e-14)


class TestEndpointDerivatives:
    def test_example1_first(self, example1):
        np.testing.assert_allclose(endpoint_derivatives(example1, 1, "start"), [0.72, 5.4], rtol=1e-14)

    def test_order_zero(self, example3):
        np.testing.assert_array_equal(endpoint_derivatives(example3, 0, "start"), example3.points[0])
        np.testing.assert_array_equal(endpoint_derivatives(example3, 0, "finish"), example3.points[-1])

    def test_unit_weight_cubic_second(self, rng):
        pts = rng.uniform(-1, 1, (4, 2))
        P = RationalBezierCurve(pts, np.ones(4))
        expected = 6 * (pts[2] - 2 * pts[1] + pts[0])
        np.testing.assert_allclose(endpoint_derivatives(P, 2, "start"), expected, rtol=1e-13)
        _, d2 = fd_derivatives(P, 0.0)
        np.testing.assert_allclose(d2, expected, rtol=1e-5)

    def test_errors(self, example1):
        with pytest.raises(ValueError):
            endpoint_derivatives(example1, 3)
        line = RationalBezierCurve([(0, 0), (1, 1)], [1, 1])
        with pytest.raises(ValueError):
            endpoint_derivatives(line, 2)
        with pytest.raises(ValueError):
            endpoint_derivatives(example1, 1, "middle")

    @pytest.mark.parametrize("seed", range(20))
    def test_against_finite_differences(self, seed):
        rng = np.random.default_rng(seed)
        P = random_curve(rng, int(rng.integers(2, 9)))
        for t0, end in ((0.0, "start"), (1.0, "finish")):
            d1, d2 = fd_derivatives(P, t0)
            for exact, fd in ((endpoint_derivatives(P, 1, end), d1), (endpoint_derivatives(P, 2, end), d2)):
                assert np.linalg.norm(exact - fd) <= 1e-5 * np.linalg.norm(fd)

    def test_finish_second_derivative_weight_index(self):
        # p_{n-2} must carry (n-1) w_{n-2}; using w_{n-1} there disagrees with the curve
        P = RationalBezierCurve([(0, 0), (1, 2), (2, -1), (3, 1), (4, 0)], [1, 0.5, 3.0, 0.8, 1])
        n, p, w = 4, P.points, P.weights
        a = w[n - 1]
        swapped = n * (
            (2 * a * (n * a - 1) + w[n - 2] * (1 - n)) * p[n]
            + 2 * a * (1 - n * a) * p[n - 1]
            + (n - 1) * a * p[n - 2]
        )
        _, d2 = fd_derivatives(P, 1.0)
        np.testing.assert_allclose(endpoint_derivatives(P, 2, "finish"), d2, rtol=1e-7)
        assert np.linalg.norm(swapped - d2) > 1e-2 * np.linalg.norm(d2)

    def test_jet(self, example1):
        jet = endpoint_jet(example1, 1, "finish")
        assert jet.order == 1 and jet.second is None
        np.testing.assert_allclose(jet[1], 3 * 1.5 * (np.array([1, 0]) - np.array([0.8, 1.5])))
        with pytest.raises(KeyError):
            jet[2]
