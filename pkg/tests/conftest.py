from __future__ import annotations

import numpy as np
import pytest
from hypothesis import settings

from bezapprox.curves import RationalBezierCurve

settings.register_profile("repo", max_examples=60, deadline=None, derandomize=True)
settings.load_profile("repo")

EXAMPLE1 = dict(points=[(0, 0), (0.2, 1.5), (0.8, 1.5), (1, 0)], weights=[1, 1.2, 1.5, 1])
EXAMPLE3 = dict(
    points=[(0, 0), (0.2, 1.5), (0.5, 1.0), (0.8, 1.5), (1, 0)], weights=[1, 0.06, 0.08, 0.05, 1]
)


def random_curve(rng: np.random.Generator, n: int, dim: int = 2, wlo: float = 0.05, whi: float = 20.0):
    """Standard-form curve with inner weights log-uniform in [wlo, whi]."""
    w = np.exp(rng.uniform(np.log(wlo), np.log(whi), n + 1))
    w[0] = w[-1] = 1.0
    return RationalBezierCurve(rng.uniform(-1.0, 1.0, (n + 1, dim)), w)


@pytest.fixture
def example1() -> RationalBezierCurve:
    return RationalBezierCurve(**EXAMPLE1)


@pytest.fixture
def example3() -> RationalBezierCurve:
    return RationalBezierCurve(**EXAMPLE3)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
