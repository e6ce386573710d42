"""Shared fixtures and the randomized-problem generator."""

import math

import numpy as np
import pytest

from spiralinv import G2Point, prepare
from spiralinv.errors import GateError, NoSpiralExists, WideLens


def fig_long_points():
    """Long-spiral regression data: lens angle 90 deg, curvatures -0.4 / 0.3."""
    return (G2Point(-1.0, 0.0, math.radians(-150.0), -0.4),
            G2Point(1.0, 0.0, math.radians(-120.0), 0.3))


def cubic_demo_points():
    """Short-spiral data with a known rational-cubic member."""
    return (G2Point(-1.0, 0.0, -0.1, 0.0),
            G2Point(1.0, 0.0, 1.5, 8.26))


def two_kind_points():
    """Antisymmetric long data: the theta=0 member passes through infinity,
    splitting the family into two sub-families."""
    return (G2Point(-1.0, 0.0, math.radians(-165.0), -1.5),
            G2Point(1.0, 0.0, math.radians(-165.0), 1.5))


@pytest.fixture(scope="session")
def fig_long_problem():
    return prepare(*fig_long_points())


@pytest.fixture(scope="session")
def cubic_demo_problem():
    return prepare(*cubic_demo_points())


def generate_valid_problems(n, seed=20240901, sigma_margin=1e-3):
    """n prepared problems with Q < 0 and sigma strictly inside (0, pi).

    Rejection sampling over boundary angles and curvature offsets; half the
    draws are biased toward long-spiral angle sums.
    """
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        if rng.random() < 0.5:
            alpha = rng.uniform(-math.pi, -math.pi / 2)
            beta = rng.uniform(-math.pi, -math.pi / 2)
        else:
            alpha = rng.uniform(-math.pi, math.pi)
            beta = rng.uniform(-math.pi, math.pi)
        u = math.exp(rng.uniform(math.log(0.05), math.log(5.0)))
        v = math.exp(rng.uniform(math.log(0.05), math.log(5.0)))
        a = -u - math.sin(alpha)
        b = v + math.sin(beta)
        try:
            p = prepare(G2Point(-1.0, 0.0, alpha, a), G2Point(1.0, 0.0, beta, b))
        except (NoSpiralExists, WideLens, GateError):
            continue
        if not (sigma_margin < p.sigma < math.pi - sigma_margin):
            continue
        out.append(p)
    return out


@pytest.fixture(scope="session")
def random_problems_small():
    return generate_valid_problems(40)
