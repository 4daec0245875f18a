import math

import numpy as np
import pytest

from hurwitzlab import QuadratureGrid, grid_for_degree, periodic_integral
from hurwitzlab.errors import EmptyGrid
from hurwitzlab.quadrature import gauss_panels

PI = math.pi
TWO_PI = 2.0 * math.pi


def test_cos_squared_exact():
    phis = np.linspace(0, TWO_PI, 8, endpoint=False)
    assert periodic_integral(np.cos(phis) ** 2) == pytest.approx(PI, rel=1e-15)


def test_constant():
    assert periodic_integral(np.ones(4)) == pytest.approx(TWO_PI, rel=1e-15)


def test_aliasing_at_degree_m():
    # cos(M phi_j) = 1 at every node: the rule sees the mean, not zero
    m = 16
    phis = np.linspace(0, TWO_PI, m, endpoint=False)
    assert periodic_integral(np.cos(m * phis)) == pytest.approx(TWO_PI, rel=1e-12)


def test_exact_below_degree_m():
    m = 32
    phis = np.linspace(0, TWO_PI, m, endpoint=False)
    for k in range(1, m):
        assert periodic_integral(np.cos(k * phis)) == pytest.approx(0.0, abs=1e-12)


def test_empty_grid():
    with pytest.raises(EmptyGrid):
        periodic_integral([])
    with pytest.raises(EmptyGrid):
        periodic_integral([1.0])


def test_grid_invariants():
    with pytest.raises(ValueError):
        QuadratureGrid(100)  # not a power of two
    with pytest.raises(ValueError):
        QuadratureGrid(8)  # too small
    g = grid_for_degree(8)
    assert g.m == 256
    assert g.m >= 4 * 8 + 8
    assert grid_for_degree(100).m == 512
    assert g.phis[0] == 0.0 and len(g.phis) == g.m


def test_gauss_panels_polynomial():
    nodes, weights = gauss_panels([0.0, 0.4, 1.0], points=8)
    val = float(np.sum(weights * nodes**7))
    assert val == pytest.approx(1.0 / 8.0, rel=1e-14)
