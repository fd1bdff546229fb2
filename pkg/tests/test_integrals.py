"""Closed-form action integrals against the independent quadrature oracle."""

import math

import numpy as np
import pytest

from spectralab import (
    NoClassicalRegion,
    OutOfRange,
    hyperbolic_integral,
    quadratic_turning_points,
    sommerfeld_integral,
    trig_integral,
)

from oracles import hyperbolic_quadrature, sommerfeld_quadrature, trig_quadrature


class TestSommerfeldIntegral:
    def test_coalescence_anchor_is_exactly_zero(self):
        assert sommerfeld_integral(1.0, 2.0, 1.0) == 0.0
        # anchor reached through floating-point 2*sqrt(A*C)
        for A, C in [(0.3, 2.7), (5.0, 0.11), (1e3, 1e-3)]:
            assert sommerfeld_integral(A, 2.0 * math.sqrt(A * C), C) == 0.0

    def test_frozen_values(self):
        assert sommerfeld_integral(1.0, 4.0, 1.0) == pytest.approx(math.pi, rel=1e-15)
        assert sommerfeld_integral(2.0, 6.0, 2.0) == pytest.approx(math.pi / math.sqrt(2), rel=1e-15)

    def test_matches_quadrature(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            A = 10.0 ** rng.uniform(-1, 1)
            C = 10.0 ** rng.uniform(-1, 1)
            B = 2.0 * math.sqrt(A * C) * (1.0 + 10.0 ** rng.uniform(-1.5, 0.5))
            closed = sommerfeld_integral(A, B, C)
            assert closed == pytest.approx(sommerfeld_quadrature(A, B, C), rel=1e-10)

    def test_no_classical_region(self):
        with pytest.raises(NoClassicalRegion):
            sommerfeld_integral(1.0, 1.0, 1.0)

    def test_scaling_by_sqrt_lambda(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            A, C = 10.0 ** rng.uniform(-1, 1, size=2)
            B = 2.0 * math.sqrt(A * C) + 10.0 ** rng.uniform(-2, 1)
            lam = 10.0 ** rng.uniform(-2, 2)
            left = sommerfeld_integral(lam * A, lam * B, lam * C)
            right = math.sqrt(lam) * sommerfeld_integral(A, B, C)
            assert left == pytest.approx(right, rel=1e-12)


class TestTrigIntegral:
    def test_anchor_is_exactly_zero(self):
        for B, C in [(1.0, 4.0), (0.37, 2.2), (9.0, 0.04)]:
            A0 = (math.sqrt(B) + math.sqrt(C)) ** 2
            assert trig_integral(A0, B, C) == 0.0

    def test_frozen_values(self):
        assert trig_integral(16.0, 1.0, 4.0) == pytest.approx(math.pi / 2, rel=1e-15)
        assert trig_integral(9.0, 1.0, 1.0) == pytest.approx(math.pi / 2, rel=1e-15)

    def test_matches_quadrature(self):
        rng = np.random.default_rng(13)
        for _ in range(50):
            B, C = 10.0 ** rng.uniform(-1, 1, size=2)
            A = (math.sqrt(B) + math.sqrt(C) + 10.0 ** rng.uniform(-1, 0.7)) ** 2
            assert trig_integral(A, B, C) == pytest.approx(trig_quadrature(A, B, C), rel=1e-10)

    def test_sommerfeld_decomposition(self):
        # T = cos(2t) splits the arc integral into two radial-form pieces
        rng = np.random.default_rng(17)
        for _ in range(100):
            B, C = 10.0 ** rng.uniform(-1, 1, size=2)
            A = (math.sqrt(B) + math.sqrt(C) + 10.0 ** rng.uniform(-1, 0.7)) ** 2
            pieces = 0.25 * sommerfeld_integral(A, 2.0 * (A - B + C), 4.0 * C) + (
                0.25 * sommerfeld_integral(A, 2.0 * (A + B - C), 4.0 * B)
            )
            assert trig_integral(A, B, C) == pytest.approx(pieces, rel=1e-12)


class TestHyperbolicIntegral:
    def test_closure_anchor(self):
        assert hyperbolic_integral(1.0) == 0.0

    def test_frozen_values(self):
        assert hyperbolic_integral(0.25) == pytest.approx(math.pi / 2, rel=1e-15)
        assert hyperbolic_integral(0.64) == pytest.approx(0.2 * math.pi, rel=1e-15)

    def test_matches_quadrature(self):
        for eps in np.linspace(0.02, 0.99, 40):
            assert hyperbolic_integral(eps) == pytest.approx(hyperbolic_quadrature(eps), rel=1e-10)

    def test_out_of_range(self):
        for eps in (0.0, -0.5, 1.2):
            with pytest.raises(OutOfRange):
                hyperbolic_integral(eps)


class TestTurningPoints:
    def test_radial_roots(self):
        r1, r2 = quadratic_turning_points(1.0, 4.0, 1.0)
        assert r1 == pytest.approx(2.0 - math.sqrt(3.0), rel=1e-14)
        assert r2 == pytest.approx(2.0 + math.sqrt(3.0), rel=1e-14)

    def test_double_root(self):
        r1, r2 = quadratic_turning_points(1.0, 2.0, 1.0)
        assert r1 == pytest.approx(1.0, abs=1e-12)
        assert r2 == pytest.approx(1.0, abs=1e-12)

    def test_trigonometric_roots(self):
        t1, t2 = quadratic_turning_points(16.0, 1.0, 4.0, family="trigonometric")
        # the zeros in T = cos(2t) are (-3 +- sqrt(105))/16
        assert math.cos(2 * t1) == pytest.approx((-3.0 + math.sqrt(105.0)) / 16.0, rel=1e-12)
        assert math.cos(2 * t2) == pytest.approx((-3.0 - math.sqrt(105.0)) / 16.0, rel=1e-12)
        # and they really are zeros of the integrand
        for t in (t1, t2):
            assert 16.0 - 1.0 / math.cos(t) ** 2 - 4.0 / math.sin(t) ** 2 == pytest.approx(0.0, abs=1e-9)

    def test_region_interior_positive(self):
        r1, r2 = quadratic_turning_points(1.0, 4.0, 1.0)
        mid = np.linspace(r1 * 1.001, r2 * 0.999, 77)
        assert np.all(-1.0 + 4.0 / mid - 1.0 / mid**2 > 0)


class TestDerivativeIdentities:
    """Differentiation under the integral sign, checked by central differences."""

    def test_radial_dI_dB(self):
        rng = np.random.default_rng(19)
        for _ in range(10):
            A, C = 10.0 ** rng.uniform(-0.5, 0.5, size=2)
            B = 2.0 * math.sqrt(A * C) + 10.0 ** rng.uniform(-0.3, 0.5)
            h = 1e-5 * B
            fd = (sommerfeld_quadrature(A, B + h, C) - sommerfeld_quadrature(A, B - h, C)) / (2 * h)
            assert fd == pytest.approx(math.pi / (2.0 * math.sqrt(A)), rel=1e-6)

    def test_trig_dI_dA(self):
        rng = np.random.default_rng(23)
        for _ in range(10):
            B, C = 10.0 ** rng.uniform(-0.5, 0.5, size=2)
            A = (math.sqrt(B) + math.sqrt(C) + 10.0 ** rng.uniform(-0.3, 0.5)) ** 2
            h = 1e-5 * A
            fd = (trig_quadrature(A + h, B, C) - trig_quadrature(A - h, B, C)) / (2 * h)
            assert fd == pytest.approx(math.pi / (4.0 * math.sqrt(A)), rel=1e-6)

    def test_hyperbolic_dJ_deps(self):
        for eps in np.linspace(0.05, 0.9, 10):
            h = 1e-5 * eps
            fd = (hyperbolic_quadrature(eps + h) - hyperbolic_quadrature(eps - h)) / (2 * h)
            assert fd == pytest.approx(-math.pi / (2.0 * math.sqrt(eps)), rel=1e-6)
