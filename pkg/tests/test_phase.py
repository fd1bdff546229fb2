"""Numeric phase integral engine against the analytic closed forms."""

import math

import numpy as np
import pytest

from spectralab import (
    DegenerateWell,
    InvalidParameter,
    NoSuchBoundState,
    build_model,
    exact_level,
    find_turning_points,
    hyperbolic_integral,
    phase_integral,
    quantize_level,
    sommerfeld_integral,
    trig_integral,
    wkb_spectrum,
)


class TestTurningPoints:
    def test_coulomb_quadratic_roots(self):
        m = build_model("coulomb", Z=1.0, l=0)
        x1, x2 = find_turning_points(m, -0.125)
        assert x1 == pytest.approx(4.0 - math.sqrt(15.0), rel=1e-12)
        assert x2 == pytest.approx(4.0 + math.sqrt(15.0), rel=1e-12)

    def test_degenerate_well(self):
        # B = 2*sqrt(A*C) at E = -Z**2/(2*C) for the coulomb triple
        m = build_model("coulomb", Z=1.0, l=0)
        with pytest.raises(DegenerateWell):
            find_turning_points(m, -2.0)

    def test_mpt_sech_inversion(self):
        m = build_model("modified_poschl_teller", V0=6.0)
        x1, x2 = find_turning_points(m, -1.5)  # eps = 0.25
        x0 = math.acosh(2.0)  # arcsech(1/2)
        assert x1 == pytest.approx(-x0, rel=1e-10)
        assert x2 == pytest.approx(x0, rel=1e-10)
        assert x0 == pytest.approx(1.3169579, rel=1e-7)

    def test_requires_langer_model(self):
        m = build_model("coulomb", Z=1.0, l=0, langer=False)
        with pytest.raises(InvalidParameter):
            find_turning_points(m, -0.125)

    def test_momentum_positive_between(self):
        from spectralab import effective_momentum_squared

        m = build_model("kratzer", gamma2=2.0, l=1)
        x1, x2 = find_turning_points(m, -0.3)
        x = np.linspace(x1 * 1.001, x2 * 0.999, 50)
        assert np.all(effective_momentum_squared(m, -0.3, x) > 0)


class TestPhaseIntegral:
    def test_coulomb_frozen_value(self):
        m = build_model("coulomb", Z=1.0, l=0)
        res = phase_integral(m, -0.125)
        assert res.value == pytest.approx(1.5 * math.pi, rel=1e-12)
        assert res.est_error <= 1e-10

    def test_mpt_scaled_hyperbolic(self):
        m = build_model("modified_poschl_teller", V0=6.0)
        res = phase_integral(m, -1.5)
        assert res.value == pytest.approx(math.sqrt(6.0) * hyperbolic_integral(0.25), rel=1e-10)
        assert res.value == pytest.approx(3.8476, rel=1e-4)

    def test_poschl_teller_ground_phase(self):
        m = build_model("poschl_teller", a=2.0, b=2.0)
        res = phase_integral(m, exact_level(m, 0).value)
        assert res.value == pytest.approx(0.5 * math.pi, rel=1e-10)

    def test_monotone_in_energy(self):
        for model, window in [
            (build_model("coulomb", Z=1.0, l=0), (-0.49, -0.01)),
            (build_model("dirac", mu=0.5, j=0.5), (0.87, 0.995)),
            (build_model("kratzer", gamma2=2.0, l=0), (-0.95, -0.05)),
            (build_model("oscillator_nd", l=1, dim=3), (2.6, 12.0)),
            (build_model("poschl_teller", a=2.0, b=3.0), (14.0, 60.0)),
            (build_model("modified_poschl_teller", V0=6.0), (-5.9, -0.05)),
        ]:
            es = np.linspace(*window, 20)
            phases = [phase_integral(model, e).value for e in es]
            assert all(b > a for a, b in zip(phases, phases[1:])), model.kind

    def test_deterministic(self):
        m = build_model("dirac", mu=0.5, j=0.5)
        a = phase_integral(m, 0.9)
        b = phase_integral(m, 0.9)
        assert a.value == b.value and a.quadrature_nodes == b.quadrature_nodes

    def test_quantize_deterministic(self):
        m = build_model("kratzer", gamma2=2.0, l=0)
        assert quantize_level(m, 1).value == quantize_level(m, 1).value


def _agreement_cases(rng):
    for _ in range(12):
        m = build_model("coulomb", Z=rng.uniform(0.5, 2.0), l=int(rng.integers(0, 3)))
        yield m, rng.uniform(exact_level(m, 0).value, exact_level(m, 4).value)
    for _ in range(12):
        j = rng.choice([0.5, 1.5])
        m = build_model("dirac", mu=rng.uniform(0.05, j + 0.45), j=j)
        yield m, rng.uniform(exact_level(m, 0).value, exact_level(m, 4).value)
    for _ in range(12):
        m = build_model("kratzer", gamma2=rng.uniform(0.5, 10.0), l=int(rng.integers(0, 3)))
        yield m, rng.uniform(exact_level(m, 0).value, exact_level(m, 4).value)


class TestOracleAgreement:
    def test_radial_matches_sommerfeld_form(self):
        from spectralab import abc_coefficients

        rng = np.random.default_rng(37)
        for model, E in _agreement_cases(rng):
            t = abc_coefficients(model, E)
            closed = sommerfeld_integral(t.A, t.B, t.C)
            assert phase_integral(model, E).value == pytest.approx(closed, rel=1e-9)

    def test_oscillator_matches_after_substitution(self):
        from spectralab import abc_coefficients

        rng = np.random.default_rng(41)
        for dim in (1, 3, 5):
            l = 1 if dim == 1 else int(rng.integers(0 if dim > 2 else 1, 3))
            m = build_model("oscillator_nd", l=l, dim=dim)
            for E in np.linspace(exact_level(m, 0).value, exact_level(m, 3).value, 4):
                t = abc_coefficients(m, E)
                closed = sommerfeld_integral(t.A, t.B, t.C)
                assert phase_integral(m, E).value == pytest.approx(closed, rel=1e-9)

    def test_trigonometric_matches(self):
        from spectralab import abc_coefficients

        for a, b in [(1.5, 2.0), (2.0, 3.0)]:
            m = build_model("poschl_teller", a=a, b=b)
            for E in np.linspace(exact_level(m, 0).value, exact_level(m, 3).value, 4):
                t = abc_coefficients(m, E)
                closed = trig_integral(t.A, t.B, t.C)
                assert phase_integral(m, E).value == pytest.approx(closed, rel=1e-9)

    def test_hyperbolic_matches(self):
        m = build_model("modified_poschl_teller", V0=6.0, alpha=2.0)
        for eps in (0.1, 0.25, 0.7, 0.95):
            closed = math.sqrt(6.0) * hyperbolic_integral(eps)
            assert phase_integral(m, -6.0 * eps).value == pytest.approx(closed, rel=1e-9)


class TestQuantizeLevel:
    def test_coulomb_ground(self):
        m = build_model("coulomb", Z=1.0, l=0)
        assert quantize_level(m, 0).value == pytest.approx(-0.5, abs=1e-10)

    def test_dirac_ground(self):
        m = build_model("dirac", mu=0.5, j=0.5)
        lv = quantize_level(m, 0)
        assert lv.value == pytest.approx(math.sqrt(0.75), abs=1e-10)
        assert lv.method == "wkb_numeric"

    def test_mpt_matches_semiclassical_not_exact(self):
        m = build_model("modified_poschl_teller", V0=6.0)
        value = quantize_level(m, 0).value
        assert value == pytest.approx(-(math.sqrt(6.0) - 0.5) ** 2, abs=1e-9)
        assert abs(value - (-4.0)) > 0.19

    def test_quantization_residual(self):
        m = build_model("kratzer", gamma2=10.0, l=1)
        lv = quantize_level(m, 2, tol=1e-10)
        assert phase_integral(m, lv.value).value == pytest.approx(2.5 * math.pi, abs=1e-10)

    def test_no_such_bound_state(self):
        m = build_model("modified_poschl_teller", V0=6.0)
        with pytest.raises(NoSuchBoundState):
            quantize_level(m, 2)


class TestWkbSpectrum:
    def test_coulomb_tower(self):
        m = build_model("coulomb", Z=1.0, l=0)
        values = [lv.value for lv in wkb_spectrum(m, 3)]
        assert values == pytest.approx([-0.5, -0.125, -1.0 / 18.0], abs=1e-9)

    def test_mpt_truncates_at_two(self):
        m = build_model("modified_poschl_teller", V0=6.0)
        levels = wkb_spectrum(m, 5)
        assert len(levels) == 2

    def test_oscillator_levels(self):
        m = build_model("oscillator_nd", l=1, dim=3)
        values = [lv.value for lv in wkb_spectrum(m, 2)]
        assert values == pytest.approx([2.5, 4.5], abs=1e-9)
