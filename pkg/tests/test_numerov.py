"""Shooting oracle: node theorem, certification against closed forms, order."""

import math

import pytest

from spectralab import (
    InsufficientGrids,
    NoSuchBoundState,
    RadialGrid,
    UnsupportedDimension,
    build_model,
    convergence_order,
    count_nodes,
    default_grid,
    exact_level,
    oracle_spectrum,
    solve_eigenvalue,
)


@pytest.fixture(scope="module")
def coulomb():
    return build_model("coulomb", Z=1.0, l=0, langer=False)


class TestCountNodes:
    def test_coulomb_between_levels(self, coulomb):
        grid = default_grid(coulomb, 1)
        assert count_nodes(coulomb, -0.3, grid) == 1  # between ground and first excited
        assert count_nodes(coulomb, -0.6, grid) == 0  # below the ground state
        assert count_nodes(coulomb, -0.08, grid) == 2

    def test_mpt_between_levels(self):
        m = build_model("modified_poschl_teller", V0=6.0, langer=False)
        grid = default_grid(m, 1)
        assert count_nodes(m, -2.0, grid) == 1  # between -4 and -1

    def test_node_theorem(self):
        # the n-th eigenfunction has n interior nodes: counts flip across levels
        cases = [
            build_model("coulomb", Z=1.0, l=0, langer=False),
            build_model("relativistic_kg", mu=0.3, l=0, langer=False),
            build_model("dirac", mu=0.5, j=0.5, langer=False),
            build_model("kratzer", gamma2=2.0, l=0, langer=False),
            build_model("kepler_nd", Z=1.0, l=0, dim=5, langer=False),
            build_model("oscillator_nd", l=0, dim=3, langer=False),
            build_model("poschl_teller", a=2.0, b=2.0, langer=False),
        ]
        for m in cases:
            grid = default_grid(m, 3)
            for n_r in range(4):
                e = exact_level(m, n_r).value
                below = e - 1e-4 * abs(e)
                above = e + 1e-4 * abs(e)
                assert count_nodes(m, below, grid) == n_r, (m.kind, n_r)
                assert count_nodes(m, above, grid) == n_r + 1, (m.kind, n_r)

    def test_node_theorem_mpt(self):
        m = build_model("modified_poschl_teller", V0=6.0, langer=False)
        grid = default_grid(m, 1)
        for n_r, e in [(0, -4.0), (1, -1.0)]:
            assert count_nodes(m, e - 1e-4, grid) == n_r
            assert count_nodes(m, e + 1e-4, grid) == n_r + 1


class TestSolveEigenvalue:
    def test_coulomb_first_excited(self, coulomb):
        res = solve_eigenvalue(coulomb, 1)
        assert res.energy == pytest.approx(-0.125, abs=1e-6)
        assert res.nodes == 1

    def test_dirac_ground_state(self):
        m = build_model("dirac", mu=0.5, j=0.5, langer=False)
        res = solve_eigenvalue(m, 0)
        assert res.energy == pytest.approx(math.sqrt(0.75), rel=1e-6)

    def test_oscillator_dimension_constant(self):
        # adjudicates the additive constant: dim/2, not 1/2, at dim = 3
        m = build_model("oscillator_nd", l=0, dim=3, langer=False)
        res = solve_eigenvalue(m, 0)
        assert res.energy == pytest.approx(1.5, rel=1e-6)
        assert abs(res.energy - 0.5) > 0.9

    def test_langer_model_is_flipped_internally(self):
        m = build_model("coulomb", Z=1.0, l=0, langer=True)
        assert solve_eigenvalue(m, 0).energy == pytest.approx(-0.5, rel=1e-6)

    def test_kepler_1d_even_rejected(self):
        m = build_model("kepler_nd", Z=1.0, l=0, dim=1, langer=False)
        with pytest.raises(UnsupportedDimension):
            solve_eigenvalue(m, 1)

    def test_dirac_partner_towers_overlap(self):
        # the flipped second-order equation must reproduce the default tower
        # shifted by one rung (spot check at j = 1/2 and 3/2)
        for j, mu in [(0.5, 0.5), (1.5, 0.8)]:
            base = build_model("dirac", mu=mu, j=j, langer=False)
            flip = build_model("dirac", mu=mu, j=j, nu_sign=1, langer=False)
            for n_r in (0, 1):
                e_flip = solve_eigenvalue(flip, n_r).energy
                e_base = solve_eigenvalue(base, n_r + 1).energy
                assert e_flip == pytest.approx(e_base, rel=1e-8)


class TestOracleSpectrum:
    def test_coulomb_tower(self, coulomb):
        values = [lv.value for lv in oracle_spectrum(coulomb, 3)]
        assert values == pytest.approx([-0.5, -0.125, -1.0 / 18.0], rel=1e-6)
        assert all(lv.method == "numerov" for lv in oracle_spectrum(coulomb, 1))

    def test_mpt_excludes_threshold(self):
        m = build_model("modified_poschl_teller", V0=6.0, langer=False)
        values = [lv.value for lv in oracle_spectrum(m, 3)]
        assert len(values) == 2  # the zero-binding n = 2 member is not normalizable
        assert values == pytest.approx([-4.0, -1.0], rel=1e-6, abs=1e-8)

    def test_poschl_teller_levels(self):
        m = build_model("poschl_teller", a=2.0, b=2.0, V0=1.0, langer=False)
        values = [lv.value for lv in oracle_spectrum(m, 2)]
        assert values == pytest.approx([8.0, 18.0], rel=1e-6)


class TestGridBehavior:
    def test_convergence_order_fourth(self, coulomb):
        g = default_grid(coulomb, 0)
        grids = [RadialGrid(g.x_min, g.x_max, p, g.coordinate) for p in (2001, 4001, 8001)]
        order = convergence_order(coulomb, 0, grids)
        assert 3.5 <= order <= 4.5

    def test_convergence_order_oscillator(self):
        m = build_model("oscillator_nd", l=1, dim=3, langer=False)
        g = default_grid(m, 1)
        grids = [RadialGrid(g.x_min, g.x_max, p, g.coordinate) for p in (1501, 3001, 6001)]
        order = convergence_order(m, 1, grids)
        assert 3.5 <= order <= 4.5

    def test_insufficient_grids(self, coulomb):
        g = RadialGrid(1e-6, 100.0, 2001, "log")
        with pytest.raises(InsufficientGrids):
            convergence_order(coulomb, 0, [g, g, g])
        with pytest.raises(InsufficientGrids):
            convergence_order(coulomb, 0, [g, RadialGrid(1e-6, 100.0, 4001, "log")])

    def test_doubling_x_max_is_inert(self, coulomb):
        g = default_grid(coulomb, 1)
        e1 = solve_eigenvalue(coulomb, 1, g).energy
        # double the box, keeping the step near the well (extra points absorb it)
        if g.coordinate == "log":
            extra = int(round(math.log(2.0) / g.spacing))
            g2 = RadialGrid(g.x_min, 2.0 * g.x_max, g.points + extra, "log")
        else:
            g2 = RadialGrid(g.x_min, 2 * g.x_max, 2 * g.points - 1, "linear")
        e2 = solve_eigenvalue(coulomb, 1, g2).energy
        assert abs(e2 - e1) / abs(e1) < 1e-8

    def test_explicit_grid_accepted(self, coulomb):
        g = RadialGrid(1e-6, 600.0, 20001, "log")
        assert solve_eigenvalue(coulomb, 0, g).energy == pytest.approx(-0.5, rel=1e-6)

    def test_grid_validation(self):
        with pytest.raises(Exception):
            RadialGrid(1.0, 0.5, 2001)
        with pytest.raises(Exception):
            RadialGrid(-1.0, 10.0, 2001, "log")
        with pytest.raises(Exception):
            RadialGrid(0.0, 1.0, 8)


class TestCertificationSweep:
    """Closed formulas against the oracle at 1e-6, every kind, n_r <= 3."""

    @pytest.mark.parametrize(
        "model",
        [
            build_model("coulomb", Z=1.0, l=0, langer=False),
            build_model("coulomb", Z=1.0, l=1, langer=False),
            build_model("relativistic_kg", mu=0.3, l=0, langer=False),
            build_model("dirac", mu=0.5, j=0.5, langer=False),
            build_model("kratzer", gamma2=2.0, l=0, langer=False),
            build_model("kepler_nd", Z=1.0, l=0, dim=5, langer=False),
            build_model("oscillator_nd", l=0, dim=3, langer=False),
            build_model("oscillator_nd", l=0, dim=1, langer=False),
            build_model("poschl_teller", a=2.0, b=2.0, langer=False),
            build_model("modified_poschl_teller", V0=6.0, langer=False),
        ],
        ids=lambda m: f"{m.kind.value}-d{m.dim}-{sorted(m.params.items())}"[:45],
    )
    def test_levels_match(self, model):
        top = 1 if model.kind.value == "modified_poschl_teller" else 3
        for n_r in range(top + 1):
            exact = exact_level(model, n_r).value
            got = solve_eigenvalue(model, n_r).energy
            assert got == pytest.approx(exact, rel=1e-6), (model.kind, n_r)
