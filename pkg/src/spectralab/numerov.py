"""Numerov shooting solver for the original (un-Langered) wave equations.

Independent certification route: fourth-order three-term recursion, Sturm
node counting to bracket the n_r-th eigenvalue, then refinement on the
discrete matching condition between outward and inward integrations.

Radial kinds integrate on a grid uniform in z = ln x (the same change of
variables that regularizes the semiclassical treatment near the origin):
with u = e^{z/2} v the equation becomes v'' + q1(z) v = 0 with
q1 = -1/4 + x^2 q(x), which a uniform-in-x grid of practical size cannot
resolve across the 1/x and 1/x^2 origin structure.  The one-dimensional
wells, and the dim = 1 oscillator, stay on uniform-in-x grids.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy.optimize import brentq

from .errors import (
    BracketingFailed,
    GridTooCoarse,
    InsufficientGrids,
    InvalidParameter,
    NoSuchBoundState,
    Overflow,
    UnsupportedDimension,
)
from .potentials import (
    PotentialKind,
    PotentialModel,
    bound_energy_window,
    effective_momentum_squared,
    energy_scale,
)
from .spectra import EnergyLevel, _model_state

try:
    from numba import njit

    _HAVE_NUMBA = True
except Exception:  # pragma: no cover - numba is an optional accelerator
    _HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(fn):
            return fn

        return wrap


__all__ = [
    "RadialGrid",
    "ShootingResult",
    "default_grid",
    "count_nodes",
    "solve_eigenvalue",
    "oracle_spectrum",
    "convergence_order",
]

_RESCALE_LIMIT = 1e250
_TAIL_SEED = 1e-120


@dataclass(frozen=True)
class RadialGrid:
    """Uniform integration grid; ``coordinate`` selects x or z = ln x."""

    x_min: float
    x_max: float
    points: int = 20001
    coordinate: str = "linear"

    def __post_init__(self):
        if self.points < 64:
            raise InvalidParameter(f"points must be >= 64, got {self.points}")
        if not self.x_min < self.x_max:
            raise InvalidParameter("x_min must be below x_max")
        if self.coordinate not in ("linear", "log"):
            raise InvalidParameter(f"coordinate must be 'linear' or 'log', got {self.coordinate!r}")
        if self.coordinate == "log" and self.x_min <= 0:
            raise InvalidParameter("log grids need x_min > 0")

    @property
    def spacing(self) -> float:
        """Step of the integration coordinate (dz for log grids)."""
        if self.coordinate == "log":
            return math.log(self.x_max / self.x_min) / (self.points - 1)
        return (self.x_max - self.x_min) / (self.points - 1)

    def positions(self) -> np.ndarray:
        if self.coordinate == "log":
            return np.exp(np.linspace(math.log(self.x_min), math.log(self.x_max), self.points))
        return np.linspace(self.x_min, self.x_max, self.points)


@dataclass(frozen=True)
class ShootingResult:
    energy: float
    nodes: int
    match_residual: float
    grid: RadialGrid


@njit(cache=True)
def _sweep(f, u0, u1):
    """Numerov recursion u_{i+1} = ((12 - 10 f_i) u_i - f_{i-1} u_{i-1})/f_{i+1}.

    Rescales the whole history whenever the magnitude passes 1e250 (signs
    and local amplitude ratios are unaffected, but rescaled early entries
    can underflow, so sign changes are counted on the fly).  Returns the
    solution array and its strict sign-change count.
    """
    n = f.shape[0]
    u = np.empty(n)
    u[0] = u0
    u[1] = u1
    nodes = 0
    if (u0 > 0.0 and u1 < 0.0) or (u0 < 0.0 and u1 > 0.0):
        nodes += 1
    for i in range(1, n - 1):
        nxt = ((12.0 - 10.0 * f[i]) * u[i] - f[i - 1] * u[i - 1]) / f[i + 1]
        if not np.isfinite(nxt):
            for j in range(i + 1, n):
                u[j] = np.nan
            return u, -1
        if (u[i] > 0.0 and nxt < 0.0) or (u[i] < 0.0 and nxt > 0.0):
            nodes += 1
        if nxt > _RESCALE_LIMIT or nxt < -_RESCALE_LIMIT:
            inv = 1.0 / abs(nxt)
            for j in range(i + 1):
                u[j] *= inv
            nxt *= inv
        u[i + 1] = nxt
    return u, nodes


def _oracle_model(model: PotentialModel) -> PotentialModel:
    # exact spectra belong to the unmodified equation
    return model.with_langer(False) if model.langer else model


def _indicial_exponent(model: PotentialModel) -> float:
    """Exponent s of the regular solution u ~ x**s at the left endpoint."""
    k, p = model.kind, model.params
    if k in (PotentialKind.COULOMB, PotentialKind.KEPLER_ND, PotentialKind.OSCILLATOR_ND):
        return p["l"] + (model.dim - 1) / 2
    if k is PotentialKind.RELATIVISTIC_KG:
        return 0.5 + math.sqrt((p["l"] + 0.5) ** 2 - p["mu"] ** 2)
    if k is PotentialKind.DIRAC:
        ne = model.nu_eff
        return ne + 1.0 if ne >= 0 else -ne
    if k is PotentialKind.KRATZER:
        return 0.5 + math.sqrt(p["gamma2"] + (p["l"] + 0.5) ** 2)
    if k is PotentialKind.POSCHL_TELLER:
        return p["a"]
    raise InvalidParameter(f"{k.value} has no radial indicial exponent")


def _coulombic_inverse_coeff(model: PotentialModel, E: float) -> float:
    """Coefficient of the 1/x term of q, for the near-origin series."""
    k, p = model.kind, model.params
    if k in (PotentialKind.COULOMB, PotentialKind.KEPLER_ND):
        return 2.0 * p["Z"]
    if k in (PotentialKind.RELATIVISTIC_KG, PotentialKind.DIRAC):
        return 2.0 * E * p["mu"]
    if k is PotentialKind.KRATZER:
        return 2.0 * p["gamma2"]
    return 0.0


def _q_arrays(model: PotentialModel, E: float, grid: RadialGrid):
    """(f, q1, x) with f = 1 + h^2 q1/12 in the integration coordinate."""
    x = grid.positions()
    q = np.asarray(effective_momentum_squared(model, E, x))
    if grid.coordinate == "log":
        q1 = -0.25 + x * x * q
    else:
        q1 = q
    h = grid.spacing
    return 1.0 + (h * h / 12.0) * q1, q1, x


def _outward_seed(model: PotentialModel, E: float, grid: RadialGrid, q1):
    k = model.kind
    x = grid.positions()[:2]
    if k is PotentialKind.MODIFIED_POSCHL_TELLER:
        kappa = math.sqrt(max(-q1[0], 1e-12))
        return _TAIL_SEED, _TAIL_SEED * math.exp(kappa * grid.spacing)
    if k is PotentialKind.POSCHL_TELLER:
        a = model.params["a"]
        return x[0] ** a, x[1] ** a
    s = _indicial_exponent(model)
    if k is PotentialKind.OSCILLATOR_ND:
        c2 = -2.0 * E / (4.0 * s + 2.0)
        c4 = (1.0 - 2.0 * E * c2) / ((s + 4.0) * (s + 3.0) - s * (s - 1.0))
        series = 1.0 + c2 * x**2 + c4 * x**4
        expo = s if grid.coordinate == "linear" else s - 0.5
        vals = x**expo * series
        return vals[0], vals[1]
    c1 = _coulombic_inverse_coeff(model, E) / (-2.0 * s) if s > 0 else 0.0
    vals = x ** (s - 0.5) * (1.0 + c1 * x)
    return vals[0], vals[1]


def _inward_seed(model: PotentialModel, E: float, grid: RadialGrid, q1):
    k = model.kind
    if k is PotentialKind.MODIFIED_POSCHL_TELLER:
        kappa = math.sqrt(max(-q1[-1], 1e-12))
        return _TAIL_SEED, _TAIL_SEED * math.exp(kappa * grid.spacing)
    if k is PotentialKind.POSCHL_TELLER:
        b = model.params["b"]
        edge = model.domain[1]
        x = grid.positions()[-2:]
        return (edge - x[-1]) ** b, (edge - x[-2]) ** b
    return 0.0, _TAIL_SEED


def _stable_prefix(f, q1) -> int:
    """Index up to which the recursion is stable (f > 0 throughout).

    f <= 0 deep in the forbidden tail merely means the grid overshoots the
    physically relevant range at this energy; integration is cut there (any
    node beyond sits exponentially close to a level, far below tolerance).
    f <= 0 inside the allowed region means unresolved oscillations.
    """
    bad = np.flatnonzero(f <= 0.0)
    if bad.size == 0:
        return f.shape[0]
    i = int(bad[0])
    if q1[i] > 0.0 or i < 16:
        raise GridTooCoarse(
            "h^2*q exceeds the Numerov stability bound inside the allowed region; "
            "refine the grid"
        )
    return i


def _shoot_outward(model, E, grid):
    f, q1, _ = _q_arrays(model, E, grid)
    cut = _stable_prefix(f, q1)
    u0, u1 = _outward_seed(model, E, grid, q1)
    u, nodes = _sweep(np.ascontiguousarray(f[:cut]), u0, u1)
    if nodes < 0 or not np.isfinite(u[-1]):
        raise Overflow("outward solution left the representable range despite rescaling")
    return f, q1, u, nodes


def count_nodes(model: PotentialModel, E: float, grid: RadialGrid) -> int:
    """Interior sign changes of the outward solution; equals the number of
    eigenvalues below E (Sturm oscillation).

    The original equation is always integrated; a Langer-flagged model is
    flipped internally.
    """
    model = _oracle_model(model)
    _, _, _, nodes = _shoot_outward(model, E, grid)
    return nodes


def _match_index(q1) -> int:
    pos = np.flatnonzero(q1 > 0.0)
    n = q1.shape[0]
    m = int(pos[-1]) if pos.size else n // 2
    return min(max(m, 2), n - 3)


def _match_residual(model, E, grid, m):
    """Defect of the three-term recursion at m for the outward/inward splice.

    Zero exactly at the discrete eigenvalue: with both halves normalized at
    the matching point, the composite sequence then satisfies the recursion
    everywhere, so this is the full fourth-order eigencondition.
    """
    f, q1, _ = _q_arrays(model, E, grid)
    if _stable_prefix(f, q1) < f.shape[0]:
        raise GridTooCoarse("recursion unstable within the matching range; shrink x_max")
    u0, u1 = _outward_seed(model, E, grid, q1)
    uo, _ = _sweep(np.ascontiguousarray(f[: m + 2]), u0, u1)
    w0, w1 = _inward_seed(model, E, grid, q1)
    ui, _ = _sweep(np.ascontiguousarray(f[m - 1 :][::-1]), w0, w1)
    ui = ui[::-1]  # ui[k] is u at grid index m - 1 + k
    if not (np.isfinite(uo[-1]) and np.isfinite(ui[0])) or uo[m] == 0.0 or ui[1] == 0.0:
        raise GridTooCoarse("shooting solution degenerate at the matching point")
    return (
        f[m - 1] * uo[m - 1] / uo[m]
        + f[m + 1] * ui[2] / ui[1]
        - (12.0 - 10.0 * f[m])
    )


def _expand_lower(model, grid, n_r, bottom, scale, count):
    if bottom is not None:
        lo = bottom + 1e-9 * max(abs(bottom), scale)
        c = count(lo)
        if c > n_r:
            raise GridTooCoarse(
                f"count({lo}) = {c} > n_r at the bottom of the bound range"
            )
        return lo, c
    lo = -8.0 * scale
    for _ in range(60):
        c = count(lo)
        if c <= n_r:
            return lo, c
        lo *= 4.0
    raise BracketingFailed(f"no lower bracket down to E = {lo}")


def _expand_upper(model, grid, n_r, bottom_val, top, scale, count):
    if top is not None:
        hi = top - 1e-9 * max(abs(top), scale, abs(bottom_val))
        c = count(hi)
        if c <= n_r:
            if model.kind is PotentialKind.MODIFIED_POSCHL_TELLER:
                raise NoSuchBoundState(
                    f"well holds {c} strictly bound level(s); n_r = {n_r} does not exist"
                )
            raise NoSuchBoundState(
                f"grid holds only {c} level(s) below the bound-range top; enlarge x_max"
            )
        return hi, c
    hi = scale
    for _ in range(60):
        c = count(hi)
        if c > n_r:
            return hi, c
        hi *= 2.0
    raise BracketingFailed(f"no upper bracket up to E = {hi}")


def solve_eigenvalue(
    model: PotentialModel,
    n_r: int,
    grid: Optional[RadialGrid] = None,
    tol: float = 1e-10,
) -> ShootingResult:
    """Locate the n_r-th eigenvalue of the original equation by shooting.

    Node-count bisection brackets the level, then Brent refinement of the
    discrete Numerov matching condition at a point near the outer turning
    point pins it to ``tol`` (absolute, in the model's energy unit).
    ``grid=None`` builds :func:`default_grid` for the requested level.
    """
    if n_r < 0:
        raise InvalidParameter(f"n_r must be >= 0, got {n_r}")
    model = _oracle_model(model)
    if model.kind in (PotentialKind.COULOMB, PotentialKind.KEPLER_ND) and (
        model.params["l"] + (model.dim - 1) / 2 < 0.5 - 1e-12
    ):
        raise UnsupportedDimension(
            "even-parity one-dimensional Coulomb states have a logarithmically "
            "singular origin; the shooting solver does not support them"
        )
    if grid is None:
        grid = default_grid(model, n_r)

    bottom, top = bound_energy_window(model)
    scale = energy_scale(model)
    count = lambda E: count_nodes(model, E, grid)

    lo, c_lo = _expand_lower(model, grid, n_r, bottom, scale, count)
    hi, c_hi = _expand_upper(model, grid, n_r, lo, top, scale, count)

    # integer bisection on the node count down to a tight energy window
    width_stop = max(1e-4 * max(abs(lo), abs(hi)), 4.0 * tol)
    for _ in range(200):
        if hi - lo <= width_stop and c_hi == n_r + 1 and c_lo == n_r:
            break
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        c = count(mid)
        if c < c_lo or c > c_hi:
            raise GridTooCoarse("node count is non-monotone in E on this grid")
        if c <= n_r:
            lo, c_lo = mid, c
        else:
            hi, c_hi = mid, c

    _, q1_mid, _ = _q_arrays(model, 0.5 * (lo + hi), grid)
    m = _match_index(q1_mid)
    g = lambda E: _match_residual(model, E, grid, m)
    g_lo, g_hi = g(lo), g(hi)
    xtol = max(tol, 1e-15) * max(1.0, abs(lo), abs(hi))
    if np.isfinite(g_lo) and np.isfinite(g_hi) and g_lo * g_hi < 0.0:
        energy = brentq(g, lo, hi, xtol=xtol, rtol=8.9e-16, maxiter=200)
    else:
        # fall back to pure node bisection; the count jumps exactly at the level
        for _ in range(200):
            if hi - lo <= xtol:
                break
            mid = 0.5 * (lo + hi)
            if mid in (lo, hi):
                break
            if count(mid) <= n_r:
                lo = mid
            else:
                hi = mid
        energy = 0.5 * (lo + hi)
    residual = abs(g(energy))
    return ShootingResult(energy=float(energy), nodes=n_r, match_residual=float(residual), grid=grid)


def oracle_spectrum(
    model: PotentialModel,
    count: int,
    grid: Optional[RadialGrid] = None,
    tol: float = 1e-10,
):
    """First ``count`` eigenvalues as EnergyLevel records (method numerov).

    Finite wells truncate at their last strictly bound level; zero-binding
    threshold members are never produced (they fail node bracketing below
    the bound-range top).
    """
    if count < 1:
        raise InvalidParameter(f"count must be >= 1, got {count}")
    levels = []
    for n_r in range(count):
        try:
            res = solve_eigenvalue(model, n_r, grid, tol)
        except NoSuchBoundState:
            break
        levels.append(
            EnergyLevel(value=res.energy, method="numerov", state=_model_state(model, n_r))
        )
    values = [lv.value for lv in levels]
    if any(b <= a for a, b in zip(values, values[1:])):
        raise GridTooCoarse("oracle spectrum is not strictly increasing")
    return levels


def convergence_order(
    model: PotentialModel,
    n_r: int,
    grids: Sequence[RadialGrid],
    tol: float = 1e-13,
) -> float:
    """Empirical order from Richardson ratios of eigenvalues on halving grids.

    Grids must share their range and coordinate and halve the step (double
    the intervals) from one to the next; at least three are required.
    """
    if len(grids) < 3:
        raise InsufficientGrids("need at least three grids")
    for a, b in zip(grids, grids[1:]):
        same_range = (
            a.coordinate == b.coordinate
            and math.isclose(a.x_min, b.x_min, rel_tol=1e-12)
            and math.isclose(a.x_max, b.x_max, rel_tol=1e-12)
        )
        if not same_range or (b.points - 1) != 2 * (a.points - 1):
            raise InsufficientGrids(
                "grids must share their range and halve the step successively"
            )
    energies = [solve_eigenvalue(model, n_r, g, tol).energy for g in grids]
    diffs = [e1 - e2 for e1, e2 in zip(energies, energies[1:])]
    if any(d == 0.0 for d in diffs):
        raise InsufficientGrids("eigenvalue differences vanished; grids too fine to compare")
    ratios = [abs(d1 / d2) for d1, d2 in zip(diffs, diffs[1:])]
    return float(np.mean([math.log2(r) for r in ratios]))


def _provisional_extent(model: PotentialModel, n_r: int) -> float:
    k, p = model.kind, model.params
    if k in (PotentialKind.COULOMB, PotentialKind.KEPLER_ND):
        return 12.0 * (n_r + p["l"] + 0.5 * (model.dim + 1)) ** 2 / p["Z"] + 10.0
    if k in (PotentialKind.RELATIVISTIC_KG, PotentialKind.DIRAC):
        ang = p.get("l", p.get("j", 0.0))
        return 12.0 * (n_r + ang + 2.0) ** 2 / p["mu"]
    if k is PotentialKind.KRATZER:
        nu0 = 0.5 + math.sqrt(p["gamma2"] + (p["l"] + 0.5) ** 2)
        return 8.0 * (n_r + nu0 + 1.0) ** 2 / p["gamma2"] + 4.0
    # oscillator
    return 4.0 * math.sqrt(2.0 * (2.0 * n_r + p["l"] + model.dim / 2.0 + 3.0)) + 4.0


def _radial_coordinate(model: PotentialModel) -> str:
    if model.kind is PotentialKind.OSCILLATOR_ND and model.dim == 1:
        return "linear"
    return "log"


def _outer_turning_point(model: PotentialModel, E: float, reach: float) -> float:
    xs = np.geomspace(1e-9, reach, 4096)
    q = np.asarray(effective_momentum_squared(model, E, xs))
    pos = np.flatnonzero(q > 0.0)
    if not pos.size or pos[-1] == len(xs) - 1:
        return reach
    i = pos[-1]
    return brentq(
        lambda x: effective_momentum_squared(model, E, x), xs[i], xs[i + 1], rtol=1e-12
    )


def default_grid(model: PotentialModel, n_r: int = 0) -> RadialGrid:
    """Grid sized for the n_r-th level: 20,001 points, x_max = 40x the outer
    turning point for radial kinds (tail-capped for the oscillator, whose
    quadratic forbidden region would destabilize the recursion long before
    40x), the fixed windows of the two Poeschl-Teller wells otherwise.
    """
    k, p = model.kind, model.params
    if k is PotentialKind.MODIFIED_POSCHL_TELLER:
        half = 25.0 / p["alpha"]
        return RadialGrid(-half, half, 20001, "linear")
    if k is PotentialKind.POSCHL_TELLER:
        lo, hi = model.domain
        h = (hi - lo) / 20000
        pad_a = h * max(1.0, math.sqrt(p["a"] * (p["a"] - 1.0) / 6.0))
        pad_b = h * max(1.0, math.sqrt(p["b"] * (p["b"] - 1.0) / 6.0))
        return RadialGrid(lo + pad_a, hi - pad_b, 20001, "linear")

    model = _oracle_model(model)
    coord = _radial_coordinate(model)
    extent = _provisional_extent(model, n_r)
    rough = None
    for _ in range(6):
        x_min = 1e-6 if coord == "log" else extent / 20000.0 * 0.5
        trial = RadialGrid(x_min, extent, 4001, coord)
        try:
            rough = solve_eigenvalue(model, n_r, trial, tol=1e-5 * energy_scale(model))
            break
        except (NoSuchBoundState, BracketingFailed):
            extent *= 4.0
    if rough is None:
        raise BracketingFailed("could not size a default grid for this level")

    x2 = _outer_turning_point(model, rough.energy, extent * 50.0)
    if k is PotentialKind.OSCILLATOR_ND:
        x_max = math.sqrt(x2 * x2 + 80.0)
    else:
        x_max = 40.0 * x2
    x_min = 1e-6 if coord == "log" else x_max / 20000.0 * 0.5
    return RadialGrid(x_min, x_max, 20001, coord)
