"""Numeric semiclassical pipeline: turning points, phase integral, quantization.

Everything here works directly on ``effective_momentum_squared`` in the
model's native coordinate; no closed-form spectra or integrals enter, so the
module serves as an independent route to the Bohr-Sommerfeld levels

    integral p dx = pi*(n_r + 1/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import brentq

from .errors import (
    BracketingFailed,
    DegenerateWell,
    InvalidParameter,
    NoClassicalRegion,
    NoSuchBoundState,
    ToleranceNotMet,
)
from .potentials import (
    PotentialKind,
    PotentialModel,
    bound_energy_window,
    effective_momentum_squared,
    energy_scale,
)
from .spectra import EnergyLevel, _model_state

__all__ = [
    "PhaseIntegralResult",
    "find_turning_points",
    "phase_integral",
    "quantize_level",
    "wkb_spectrum",
]

_SCAN_SIZES = (256, 4096, 65536)
_MAX_QUAD_NODES = 32768
_ROOT_RTOL = 1e-14


@dataclass(frozen=True)
class PhaseIntegralResult:
    value: float
    turning_points: tuple
    quadrature_nodes: int
    est_error: float


@lru_cache(maxsize=32)
def _gauss_nodes(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def _require_wkb_model(model: PotentialModel) -> None:
    # the pure MPT well carries no modification, either flag is acceptable
    if not model.langer and model.kind is not PotentialKind.MODIFIED_POSCHL_TELLER:
        raise InvalidParameter("the semiclassical engine needs the Langer-modified model")


def _scan_axis(model: PotentialModel, n: int) -> np.ndarray:
    lo, hi = model.domain
    if model.kind is PotentialKind.POSCHL_TELLER:
        pad = (hi - lo) * 1e-9
        return np.linspace(lo + pad, hi - pad, n)
    if model.kind is PotentialKind.MODIFIED_POSCHL_TELLER:
        half = 60.0 / model.params["alpha"]
        return np.linspace(-half, half, n)
    # radial kinds: the two scales r1 << r2 demand a logarithmic sweep
    return np.geomspace(1e-9, 1e9, n)


def _classify_empty_region(model: PotentialModel, E: float, xs, p2) -> None:
    """No positive scan sample: tell a coalesced well from a truly empty one."""
    from scipy.optimize import minimize_scalar

    i = int(np.argmax(p2))
    lo = xs[max(i - 1, 0)]
    hi = xs[min(i + 1, len(xs) - 1)]
    peak = minimize_scalar(
        lambda x: -effective_momentum_squared(model, E, x), bounds=(lo, hi), method="bounded",
        options={"xatol": 1e-14 * max(hi, 1.0)},
    )
    scale = max(abs(p2[max(i - 1, 0)]), abs(p2[min(i + 1, len(xs) - 1)]), 1e-300)
    if -peak.fun > -1e-9 * scale:
        raise DegenerateWell(f"turning points coalesce near x = {peak.x} at E = {E}")
    raise NoClassicalRegion(f"p2(x, E={E}) <= 0 everywhere at scan resolution")


def find_turning_points(model: PotentialModel, E: float):
    """The two zeros of p2(x, E) bracketing the classically allowed region.

    Located by a coarse sign scan (logarithmic for radial kinds) followed by
    root refinement to relative 1e-12.  Raises NoClassicalRegion when p2 is
    nowhere positive at scan resolution, DegenerateWell when the turning
    points coalesce (within scan resolution).
    """
    _require_wkb_model(model)

    for size in _SCAN_SIZES:
        xs = _scan_axis(model, size)
        p2 = np.asarray(effective_momentum_squared(model, E, xs))
        pos = np.flatnonzero(p2 > 0.0)
        if pos.size:
            break
    else:
        _classify_empty_region(model, E, xs, p2)

    i0, i1 = pos[0], pos[-1]
    f = lambda x: effective_momentum_squared(model, E, x)
    if i0 == 0:
        raise NoClassicalRegion(
            "no inner turning point: p2 stays positive down to the domain edge"
        )
    x1 = brentq(f, xs[i0 - 1], xs[i0], rtol=_ROOT_RTOL, maxiter=200)
    if i1 == len(xs) - 1:
        raise NoClassicalRegion(
            "no outer turning point: p2 stays positive up to the scan edge"
        )
    x2 = brentq(f, xs[i1], xs[i1 + 1], rtol=_ROOT_RTOL, maxiter=200)
    if x2 - x1 <= 1e-10 * max(abs(x1), abs(x2), 1e-30):
        raise DegenerateWell(f"turning points coalesce at x = {x1}")
    return (x1, x2)


def phase_integral(model: PotentialModel, E: float, tol: float = 1e-10) -> PhaseIntegralResult:
    """Action integral of sqrt(p2) across the well, in the native coordinate.

    The substitution x = x1 + (x2 - x1)*sin(phi)**2 absorbs both square-root
    turning-point singularities; Gauss-Legendre order is doubled until two
    consecutive estimates differ by at most ``tol``.
    """
    if tol <= 0:
        raise InvalidParameter("tol must be positive")
    x1, x2 = find_turning_points(model, E)
    width = x2 - x1

    prev = None
    n = 32
    while n <= _MAX_QUAD_NODES:
        t, w = _gauss_nodes(n)
        phi = 0.25 * math.pi * (t + 1.0)
        x = x1 + width * np.sin(phi) ** 2
        p2 = np.asarray(effective_momentum_squared(model, E, x))
        integrand = np.sqrt(np.maximum(p2, 0.0)) * width * np.sin(2.0 * phi)
        value = 0.25 * math.pi * float(np.dot(w, integrand))
        if prev is not None:
            err = abs(value - prev)
            if err <= tol:
                return PhaseIntegralResult(value, (x1, x2), n, err)
        prev = value
        n *= 2
    raise ToleranceNotMet(
        f"phase integral stalled at est_error = {err}", best=value, est_error=err
    )


def quantize_level(model: PotentialModel, n_r: int, tol: float = 1e-10) -> EnergyLevel:
    """Solve the Bohr-Sommerfeld condition for the n_r-th level numerically.

    Uses the strict monotonicity of the phase in E: brackets are expanded
    geometrically from the bottom of the bound range (energies where no
    classical region exists count as zero phase), then refined by Brent's
    method.  Closed-form levels never enter.
    """
    if n_r < 0:
        raise InvalidParameter(f"n_r must be >= 0, got {n_r}")
    _require_wkb_model(model)
    target = math.pi * (n_r + 0.5)
    quad_tol = min(tol * 0.1, 1e-11)

    def phase(E: float) -> float:
        try:
            return phase_integral(model, E, quad_tol).value
        except (NoClassicalRegion, DegenerateWell):
            return 0.0

    bottom, top = bound_energy_window(model)
    scale = energy_scale(model)

    if bottom is None:
        bottom = -8.0 * scale
        for _ in range(60):
            if phase(bottom) < target:
                break
            bottom *= 4.0
        else:
            raise BracketingFailed(f"no lower bracket down to E = {bottom}")

    # push the upper edge toward the top of the window until the phase
    # exceeds the target; finite wells run out of phase instead
    gap = 1e-9 * max(abs(bottom), scale) if top is not None else None
    e_lo, e_hi = bottom, None
    for kexp in range(1, 61):
        probe = (
            top - (top - bottom) * 2.0**-kexp if top is not None else scale * 2.0 ** (kexp - 1)
        )
        if top is not None and top - probe < gap:
            probe = top - gap
        ph = phase(probe)
        if ph >= target:
            e_hi = probe
            break
        e_lo = probe
        if top is not None and top - probe <= gap:
            break
    if e_hi is None:
        if top is not None:
            raise NoSuchBoundState(
                f"phase saturates below pi*(n_r + 1/2) for n_r = {n_r}: no such level"
            )
        raise BracketingFailed(f"no upper bracket up to E = {e_lo}")

    lo_phase = phase(e_lo)
    if lo_phase >= target:
        raise BracketingFailed(f"bracket lost below target at E = {e_lo}")

    E_star = brentq(
        lambda E: phase(E) - target, e_lo, e_hi, xtol=1e-18, rtol=9e-16, maxiter=300
    )
    residual = phase(E_star) - target
    # secant polish: near the top of the bound range the phase slope is steep
    # enough that even a machine-tight root can leave a visible residual
    for _ in range(6):
        if abs(residual) <= 0.5 * tol:
            break
        dE = 1e-7 * max(abs(E_star), 1e-6 * scale)
        slope = (phase(E_star + dE) - phase(E_star - dE)) / (2.0 * dE)
        if not slope > 0.0:
            break
        E_star -= residual / slope
        residual = phase(E_star) - target
    if abs(residual) > tol:
        raise ToleranceNotMet(
            f"quantization residual {abs(residual)} exceeds tol = {tol}",
            best=E_star,
            est_error=abs(residual),
        )
    return EnergyLevel(value=float(E_star), method="wkb_numeric", state=_model_state(model, n_r))


def wkb_spectrum(model: PotentialModel, count: int, tol: float = 1e-10):
    """Levels n_r = 0..count-1, truncated where a finite well runs out."""
    if count < 1:
        raise InvalidParameter(f"count must be >= 1, got {count}")
    levels = []
    for n_r in range(count):
        try:
            levels.append(quantize_level(model, n_r, tol))
        except NoSuchBoundState:
            break
    values = [lv.value for lv in levels]
    if any(b <= a for a, b in zip(values, values[1:])):
        raise BracketingFailed("spectrum is not strictly increasing; brackets overlapped")
    return levels
