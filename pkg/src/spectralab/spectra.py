"""Closed-form bound-state energies and level-count bookkeeping.

Two routes are implemented for every kind: the exact eigenvalue formula and
the closed solution of the Bohr-Sommerfeld condition

    B/(2*sqrt(A)) - sqrt(C) = n_r + 1/2

with the Langer-modified coefficients.  For every kind except the modified
Poeschl-Teller well the two coincide identically; that well is the one case
where the semiclassical and exact spectra genuinely differ.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

from .errors import InvalidParameter, NoSuchBoundState, OutOfBoundRange
from .potentials import PotentialKind, PotentialModel

__all__ = [
    "QuantumState",
    "EnergyLevel",
    "exact_level",
    "wkb_closed_level",
    "level_count",
    "relativistic_binding",
]

METHODS = ("exact", "wkb_closed", "wkb_numeric", "numerov")


@dataclass(frozen=True)
class QuantumState:
    """Radial quantum number plus angular label and spatial dimension.

    ``l`` is carried by every kind except dirac, which carries ``j``.  The
    one-dimensional wells use l = 0.
    """

    n_r: int
    l: Optional[int] = None
    j: Optional[float] = None
    dim: int = 3

    def __post_init__(self):
        if self.n_r < 0:
            raise InvalidParameter(f"n_r must be >= 0, got {self.n_r}")
        if (self.l is None) == (self.j is None):
            raise InvalidParameter("exactly one of l, j must be set")

    @property
    def principal(self) -> float:
        """n = n_r + l + 1, or n = n_r + j + 1/2 for dirac labels."""
        if self.l is not None:
            return self.n_r + self.l + 1
        return self.n_r + self.j + 0.5


@dataclass(frozen=True)
class EnergyLevel:
    value: float
    method: str
    state: QuantumState

    def __post_init__(self):
        if self.method not in METHODS:
            raise InvalidParameter(f"method must be one of {METHODS}, got {self.method!r}")


def relativistic_binding(mu: float, D: float) -> float:
    """1 - 1/sqrt(1 + (mu/D)**2), evaluated without cancellation.

    ``D`` is the denominator bracket of the relativistic level formula.
    The rearrangement t/(sqrt(1+t)*(1+sqrt(1+t))) with t = (mu/D)**2 keeps
    full relative precision down to mu -> 0.
    """
    t = (mu / D) ** 2
    root = math.sqrt(1.0 + t)
    return t / (root * (1.0 + root))


def _model_state(model: PotentialModel, n_r: int) -> QuantumState:
    p = model.params
    if model.kind is PotentialKind.DIRAC:
        return QuantumState(n_r=n_r, j=p["j"], dim=model.dim)
    return QuantumState(n_r=n_r, l=p.get("l", 0), dim=model.dim)


def _resolve_state(model: PotentialModel, state: Union[QuantumState, int]) -> QuantumState:
    if isinstance(state, int):
        return _model_state(model, state)
    expected = _model_state(model, state.n_r)
    if state != expected:
        raise InvalidParameter(
            f"state {state} does not match the model's labels {expected}"
        )
    return state


def _dirac_bracket(model: PotentialModel, n_r: int) -> float:
    """Denominator bracket n_r + 1/2 + |nu_eff + 1/2| of the model's tower.

    The default branch (nu_sign = -1) gives n_r + nu, the physical ladder
    whose n_r = 0 member is the nodeless ground level; the flipped partner
    starts one rung higher at n_r + nu + 1.
    """
    return n_r + 0.5 + abs(model.nu_eff + 0.5)


def _mpt_exact_bracket(V0: float, n: int) -> float:
    return 0.5 * math.sqrt(4.0 * V0 + 1.0) - (n + 0.5)


def _mpt_wkb_bracket(V0: float, n: int) -> float:
    return math.sqrt(V0) - (n + 0.5)


def exact_level(model: PotentialModel, state: Union[QuantumState, int]) -> EnergyLevel:
    """Exact eigenvalue of the model's equation, in the model's unit.

    ``state`` may be a QuantumState consistent with the model or a bare
    radial quantum number.  Raises NoSuchBoundState when the level does not
    exist (finite wells, or hydrogenic corners where the principal bracket
    is not positive).
    """
    st = _resolve_state(model, state)
    n_r, p, k = st.n_r, model.params, model.kind

    if k in (PotentialKind.COULOMB, PotentialKind.KEPLER_ND):
        N = n_r + p["l"] + (model.dim - 1) / 2
        if N <= 0:
            raise NoSuchBoundState(
                f"principal bracket n_r + l + (dim - 1)/2 = {N} must be positive"
            )
        value = -p["Z"] ** 2 / (2.0 * N * N)
    elif k is PotentialKind.RELATIVISTIC_KG:
        D = n_r + 0.5 + math.sqrt((p["l"] + 0.5) ** 2 - p["mu"] ** 2)
        value = 1.0 - relativistic_binding(p["mu"], D)
    elif k is PotentialKind.DIRAC:
        value = 1.0 - relativistic_binding(p["mu"], _dirac_bracket(model, n_r))
    elif k is PotentialKind.KRATZER:
        nu = 0.5 + math.sqrt(p["gamma2"] + (p["l"] + 0.5) ** 2)
        value = -p["gamma2"] ** 2 / (n_r + nu) ** 2
    elif k is PotentialKind.OSCILLATOR_ND:
        value = 2.0 * n_r + p["l"] + model.dim / 2.0
    elif k is PotentialKind.POSCHL_TELLER:
        value = 0.5 * p["V0"] * (p["a"] + p["b"] + 2.0 * n_r) ** 2
    else:  # modified_poschl_teller
        bracket = _mpt_exact_bracket(p["V0"], n_r)
        if bracket < 0.0:
            raise NoSuchBoundState(
                f"n = {n_r} exceeds the exact level count of this well"
            )
        value = -bracket * bracket
    return EnergyLevel(value=value, method="exact", state=st)


def wkb_closed_level(model: PotentialModel, state: Union[QuantumState, int]) -> EnergyLevel:
    """Energy solving the closed Bohr-Sommerfeld condition for this kind.

    Identical to :func:`exact_level` for every Sommerfeld-type kind; for
    modified_poschl_teller it returns the semiclassical value, which sits
    above the exact one and supports one level fewer near threshold.
    """
    st = _resolve_state(model, state)
    n_r, p, k = st.n_r, model.params, model.kind

    if k in (PotentialKind.COULOMB, PotentialKind.KEPLER_ND):
        half = p["l"] + (model.dim - 2) / 2
        if half <= 0:
            raise OutOfBoundRange(
                "the Sommerfeld form needs l + (dim - 2)/2 > 0; "
                "only the exact/oracle routes serve this corner"
            )
        D = n_r + 0.5 + half
        value = -p["Z"] ** 2 / (2.0 * D * D)
    elif k is PotentialKind.RELATIVISTIC_KG:
        D = n_r + 0.5 + math.sqrt((p["l"] + 0.5) ** 2 - p["mu"] ** 2)
        value = 1.0 - relativistic_binding(p["mu"], D)
    elif k is PotentialKind.DIRAC:
        value = 1.0 - relativistic_binding(p["mu"], _dirac_bracket(model, n_r))
    elif k is PotentialKind.KRATZER:
        D = n_r + 0.5 + math.sqrt(p["gamma2"] + (p["l"] + 0.5) ** 2)
        value = -p["gamma2"] ** 2 / (D * D)
    elif k is PotentialKind.OSCILLATOR_ND:
        half = p["l"] + (model.dim - 2) / 2
        if half <= 0:
            raise OutOfBoundRange(
                "the Sommerfeld form needs l + (dim - 2)/2 > 0; "
                "only the exact/oracle routes serve this corner"
            )
        value = 2.0 * (n_r + 0.5 + 0.5 * half)
    elif k is PotentialKind.POSCHL_TELLER:
        root_A = p["a"] - 0.5 + p["b"] - 0.5 + 2.0 * n_r + 1.0
        value = 0.5 * p["V0"] * root_A**2
    else:  # modified_poschl_teller
        bracket = _mpt_wkb_bracket(p["V0"], n_r)
        if bracket < 0.0:
            raise NoSuchBoundState(
                f"n = {n_r} exceeds the semiclassical level count of this well"
            )
        value = -bracket * bracket
    return EnergyLevel(value=value, method="wkb_closed", state=st)


def level_count(
    model: PotentialModel, method: str = "exact", strictly_bound: bool = False
):
    """Number of bound levels the given route supports.

    Infinite (math.inf) for every kind except modified_poschl_teller, whose
    exact and semiclassical ladders terminate at different depths.  With
    ``strictly_bound=True`` the zero-binding threshold member (exact bracket
    exactly zero) is excluded; this is the count realised by normalizable
    states and by the shooting oracle.
    """
    if method not in ("exact", "wkb_closed"):
        raise InvalidParameter(f"method must be 'exact' or 'wkb_closed', got {method!r}")
    if model.kind is not PotentialKind.MODIFIED_POSCHL_TELLER:
        return math.inf
    V0 = model.params["V0"]
    if method == "exact":
        edge = 0.5 * math.sqrt(4.0 * V0 + 1.0) - 0.5
        count = math.floor(edge) + 1
        if strictly_bound and _mpt_exact_bracket(V0, count - 1) == 0.0:
            count -= 1
    else:
        edge = math.sqrt(V0) - 0.5
        count = math.floor(edge) + 1 if edge >= 0 else 0
        if strictly_bound and count and _mpt_wkb_bracket(V0, count - 1) == 0.0:
            count -= 1
    return count
