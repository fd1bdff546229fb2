"""Catalog of exactly solvable potentials with a uniform model interface.

Every entry exposes the effective momentum squared p2(x, E) of its radial
(or one-dimensional) wave equation, either in the original form or with the
Langer replacement of the centrifugal term, plus the mapping onto the
Sommerfeld coefficients (A, B, C) of

    p(r) = sqrt(-A + B/r - C/r**2)

in the appropriate integration variable.  Each kind works in its own
dimensionless unit system; no cross-kind conversion is attempted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional, Union

import numpy as np

from .errors import (
    DomainViolation,
    InvalidParameter,
    NotApplicable,
    OutOfBoundRange,
    SupercriticalCoupling,
    UnsupportedDimension,
)

__all__ = [
    "PotentialKind",
    "PotentialModel",
    "PhaseTriple",
    "build_model",
    "dimension_lift",
    "langer_term",
    "effective_momentum_squared",
    "abc_coefficients",
    "bound_energy_window",
    "energy_scale",
    "RADIAL_FAMILY_KINDS",
]


class PotentialKind(str, Enum):
    """The eight supported potential/equation families."""

    COULOMB = "coulomb"
    RELATIVISTIC_KG = "relativistic_kg"
    DIRAC = "dirac"
    KRATZER = "kratzer"
    KEPLER_ND = "kepler_nd"
    OSCILLATOR_ND = "oscillator_nd"
    POSCHL_TELLER = "poschl_teller"
    MODIFIED_POSCHL_TELLER = "modified_poschl_teller"


# Kinds whose phase integral is a single Sommerfeld integral in a radial-type
# variable (native x, or xi = r**2 for the oscillator).
RADIAL_FAMILY_KINDS = frozenset(
    {
        PotentialKind.COULOMB,
        PotentialKind.RELATIVISTIC_KG,
        PotentialKind.DIRAC,
        PotentialKind.KRATZER,
        PotentialKind.KEPLER_ND,
        PotentialKind.OSCILLATOR_ND,
    }
)

_UNITS = {
    PotentialKind.COULOMB: "E in units of E0 = e^2/a0, x = r/a0 (a0 = hbar^2/(m e^2))",
    PotentialKind.RELATIVISTIC_KG: "E in units of m c^2, x = (m c/hbar) r, mu = Z e^2/(hbar c)",
    PotentialKind.DIRAC: "E in units of m c^2, x = (m c/hbar) r, mu = Z e^2/(hbar c)",
    PotentialKind.KRATZER: "E in units of hbar^2/(2 m a^2), x = r/a, gamma2 = 2 m a^2 D/hbar^2",
    PotentialKind.KEPLER_ND: "E in units of E0 = e^2/a0, x = r/a0 (a0 = hbar^2/(m e^2))",
    PotentialKind.OSCILLATOR_ND: "E in units of hbar*omega, x = r*sqrt(m*omega/hbar)",
    PotentialKind.POSCHL_TELLER: "E and V0 in the same unit, with V0 = hbar^2 alpha^2/m fixing the scale",
    PotentialKind.MODIFIED_POSCHL_TELLER: "E and V0 in units of hbar^2 alpha^2/(2 m)",
}


@dataclass(frozen=True)
class PhaseTriple:
    """(A, B, C) of a Sommerfeld-form momentum, with family and variable tags.

    For the hyperbolic family only ``eps`` is meaningful; A, B, C are None.
    """

    A: Optional[float]
    B: Optional[float]
    C: Optional[float]
    family: str  # "radial" | "trigonometric" | "hyperbolic"
    variable: str
    eps: Optional[float] = None


@dataclass(frozen=True)
class PotentialModel:
    """Immutable description of one catalog entry.

    Attributes
    ----------
    kind : PotentialKind
    params : dict of the kind's named real parameters
    dim : spatial dimension (3 for the hydrogenic kinds, 1 for the
        Poeschl-Teller wells, free for the n-dimensional kinds)
    domain : open interval of the spatial coordinate
    units : textual record of the dimensionless convention
    langer : whether the centrifugal term carries the Langer replacement
    """

    kind: PotentialKind
    params: dict
    dim: int
    domain: tuple
    units: str
    langer: bool = True

    def __post_init__(self):
        object.__setattr__(self, "params", dict(self.params))

    @property
    def l_eff(self) -> float:
        """Effective angular label l + (dim - 3)/2 of the dimension lift."""
        if "l" not in self.params:
            raise NotApplicable(f"{self.kind.value} carries no orbital label l")
        return dimension_lift(self.params["l"], self.dim)

    @property
    def nu(self) -> float:
        """Dirac root parameter sqrt((j + 1/2)**2 - mu**2), always positive."""
        if self.kind is not PotentialKind.DIRAC:
            raise NotApplicable("nu is defined for the dirac kind only")
        j, mu = self.params["j"], self.params["mu"]
        return math.sqrt((j + 0.5) ** 2 - mu**2)

    @property
    def nu_eff(self) -> float:
        """Signed root parameter selecting one of the two partner equations."""
        return self.params.get("nu_sign", -1) * self.nu

    def with_langer(self, flag: bool) -> "PotentialModel":
        """Copy of this model with the Langer flag replaced."""
        return replace(self, langer=flag)


def dimension_lift(l: int, dim: int) -> float:
    """Effective angular label making the R^dim radial equation look 3-dimensional.

    Returns l + (dim - 3)/2.
    """
    if not isinstance(l, (int, np.integer)) or l < 0:
        raise InvalidParameter(f"l must be a nonnegative integer, got {l!r}")
    if not isinstance(dim, (int, np.integer)) or dim < 1:
        raise UnsupportedDimension(f"dim must be an integer >= 1, got {dim!r}")
    return l + (dim - 3) / 2


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidParameter(message)


def _check_l(params):
    l = params.get("l")
    _require(l is not None, "missing parameter l")
    _require(isinstance(l, (int, np.integer)) and l >= 0, f"l must be a nonnegative integer, got {l!r}")
    return int(l)


def build_model(
    kind: Union[PotentialKind, str],
    dim: Optional[int] = None,
    langer: bool = True,
    **params,
) -> PotentialModel:
    """Validate parameters and assemble a :class:`PotentialModel`.

    Parameters by kind:

    * ``coulomb``: Z > 0, l in {0, 1, ...} (dim fixed to 3)
    * ``relativistic_kg``: mu in (0, l + 1/2), l in {0, 1, ...}
    * ``dirac``: mu in (0, j + 1/2), j in {1/2, 3/2, ...},
      optional nu_sign in {-1, +1} choosing between the two partner
      second-order equations (default -1, the branch whose spectrum starts
      at the nodeless ground level)
    * ``kratzer``: gamma2 > 0, l in {0, 1, ...}
    * ``kepler_nd``: Z > 0, l in {0, 1, ...}, dim >= 1
    * ``oscillator_nd``: l in {0, 1, ...}, dim >= 1
    * ``poschl_teller``: a > 1, b > 1, alpha > 0, V0 > 0
    * ``modified_poschl_teller``: V0 > 0, alpha > 0

    Raises InvalidParameter, SupercriticalCoupling or UnsupportedDimension
    when a constraint fails; the message names the violated constraint.
    """
    kind = PotentialKind(kind)
    p = dict(params)

    fixed_dim = {
        PotentialKind.COULOMB: 3,
        PotentialKind.RELATIVISTIC_KG: 3,
        PotentialKind.DIRAC: 3,
        PotentialKind.KRATZER: 3,
        PotentialKind.POSCHL_TELLER: 1,
        PotentialKind.MODIFIED_POSCHL_TELLER: 1,
    }
    if kind in fixed_dim:
        if dim is None:
            dim = fixed_dim[kind]
        elif dim != fixed_dim[kind]:
            raise UnsupportedDimension(
                f"{kind.value} is defined for dim = {fixed_dim[kind]} only, got {dim}"
            )
    else:
        if dim is None:
            dim = 3
        if not isinstance(dim, (int, np.integer)) or dim < 1:
            raise UnsupportedDimension(f"dim must be an integer >= 1, got {dim!r}")
        dim = int(dim)

    domain = (0.0, math.inf)

    if kind in (PotentialKind.COULOMB, PotentialKind.KEPLER_ND):
        Z = p.get("Z")
        _require(Z is not None and Z > 0, "Z must be positive")
        p["l"] = _check_l(p)
        p = {"Z": float(Z), "l": p["l"]}
    elif kind is PotentialKind.RELATIVISTIC_KG:
        mu = p.get("mu")
        l = _check_l(p)
        _require(mu is not None and mu > 0, "mu must be positive")
        if mu >= l + 0.5:
            raise SupercriticalCoupling(
                f"mu = {mu} >= l + 1/2 = {l + 0.5}: root parameter becomes non-real"
            )
        p = {"mu": float(mu), "l": l}
    elif kind is PotentialKind.DIRAC:
        mu, j = p.get("mu"), p.get("j")
        _require(mu is not None and mu > 0, "mu must be positive")
        _require(j is not None, "missing parameter j")
        two_j = 2 * j
        _require(
            abs(two_j - round(two_j)) < 1e-12 and round(two_j) % 2 == 1 and j > 0,
            f"j must be a positive half-odd integer, got {j!r}",
        )
        if mu >= j + 0.5:
            raise SupercriticalCoupling(
                f"mu = {mu} >= j + 1/2 = {j + 0.5}: root parameter becomes non-real"
            )
        nu_sign = p.get("nu_sign", -1)
        _require(nu_sign in (-1, 1), "nu_sign must be -1 or +1")
        p = {"mu": float(mu), "j": float(j), "nu_sign": int(nu_sign)}
    elif kind is PotentialKind.KRATZER:
        g2 = p.get("gamma2")
        l = _check_l(p)
        _require(g2 is not None and g2 > 0, "gamma2 must be positive")
        p = {"gamma2": float(g2), "l": l}
    elif kind is PotentialKind.OSCILLATOR_ND:
        l = _check_l(p)
        p = {"l": l}
    elif kind is PotentialKind.POSCHL_TELLER:
        a, b = p.get("a"), p.get("b")
        alpha, V0 = p.get("alpha", 1.0), p.get("V0", 1.0)
        _require(a is not None and a > 1, "a must exceed 1")
        _require(b is not None and b > 1, "b must exceed 1")
        _require(alpha > 0, "alpha must be positive")
        _require(V0 > 0, "V0 must be positive")
        p = {"a": float(a), "b": float(b), "alpha": float(alpha), "V0": float(V0)}
        domain = (0.0, math.pi / (2 * p["alpha"]))
    elif kind is PotentialKind.MODIFIED_POSCHL_TELLER:
        alpha, V0 = p.get("alpha", 1.0), p.get("V0")
        _require(V0 is not None and V0 > 0, "V0 must be positive")
        _require(alpha > 0, "alpha must be positive")
        p = {"V0": float(V0), "alpha": float(alpha)}
        domain = (-math.inf, math.inf)

    unknown = set(params) - set(p)
    if unknown:
        raise InvalidParameter(f"unknown parameter(s) for {kind.value}: {sorted(unknown)}")

    return PotentialModel(
        kind=kind, params=p, dim=int(dim), domain=domain, units=_UNITS[kind], langer=langer
    )


def _centrifugal_coefficient(model: PotentialModel) -> float:
    """Coefficient of 1/x**2 subtracted from p2, before or after Langer.

    For the relativistic kinds this is the coefficient appearing alongside
    the squared Coulomb term (E + mu/x)**2, i.e. the Langer rule acts on the
    full 1/x**2 content of the equation.
    """
    k, p = model.kind, model.params
    if k in (PotentialKind.COULOMB, PotentialKind.KEPLER_ND, PotentialKind.OSCILLATOR_ND):
        le = model.l_eff
        return (le + 0.5) ** 2 if model.langer else le * (le + 1.0)
    if k is PotentialKind.RELATIVISTIC_KG:
        l = p["l"]
        return (l + 0.5) ** 2 if model.langer else l * (l + 1.0)
    if k is PotentialKind.DIRAC:
        ne = model.nu_eff
        # written against (E + mu/x)**2, hence the extra mu**2
        return ((ne + 0.5) ** 2 if model.langer else ne * (ne + 1.0)) + p["mu"] ** 2
    if k is PotentialKind.KRATZER:
        l = p["l"]
        return p["gamma2"] + ((l + 0.5) ** 2 if model.langer else l * (l + 1.0))
    raise NotApplicable(f"{k.value} has no single centrifugal coefficient")


def langer_term(model: PotentialModel):
    """Coefficient of the inverse-square term after the Langer replacement.

    Reported in the form each equation is conventionally written in:
    (l_eff + 1/2)**2 for the hydrogenic/oscillator kinds, gamma2 + (l+1/2)**2
    for kratzer, the expanded total (l + 1/2)**2 - mu**2 for the spinless
    relativistic equation, (nu_eff + 1/2)**2 + mu**2 alongside the squared
    Coulomb term for dirac, and the ((a-1/2)**2, (b-1/2)**2) pair for
    poschl_teller.  Raises NotApplicable for ``modified_poschl_teller`` (the
    well has no inverse-square structure and no replacement is applied) and
    for models built with ``langer=False``.
    """
    if model.kind is PotentialKind.MODIFIED_POSCHL_TELLER:
        raise NotApplicable("no Langer-type replacement is applied to modified_poschl_teller")
    if not model.langer:
        raise NotApplicable("model was built with langer=False")
    if model.kind is PotentialKind.POSCHL_TELLER:
        a, b = model.params["a"], model.params["b"]
        return ((a - 0.5) ** 2, (b - 0.5) ** 2)
    if model.kind is PotentialKind.RELATIVISTIC_KG:
        return (model.params["l"] + 0.5) ** 2 - model.params["mu"] ** 2
    return _centrifugal_coefficient(model)


def effective_momentum_squared(model: PotentialModel, E: float, x):
    """p2(x, E) of the model's wave equation, Langer-modified iff model.langer.

    Accepts a scalar or ndarray ``x`` strictly inside the open domain.
    """
    xa = np.asarray(x, dtype=float)
    lo, hi = model.domain
    if np.any(xa <= lo) or np.any(xa >= hi):
        raise DomainViolation(f"x must lie strictly inside {model.domain}")

    k, p = model.kind, model.params
    if k in (PotentialKind.COULOMB, PotentialKind.KEPLER_ND):
        out = 2.0 * (E + p["Z"] / xa) - _centrifugal_coefficient(model) / xa**2
    elif k in (PotentialKind.RELATIVISTIC_KG, PotentialKind.DIRAC):
        out = (E + p["mu"] / xa) ** 2 - 1.0 - _centrifugal_coefficient(model) / xa**2
    elif k is PotentialKind.KRATZER:
        out = E + 2.0 * p["gamma2"] / xa - _centrifugal_coefficient(model) / xa**2
    elif k is PotentialKind.OSCILLATOR_ND:
        out = 2.0 * E - xa**2 - _centrifugal_coefficient(model) / xa**2
    elif k is PotentialKind.POSCHL_TELLER:
        a, b, alpha, V0 = p["a"], p["b"], p["alpha"], p["V0"]
        theta = alpha * xa
        ca = (a - 0.5) ** 2 if model.langer else a * (a - 1.0)
        cb = (b - 0.5) ** 2 if model.langer else b * (b - 1.0)
        out = alpha**2 * (2.0 * E / V0 - ca / np.sin(theta) ** 2 - cb / np.cos(theta) ** 2)
    else:  # modified_poschl_teller; no modification exists for this well
        V0, alpha = p["V0"], p["alpha"]
        out = alpha**2 * (E + V0 / np.cosh(alpha * xa) ** 2)
    return out if out.ndim else float(out)


def abc_coefficients(model: PotentialModel, E: float) -> PhaseTriple:
    """Sommerfeld coefficients of the Langer-modified momentum at energy E.

    Radial kinds return (A, B, C) in the native coordinate; the oscillator
    returns the triple of the xi = r**2 substitution; poschl_teller returns
    the trigonometric triple in theta = alpha*x; modified_poschl_teller is
    parameterized by eps = -E/V0 alone.
    """
    if not model.langer and model.kind is not PotentialKind.MODIFIED_POSCHL_TELLER:
        raise InvalidParameter("abc_coefficients requires the Langer-modified model")
    k, p = model.kind, model.params

    if k in (PotentialKind.COULOMB, PotentialKind.KEPLER_ND):
        if E >= 0:
            raise OutOfBoundRange(f"bound states require E < 0, got E = {E}")
        C = _centrifugal_coefficient(model)
        if C <= 0:
            raise OutOfBoundRange(
                "Sommerfeld form needs C > 0: l + (dim - 2)/2 must be nonzero "
                f"(l = {p['l']}, dim = {model.dim})"
            )
        return PhaseTriple(-2.0 * E, 2.0 * p["Z"], C, "radial", "x")

    if k in (PotentialKind.RELATIVISTIC_KG, PotentialKind.DIRAC):
        if not 0.0 < E < 1.0:
            raise OutOfBoundRange(f"bound states require 0 < E < 1 (mc^2 units), got E = {E}")
        mu = p["mu"]
        C = _centrifugal_coefficient(model) - mu**2
        if C <= 0:
            raise OutOfBoundRange("Sommerfeld form needs C > 0: root parameter too small")
        return PhaseTriple(1.0 - E**2, 2.0 * mu * E, C, "radial", "x")

    if k is PotentialKind.KRATZER:
        if E >= 0:
            raise OutOfBoundRange(f"bound states require E < 0, got E = {E}")
        return PhaseTriple(-E, 2.0 * p["gamma2"], _centrifugal_coefficient(model), "radial", "x")

    if k is PotentialKind.OSCILLATOR_ND:
        if E <= 0:
            raise OutOfBoundRange(f"bound states require E > 0, got E = {E}")
        half = model.l_eff + 0.5
        if half <= 0:
            raise OutOfBoundRange(
                "Sommerfeld form needs C > 0: l + (dim - 2)/2 must be positive "
                f"(l = {p['l']}, dim = {model.dim})"
            )
        return PhaseTriple(0.25, 0.5 * E, 0.25 * half**2, "radial", "xi = r^2")

    if k is PotentialKind.POSCHL_TELLER:
        if E <= 0:
            raise OutOfBoundRange(f"bound states require E > 0, got E = {E}")
        a, b = p["a"], p["b"]
        return PhaseTriple(
            2.0 * E / p["V0"], (b - 0.5) ** 2, (a - 0.5) ** 2, "trigonometric", "theta = alpha*x"
        )

    eps = -E / p["V0"]
    if not 0.0 < eps <= 1.0:
        raise OutOfBoundRange(f"bound states require -V0 <= E < 0, got E = {E}")
    return PhaseTriple(None, None, None, "hyperbolic", "eps = -E/V0", eps=eps)


def bound_energy_window(model: PotentialModel):
    """Open interval of admissible bound energies, in the model's unit.

    A ``None`` endpoint means the side is unbounded for bracketing purposes
    (arbitrarily deep Coulomb scans below, confining wells above).
    """
    k, p = model.kind, model.params
    if k in (PotentialKind.COULOMB, PotentialKind.KEPLER_ND):
        return None, 0.0
    if k is PotentialKind.KRATZER:
        return -p["gamma2"] ** 2, 0.0
    if k in (PotentialKind.RELATIVISTIC_KG, PotentialKind.DIRAC):
        return 0.0, 1.0
    if k is PotentialKind.MODIFIED_POSCHL_TELLER:
        return -p["V0"], 0.0
    return 0.0, None


def energy_scale(model: PotentialModel) -> float:
    """Characteristic magnitude of bound energies, used to seed brackets."""
    k, p = model.kind, model.params
    if k in (PotentialKind.COULOMB, PotentialKind.KEPLER_ND):
        return p["Z"] ** 2
    if k is PotentialKind.KRATZER:
        return p["gamma2"] ** 2
    if k is PotentialKind.POSCHL_TELLER:
        return p["V0"] * (p["a"] + p["b"]) ** 2
    if k is PotentialKind.MODIFIED_POSCHL_TELLER:
        return p["V0"]
    return 1.0
