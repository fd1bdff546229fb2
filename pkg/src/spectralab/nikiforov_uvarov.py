"""Nikiforov-Uvarov reduction of hypergeometric-type equations.

Given u'' + (tau_t/sigma) u' + (sigma_t/sigma**2) u = 0 with polynomial
coefficients (deg sigma, sigma_t <= 2, deg tau_t <= 1), the method picks a
constant k so that the quadratic under the radical of

    pi(x) = (sigma' - tau_t)/2 +- sqrt(((sigma' - tau_t)/2)**2 - sigma_t + k*sigma)

is a perfect square, making pi linear.  Eigenvalues follow from the
quantization rule lambda + n*tau' + n*(n-1)*sigma''/2 = 0.

Specialized to the Sommerfeld class (sigma = x, sigma_t = -a x**2 + b x - c
+ 1/4) the rule collapses to b/(2*sqrt(a)) - sqrt(c) = n + 1/2, and the
machine check of this module is that (a, b, c) coincide with the (A, B, C)
of the Langer-modified phase integral: the coefficient-level reason the
semiclassical and exact ladders agree for this whole class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import potentials as pot
from .errors import (
    AmbiguousBranch,
    DegenerateSigma,
    InvalidParameter,
    NoBoundBranch,
    NoRealK,
    NotSommerfeldType,
)
from .potentials import PhaseTriple, PotentialKind, PotentialModel, abc_coefficients

__all__ = [
    "HypergeometricCoefficients",
    "Reduction",
    "SommerfeldCoefficients",
    "hypergeometric_form",
    "reduce_hypergeometric",
    "select_bound_state_branch",
    "nu_eigenvalue_residual",
    "sommerfeld_quantization",
    "verify_puzzle",
    "PuzzleReport",
]


def _aspoly(coeffs, max_deg, name):
    c = tuple(float(v) for v in coeffs)
    if len(c) == 0 or len(c) > max_deg + 1:
        raise InvalidParameter(f"{name} must have between 1 and {max_deg + 1} coefficients")
    return c + (0.0,) * (max_deg + 1 - len(c))


@dataclass(frozen=True)
class HypergeometricCoefficients:
    """Ascending-order coefficients (sigma, tau_tilde, sigma_tilde)."""

    sigma: tuple
    tau_tilde: tuple
    sigma_tilde: tuple

    def __post_init__(self):
        object.__setattr__(self, "sigma", _aspoly(self.sigma, 2, "sigma"))
        object.__setattr__(self, "tau_tilde", _aspoly(self.tau_tilde, 1, "tau_tilde"))
        object.__setattr__(self, "sigma_tilde", _aspoly(self.sigma_tilde, 2, "sigma_tilde"))
        if all(v == 0.0 for v in self.sigma):
            raise DegenerateSigma("sigma must not vanish identically")


@dataclass(frozen=True)
class Reduction:
    """One completed-square branch of the reduction.

    ``branch`` records the two choices made: which root of the
    discriminant equation supplied k, and the sign in front of the radical.
    ``radical_quadratic`` holds the under-radical coefficients (ascending)
    whose discriminant vanishes to within ``square_residual``.
    """

    k: float
    pi_poly: tuple  # (c0, c1)
    tau_poly: tuple  # (c0, c1)
    lam: float
    branch: tuple  # (k_root_index, sign)
    radical_quadratic: tuple  # (r0, r1, r2)
    square_residual: float

    @property
    def tau_slope(self) -> float:
        return self.tau_poly[1]


@dataclass(frozen=True)
class SommerfeldCoefficients:
    """(a, b, c) of the canonical Sommerfeld reduction; a > 0, c >= 0."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        if self.a <= 0:
            raise InvalidParameter(f"a must be positive, got {self.a}")
        if self.c < 0:
            raise InvalidParameter(f"c must be nonnegative, got {self.c}")


def hypergeometric_form(model: PotentialModel, E: float) -> HypergeometricCoefficients:
    """Hypergeometric-type coefficients of the model's original equation.

    Built from the unmodified dynamics regardless of ``model.langer``: the
    +1/4 (radial, native x) or +1/16 (oscillator, xi = r**2) shift inside
    sigma_tilde is what encodes the Langer bookkeeping on this side of the
    comparison.  Only the six radial-family kinds reduce this way.
    """
    k, p = model.kind, model.params
    if k not in pot.RADIAL_FAMILY_KINDS:
        raise NotSommerfeldType(f"{k.value} admits no Sommerfeld-form reduction")

    if k is PotentialKind.OSCILLATOR_ND:
        le = model.l_eff
        return HypergeometricCoefficients(
            sigma=(0.0, 1.0),
            tau_tilde=(0.5,),
            sigma_tilde=(-le * (le + 1.0) / 4.0, E / 2.0, -0.25),
        )

    # native radial kinds: sigma_tilde = x**2 * q_unmodified(x, E)
    if k in (PotentialKind.COULOMB, PotentialKind.KEPLER_ND):
        le = model.l_eff
        aq, bq, cq = -2.0 * E, 2.0 * p["Z"], le * (le + 1.0)
    elif k is PotentialKind.RELATIVISTIC_KG:
        l = p["l"]
        aq, bq, cq = 1.0 - E * E, 2.0 * p["mu"] * E, l * (l + 1.0) - p["mu"] ** 2
    elif k is PotentialKind.DIRAC:
        ne = model.nu_eff
        aq, bq, cq = 1.0 - E * E, 2.0 * p["mu"] * E, ne * (ne + 1.0)
    else:  # kratzer
        l = p["l"]
        aq, bq, cq = -E, 2.0 * p["gamma2"], p["gamma2"] + l * (l + 1.0)
    return HypergeometricCoefficients(
        sigma=(0.0, 1.0), tau_tilde=(0.0,), sigma_tilde=(-cq, bq, -aq)
    )


def _half_diff(sigma, tau_tilde):
    """(sigma' - tau_tilde)/2 as a linear polynomial (w0, w1)."""
    s0, s1, s2 = sigma
    return ((s1 - tau_tilde[0]) / 2.0, (2.0 * s2 - tau_tilde[1]) / 2.0)


def _radical_polynomial(coeffs: HypergeometricCoefficients):
    """P(x) with R(x) = P(x) + k*sigma(x) under the radical; returns (P, w)."""
    w0, w1 = _half_diff(coeffs.sigma, coeffs.tau_tilde)
    st = coeffs.sigma_tilde
    P = (w0 * w0 - st[0], 2.0 * w0 * w1 - st[1], w1 * w1 - st[2])
    return P, (w0, w1)


def _solve_quadratic(a, b, c, scale):
    """Real roots of a*k**2 + b*k + c = 0, degenerate cases included."""
    tol = 1e-13 * scale
    if abs(a) <= tol:
        if abs(b) <= tol:
            if abs(c) <= tol:
                raise DegenerateSigma(
                    "discriminant equation vanishes identically; k is unconstrained"
                )
            raise NoRealK("discriminant equation has no solution")
        return [-c / b]
    disc = b * b - 4.0 * a * c
    if disc < -1e-12 * max(b * b, abs(4.0 * a * c), scale**2):
        raise NoRealK(f"discriminant equation has complex roots (disc = {disc})")
    disc = max(disc, 0.0)
    root = math.sqrt(disc)
    if root == 0.0:
        return [-b / (2.0 * a)]
    # stable splitting: compute the larger-magnitude root first
    q = -0.5 * (b + math.copysign(root, b))
    k1, k2 = q / a, c / q
    return sorted((k1, k2))


def reduce_hypergeometric(coeffs: HypergeometricCoefficients) -> list:
    """All completed-square reductions: k roots crossed with radical signs.

    Up to four reductions (two k roots, two signs).  Branches whose
    under-radical quadratic is negative-definite carry no real square root
    and are dropped; NoRealK is raised when nothing survives.
    """
    P, w = _radical_polynomial(coeffs)
    s0, s1, s2 = coeffs.sigma
    scale = max(1.0, *(abs(v) for v in P), *(abs(v) for v in coeffs.sigma))

    # discriminant of R(x) = P + k*sigma as a quadratic in k
    ka = s1 * s1 - 4.0 * s2 * s0
    kb = 2.0 * P[1] * s1 - 4.0 * (P[2] * s0 + P[0] * s2)
    kc = P[1] * P[1] - 4.0 * P[2] * P[0]
    k_roots = _solve_quadratic(ka, kb, kc, scale)

    reductions = []
    for idx, k in enumerate(k_roots):
        R = (P[0] + k * s0, P[1] + k * s1, P[2] + k * s2)
        residual = abs(R[1] * R[1] - 4.0 * R[2] * R[0])
        sq_tol = 1e-10 * max(1.0, R[1] * R[1], abs(4.0 * R[2] * R[0]))
        if abs(R[2]) > sq_tol:
            if R[2] < 0.0:
                continue  # negative-definite: no real root anywhere
            p1 = math.sqrt(R[2])
            p0 = R[1] / (2.0 * p1)
        else:
            if R[0] < -sq_tol:
                continue
            p1 = 0.0
            p0 = math.sqrt(max(R[0], 0.0))
        for sign in (+1, -1):
            pi_poly = (w[0] + sign * p0, w[1] + sign * p1)
            tau_poly = (
                coeffs.tau_tilde[0] + 2.0 * pi_poly[0],
                coeffs.tau_tilde[1] + 2.0 * pi_poly[1],
            )
            reductions.append(
                Reduction(
                    k=k,
                    pi_poly=pi_poly,
                    tau_poly=tau_poly,
                    lam=k + pi_poly[1],
                    branch=(idx, sign),
                    radical_quadratic=R,
                    square_residual=residual,
                )
            )
    if not reductions:
        raise NoRealK("no k root yields a real perfect square")
    return reductions


def select_bound_state_branch(reductions: Sequence[Reduction]) -> Reduction:
    """The reduction supporting normalizable bound solutions.

    Requires tau' < 0.  Two branches can share that slope; they are told
    apart by regularity of the weight function rho, (sigma*rho)' = tau*rho,
    at the finite endpoint x0 where sigma vanishes: rho ~ x**(tau(x0) - 1)
    there, so the branch with the larger tau(x0) is the regular one (the
    same choice the quantization chain makes for every catalog kind).
    """
    if not reductions:
        raise InvalidParameter("empty reduction list")
    decreasing = [r for r in reductions if r.tau_slope < 0.0]
    if not decreasing:
        raise NoBoundBranch("no reduction has tau' < 0")
    if len(decreasing) == 1:
        return decreasing[0]

    # all our inputs have sigma = x; more generally use sigma's smallest root
    x0 = 0.0
    keyed = sorted(decreasing, key=lambda r: r.tau_poly[0] + r.tau_poly[1] * x0, reverse=True)
    k0 = keyed[0].tau_poly[0] + keyed[0].tau_poly[1] * x0
    k1 = keyed[1].tau_poly[0] + keyed[1].tau_poly[1] * x0
    if abs(k0 - k1) <= 1e-12 * max(1.0, abs(k0), abs(k1)):
        raise AmbiguousBranch("two decreasing branches with equal boundary weight")
    return keyed[0]


def nu_eigenvalue_residual(reduction: Reduction, sigma, n: int) -> float:
    """lambda + n*tau' + n*(n-1)*sigma''/2; zero iff level n quantizes."""
    if n < 0:
        raise InvalidParameter(f"n must be >= 0, got {n}")
    s = _aspoly(sigma, 2, "sigma")
    return reduction.lam + n * reduction.tau_slope + 0.5 * n * (n - 1) * 2.0 * s[2]


def sommerfeld_quantization(sc: SommerfeldCoefficients, n: int) -> float:
    """b/(2*sqrt(a)) - sqrt(c) - (n + 1/2); zero iff level n exists."""
    return sc.b / (2.0 * math.sqrt(sc.a)) - math.sqrt(sc.c) - (n + 0.5)


@dataclass(frozen=True)
class PuzzleSample:
    E: float
    nu_abc: tuple  # (a, b, c) from the reduction side
    wkb_abc: tuple  # (A, B, C) from the phase-integral side
    deviations: tuple


@dataclass(frozen=True)
class PuzzleReport:
    kind: str
    samples: tuple
    max_dev_a: float
    max_dev_b: float
    max_dev_c: float
    tolerance: float
    passed: bool

    def __bool__(self):
        return self.passed


def verify_puzzle(
    model: PotentialModel, E_samples: Sequence[float], tolerance: float = 1e-12
) -> PuzzleReport:
    """Check a = A, b = B, c = C between the two quantization routes.

    For each sample energy, (A, B, C) come from the Langer-modified phase
    integrand and (a, b, c) from the Nikiforov-Uvarov reduction of the
    original equation: a and c are the edge coefficients of the
    under-radical quadratic, b is the mean of the two completing-constant
    roots k = b -+ 2*sqrt(a*c).  Both routes must agree to ``tolerance``.
    """
    if model.kind not in pot.RADIAL_FAMILY_KINDS:
        raise NotSommerfeldType(f"{model.kind.value} is not a Sommerfeld-type kind")
    wkb_model = model if model.langer else model.with_langer(True)

    samples = []
    devs = []
    for E in E_samples:
        triple: PhaseTriple = abc_coefficients(wkb_model, float(E))
        reductions = reduce_hypergeometric(hypergeometric_form(model, float(E)))
        R = reductions[0].radical_quadratic  # sigma = x: edge coefficients k-free
        a, c = R[2], R[0]
        ks = sorted({r.k for r in reductions})
        b = 0.5 * (ks[0] + ks[-1]) if len(ks) > 1 else ks[0]
        d = (abs(a - triple.A), abs(b - triple.B), abs(c - triple.C))
        devs.append(d)
        samples.append(
            PuzzleSample(
                E=float(E),
                nu_abc=(a, b, c),
                wkb_abc=(triple.A, triple.B, triple.C),
                deviations=d,
            )
        )
    max_a = max(d[0] for d in devs)
    max_b = max(d[1] for d in devs)
    max_c = max(d[2] for d in devs)
    return PuzzleReport(
        kind=model.kind.value,
        samples=tuple(samples),
        max_dev_a=max_a,
        max_dev_b=max_b,
        max_dev_c=max_c,
        tolerance=tolerance,
        passed=max(max_a, max_b, max_c) <= tolerance,
    )
