"""Closed forms of the three action integrals behind Bohr-Sommerfeld spectra.

The radial (Sommerfeld), trigonometric and hyperbolic integrals all admit
elementary closed forms, classically obtained by differentiating under the
integral sign with respect to a parameter and integrating back from the
turning-point-coalescence anchor where the integral vanishes.
"""

from __future__ import annotations

import math

from .errors import InvalidParameter, NoClassicalRegion, OutOfRange

__all__ = [
    "sommerfeld_integral",
    "trig_integral",
    "hyperbolic_integral",
    "quadratic_turning_points",
]

# Slack for detecting the coalescence anchor in floating point.
_EDGE_RTOL = 1e-12


def sommerfeld_integral(A: float, B: float, C: float) -> float:
    """Integral of sqrt(-A + B/r - C/r**2) between its positive roots.

    Requires A > 0, C > 0 and B >= 2*sqrt(A*C).  Returns
    pi*(B/(2*sqrt(A)) - sqrt(C)); exactly 0.0 at the coalescence point
    B = 2*sqrt(A*C).
    """
    if A <= 0 or C <= 0:
        raise InvalidParameter(f"need A > 0 and C > 0, got A = {A}, C = {C}")
    s = B / (2.0 * math.sqrt(A)) - math.sqrt(C)
    slack = _EDGE_RTOL * (abs(B) / (2.0 * math.sqrt(A)) + math.sqrt(C))
    if s <= slack:
        if s < -slack:
            raise NoClassicalRegion(f"B = {B} < 2*sqrt(A*C) = {2 * math.sqrt(A * C)}")
        return 0.0
    return math.pi * s


def trig_integral(A: float, B: float, C: float) -> float:
    """Integral of sqrt(A - B/cos(t)**2 - C/sin(t)**2) over its allowed arc.

    Requires A > 0, B >= 0, C >= 0 and sqrt(A) >= sqrt(B) + sqrt(C).
    Returns (pi/2)*(sqrt(A) - sqrt(B) - sqrt(C)); exactly 0.0 at the anchor
    A = (sqrt(B) + sqrt(C))**2.
    """
    if A <= 0 or B < 0 or C < 0:
        raise InvalidParameter(f"need A > 0, B >= 0, C >= 0, got A = {A}, B = {B}, C = {C}")
    s = math.sqrt(A) - math.sqrt(B) - math.sqrt(C)
    slack = _EDGE_RTOL * (math.sqrt(A) + math.sqrt(B) + math.sqrt(C))
    if s <= slack:
        if s < -slack:
            raise NoClassicalRegion(
                f"sqrt(A) = {math.sqrt(A)} < sqrt(B) + sqrt(C) = {math.sqrt(B) + math.sqrt(C)}"
            )
        return 0.0
    return 0.5 * math.pi * s


def hyperbolic_integral(eps: float) -> float:
    """Integral of sqrt(sech(x)**2 - eps) over (-x0, x0), sech(x0)**2 = eps.

    Defined for 0 < eps <= 1; returns pi*(1 - sqrt(eps)), which vanishes at
    eps = 1 where the turning points merge at the origin.
    """
    if not 0.0 < eps <= 1.0:
        raise OutOfRange(f"eps must lie in (0, 1], got {eps}")
    return math.pi * (1.0 - math.sqrt(eps))


def quadratic_turning_points(A: float, B: float, C: float, family: str = "radial"):
    """Turning points of the radial or trigonometric integrand.

    radial: the two positive roots of -A*r**2 + B*r - C = 0, returned as
    (r1, r2) with 0 < r1 <= r2.  trigonometric: the angles (t1, t2) where
    A - B/cos(t)**2 - C/sin(t)**2 = 0, obtained from the roots in
    T = cos(2*t).
    """
    if family == "radial":
        if A <= 0 or C <= 0:
            raise InvalidParameter(f"need A > 0 and C > 0, got A = {A}, C = {C}")
        disc = B * B - 4.0 * A * C
        if disc < 0.0:
            if disc < -_EDGE_RTOL * (B * B + 4.0 * A * C):
                raise NoClassicalRegion(f"B**2 - 4*A*C = {disc} < 0")
            disc = 0.0
        root = math.sqrt(disc)
        r2 = (B + root) / (2.0 * A)
        r1 = (C / A) / r2 if r2 > 0 else 0.0  # product of roots, avoids cancellation
        return (r1, r2)

    if family == "trigonometric":
        if A <= 0 or B < 0 or C < 0:
            raise InvalidParameter(f"need A > 0, B >= 0, C >= 0, got A = {A}, B = {B}, C = {C}")
        disc = (A - B - C) ** 2 - 4.0 * B * C
        if disc < 0.0:
            if disc < -_EDGE_RTOL * ((A - B - C) ** 2 + 4.0 * B * C):
                raise NoClassicalRegion(f"(A - B - C)**2 - 4*B*C = {disc} < 0")
            disc = 0.0
        root = math.sqrt(disc)
        T_lo = (B - C - root) / A
        T_hi = (B - C + root) / A
        # theta decreases as T = cos(2*theta) increases
        t1 = 0.5 * math.acos(min(1.0, max(-1.0, T_hi)))
        t2 = 0.5 * math.acos(min(1.0, max(-1.0, T_lo)))
        return (t1, t2)

    raise InvalidParameter(f"family must be 'radial' or 'trigonometric', got {family!r}")
