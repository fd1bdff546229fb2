"""Independent quadrature oracles used only by the test suite.

Each integral is evaluated by the sin^2 substitution that absorbs the
square-root turning-point singularities, followed by fixed-order
Gauss-Legendre.  Turning points come from direct root formulas here, so
nothing is shared with the production evaluation paths.
"""

import numpy as np

_GL_ORDER = 400
_gl_x, _gl_w = np.polynomial.legendre.leggauss(_GL_ORDER)
_PHI = 0.25 * np.pi * (_gl_x + 1.0)  # nodes mapped to (0, pi/2)
_W = 0.25 * np.pi * _gl_w


def _bridge(f, lo, hi):
    """Gauss-Legendre of f over (lo, hi) after x = lo + (hi-lo)*sin(phi)**2."""
    width = hi - lo
    x = lo + width * np.sin(_PHI) ** 2
    vals = f(x) * width * np.sin(2.0 * _PHI)
    return float(np.dot(_W, vals))


def sommerfeld_quadrature(A, B, C):
    disc = np.sqrt(max(B * B - 4.0 * A * C, 0.0))
    r1 = (B - disc) / (2.0 * A)
    r2 = (B + disc) / (2.0 * A)
    f = lambda r: np.sqrt(np.maximum(-A + B / r - C / r**2, 0.0))
    return _bridge(f, r1, r2)


def trig_quadrature(A, B, C):
    disc = np.sqrt(max((A - B - C) ** 2 - 4.0 * B * C, 0.0))
    T_hi = (B - C + disc) / A
    T_lo = (B - C - disc) / A
    t1 = 0.5 * np.arccos(np.clip(T_hi, -1.0, 1.0))
    t2 = 0.5 * np.arccos(np.clip(T_lo, -1.0, 1.0))
    f = lambda t: np.sqrt(np.maximum(A - B / np.cos(t) ** 2 - C / np.sin(t) ** 2, 0.0))
    return _bridge(f, t1, t2)


def hyperbolic_quadrature(eps):
    x0 = np.arccosh(1.0 / np.sqrt(eps))
    f = lambda x: np.sqrt(np.maximum(1.0 / np.cosh(x) ** 2 - eps, 0.0))
    return 2.0 * _bridge(f, 0.0, x0)  # even integrand
