"""Small-coupling expansions of the two relativistic Coulomb spectra.

Both exact level formulas expand as

    E/mc^2 = 1 - mu^2/(2 n^2) - mu^4/(2 n^4) * (n/(x + 1/2) - 3/4) + O(mu^6)

with x = l for the spinless equation and x = j for the spin-1/2 one.  The
coefficients here are extracted numerically from the exact formulas on a
descending ladder of couplings, so the check stays independent of hand
algebra, and the classic ratio of maximum fine-structure spreads

    spread(spinless)/spread(spin-1/2) -> 4n/(2n - 1)

is reproduced directly.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import FitUnstable, InvalidParameter, SupercriticalCoupling
from .spectra import relativistic_binding

__all__ = ["expansion_coefficients", "level_spread", "spread_ratio"]


def _binding(theory: str, mu: float, n_r: int, angular: float) -> float:
    """1 - E/mc^2 for the requested theory, cancellation-free."""
    if theory == "kg":
        if mu >= angular + 0.5:
            raise SupercriticalCoupling(f"mu = {mu} >= l + 1/2 = {angular + 0.5}")
        D = n_r + 0.5 + math.sqrt((angular + 0.5) ** 2 - mu**2)
    elif theory == "dirac":
        if mu >= angular + 0.5:
            raise SupercriticalCoupling(f"mu = {mu} >= j + 1/2 = {angular + 0.5}")
        D = n_r + math.sqrt((angular + 0.5) ** 2 - mu**2)
    else:
        raise InvalidParameter(f"theory must be 'kg' or 'dirac', got {theory!r}")
    return relativistic_binding(mu, D)


def _check_angular(theory: str, angular) -> float:
    if theory == "kg":
        if not float(angular).is_integer() or angular < 0:
            raise InvalidParameter(f"kg needs integer l >= 0, got {angular!r}")
    else:
        two = 2 * angular
        if abs(two - round(two)) > 1e-12 or round(two) % 2 == 0 or angular <= 0:
            raise InvalidParameter(f"dirac needs half-odd j >= 1/2, got {angular!r}")
    return float(angular)


def _fit_binding_ladder(theory, n_r, angular, mu0, rungs):
    """Solve b(mu)/mu^2 = beta0 + beta1*mu^2 + ... on mu0, mu0/2, ..."""
    mus = mu0 / 2.0 ** np.arange(rungs)
    v = np.array([_binding(theory, m, n_r, angular) / m**2 for m in mus])
    V = np.vander(mus**2, N=rungs, increasing=True)
    return np.linalg.solve(V, v)


def expansion_coefficients(
    theory: str, n_r: int, angular, mu0: float = 1e-2, rungs: int = 4
):
    """(c0, c2, c4): coefficients of mu^0, mu^2, mu^4 in E/mc^2.

    Extracted by a Richardson-style ladder fit at mu0, mu0/2, ... rather
    than symbolic expansion.  Against the closed expansions above, c0 = 1,
    c2 = -1/(2 n^2) and c4 = -(n/(x + 1/2) - 3/4)/(2 n^4).
    """
    angular = _check_angular(theory, angular)
    if n_r < 0:
        raise InvalidParameter(f"n_r must be >= 0, got {n_r}")
    if rungs < 3:
        raise InvalidParameter("need at least 3 ladder rungs")
    if not 0.0 < mu0 < angular + 0.5:
        raise InvalidParameter(f"mu0 must lie in (0, {angular + 0.5})")

    beta = _fit_binding_ladder(theory, n_r, angular, mu0, rungs)
    beta_drop = _fit_binding_ladder(theory, n_r, angular, mu0 / 2.0, rungs - 1)
    c2, c4 = -beta[0], -beta[1]
    drift = abs(beta_drop[1] - beta[1])
    if drift > 0.05 * abs(c4) + 1e-9:
        raise FitUnstable(
            f"c4 moved by {drift} between ladders; decrease mu0 or add rungs"
        )

    # c0 from a direct ladder limit of E/mc^2 itself
    mus = mu0 / 2.0 ** np.arange(rungs)
    e = np.array([1.0 - _binding(theory, m, n_r, angular) for m in mus])
    c0 = float(np.linalg.solve(np.vander(mus**2, N=rungs, increasing=True), e)[0])
    return c0, float(c2), float(c4)


def level_spread(theory: str, n: int, mu: float) -> float:
    """Energy spread across the extreme angular members at fixed principal n.

    The extremes are l = 0 and l = n - 1 (kg) or j = 1/2 and j = n - 1/2
    (dirac).  Positive, of order mu^4.
    """
    if n < 2:
        raise InvalidParameter(f"fine-structure spread needs n >= 2, got n = {n}")
    if theory == "kg":
        low = _binding("kg", mu, n - 1, 0)
        high = _binding("kg", mu, 0, n - 1)
    elif theory == "dirac":
        low = _binding("dirac", mu, n - 1, 0.5)
        high = _binding("dirac", mu, 0, n - 0.5)
    else:
        raise InvalidParameter(f"theory must be 'kg' or 'dirac', got {theory!r}")
    return low - high


def spread_ratio(n: int, mu: float) -> float:
    """level_spread('kg')/level_spread('dirac'); tends to 4n/(2n-1) as mu -> 0."""
    return level_spread("kg", n, mu) / level_spread("dirac", n, mu)
