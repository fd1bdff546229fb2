"""Exception hierarchy shared by all modules."""


class SpectraLabError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameter(SpectraLabError):
    """A model or operation parameter violates its stated constraint."""


class SupercriticalCoupling(InvalidParameter):
    """Coulomb coupling too strong: the relativistic root parameter turns complex."""


class UnsupportedDimension(InvalidParameter):
    """Spatial dimension outside the range a potential kind supports."""


class DomainViolation(SpectraLabError):
    """Coordinate lies outside the open domain of the potential."""


class OutOfBoundRange(SpectraLabError):
    """Energy outside the bound-state range required by the operation."""


class OutOfRange(SpectraLabError):
    """Scalar argument outside its admissible interval."""


class NotApplicable(SpectraLabError):
    """Operation undefined for this model (e.g. no Langer term exists)."""


class NoClassicalRegion(SpectraLabError):
    """The momentum squared is nowhere positive: no classically allowed region."""


class DegenerateWell(SpectraLabError):
    """Turning points coalesce within resolution."""


class ToleranceNotMet(SpectraLabError):
    """Iterative refinement stalled above the requested tolerance.

    Carries ``best`` (best estimate) and ``est_error`` attributes.
    """

    def __init__(self, message, best=None, est_error=None):
        super().__init__(message)
        self.best = best
        self.est_error = est_error


class NoSuchBoundState(SpectraLabError):
    """Requested level index exceeds the number of bound states."""


class BracketingFailed(SpectraLabError):
    """Monotone scan could not bracket the requested root."""


class NoRealK(SpectraLabError):
    """No real completing constant makes the radical a perfect square."""


class DegenerateSigma(SpectraLabError):
    """The leading polynomial of the hypergeometric form is unusable."""


class NoBoundBranch(SpectraLabError):
    """No reduction has a decreasing tau polynomial."""


class AmbiguousBranch(SpectraLabError):
    """Bound-state branch selection could not be made unique."""


class NotSommerfeldType(SpectraLabError):
    """Model does not reduce to the Sommerfeld radial form."""


class Overflow(SpectraLabError):
    """Shooting solution exceeded the rescaling budget."""


class GridTooCoarse(SpectraLabError):
    """Node counting behaved non-monotonically on this grid."""


class InsufficientGrids(SpectraLabError):
    """Convergence measurement needs at least three distinct, halving grids."""


class FitUnstable(SpectraLabError):
    """Richardson ladder residuals did not decrease."""
