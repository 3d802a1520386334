"""Exception types shared across the fitting pipeline."""


class FitError(Exception):
    """Base class for library-specific failures."""


class IllPosedProblemError(FitError):
    """Every explanatory interval shares a common point, so all x values may
    coincide and the slope denominator can vanish inside the search box.

    ``alpha`` names the cut level at which the problem became ill-posed when
    the error is raised by the curve builder; it is None for direct calls.
    """

    def __init__(self, message, alpha=None):
        super().__init__(message)
        self.alpha = alpha


class InfeasibleSpreadError(FitError):
    """The spread-matching constraints admit no nonnegative error term.

    ``observation`` carries the zero-based index of the offending
    observation when raised from the full pipeline.
    """

    def __init__(self, message, observation=None):
        super().__init__(message)
        self.observation = observation


class DegenerateMembershipError(FitError):
    """A membership function with zero area over a non-degenerate support
    was handed to a centroid computation."""


class InvalidModelError(FitError):
    """A fitted model and its companion data disagree, or a rule base is
    structurally unusable."""


class SolverQualityWarning(UserWarning):
    """Cut nesting had to be repaired by more than the solver tolerance."""
