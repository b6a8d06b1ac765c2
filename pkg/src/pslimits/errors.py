"""Exception taxonomy shared by every module of the pipeline."""


class PSLimitsError(Exception):
    """Base class for all library-specific errors."""


class ExtRealError(PSLimitsError):
    """Undefined extended-real operation ((+inf)+(-inf), 0*inf outside the
    sanctioned tail-target convention)."""


class OracleMissing(PSLimitsError):
    """Evaluation requested in a region covered by neither knots nor oracle."""


class NoConvergence(PSLimitsError):
    """A finite-difference or limit schedule failed to stabilize."""


class PreconditionViolated(PSLimitsError):
    """An operation was called outside its stated preconditions."""


class ImproperInput(PSLimitsError):
    """Operation does not accept improper (-inf valued) convex functions."""


class ExtensionUnavailable(PSLimitsError):
    """Conjugate value at -inf requested but the continuity extension does
    not apply (the right-derivative limit at 0 is finite)."""


class NotStrictlyConvex(PSLimitsError):
    """Seed function fails the sampled strict-convexity check."""


class BadChordSeq(PSLimitsError):
    """Chord abscissae are not strictly decreasing inside the seed interval."""


class EmptyDomain(PSLimitsError):
    """Dense enumeration requested over an empty or degenerate domain."""


class AllWeightsInfinite(PSLimitsError):
    """Every enumerated atom has infinite rate value; the measure is empty."""


class Unstable(PSLimitsError):
    """Shrinking-interval estimates did not stabilize monotonically."""


class ZOutOfRange(PSLimitsError):
    """Requested slope z lies outside the attainable derivative range."""


class BadParams(PSLimitsError):
    """Unknown family kind or invalid family parameters."""


class ConfigError(PSLimitsError):
    """Malformed run configuration or serialized object."""


class HypothesisViolated(PSLimitsError):
    """The scenario hits one of the excluded cases of the limit theorem.

    ``excluded_case`` carries the taxonomy label ("(i)", "(ii)" or "(iii)"),
    ``point_case`` the structural tag that triggered it.
    """

    def __init__(self, message: str, excluded_case: str | None = None,
                 point_case: str | None = None):
        super().__init__(message)
        self.excluded_case = excluded_case
        self.point_case = point_case


class NonMonotoneDivergence(PSLimitsError):
    """Empirical values move away from the analytic target across the last
    grid entries; carries the partial report for inspection."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report
