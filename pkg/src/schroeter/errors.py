"""Exception hierarchy.  The three branches map to CLI exit codes."""


class SchroeterError(Exception):
    """Base class for all library errors."""

    exit_code = 1


class ValidationError(SchroeterError):
    """Bad or inconsistent input data (CLI exit code 1)."""

    exit_code = 1


class DegeneracyError(SchroeterError):
    """Configuration too degenerate for the requested operation (exit code 2)."""

    exit_code = 2


class InvariantViolation(SchroeterError):
    """A structural guarantee failed: corrupt data or an internal bug (exit code 3)."""

    exit_code = 3


# --- input / validation -------------------------------------------------

class IdenticalPoints(ValidationError):
    pass


class IdenticalLines(ValidationError):
    pass


class NotCollinear(ValidationError):
    pass


class NotConcurrent(ValidationError):
    pass


class SingularMatrix(ValidationError):
    pass


class NotInPencil(ValidationError):
    pass


class ForbiddenCarrier(ValidationError):
    pass


class DuplicatePoints(ValidationError):
    pass


class FourCollinear(ValidationError):
    pass


class CompleteQuadrilateral(ValidationError):
    pass


class NotOnCurve(ValidationError):
    pass


class NotAffine(ValidationError):
    pass


class BasePointDegenerate(ValidationError):
    pass


class OffChartCurve(ValidationError):
    pass


class ZeroDenominator(ValidationError):
    pass


class SeedFormatError(ValidationError):
    pass


# --- degeneracy / ambiguity ----------------------------------------------

class TooDegenerate(DegeneracyError):
    pass


class DegenerateFrame(DegeneracyError):
    pass


class DegenerateChoice(DegeneracyError):
    pass


class AmbiguousFit(DegeneracyError):
    pass


class OverconstrainedFit(DegeneracyError):
    pass


class SingularPoint(DegeneracyError):
    pass


class LineComponent(DegeneracyError):
    pass


class SharedPoint(DegeneracyError):
    pass


class DegenerateLines(DegeneracyError):
    pass


class DegenerateNine(DegeneracyError):
    pass


class LinesNotDistinct(DegeneracyError):
    pass


class DegenerateDirection(DegeneracyError):
    pass


class HypothesisFailed(DegeneracyError):
    pass


class DegenerateHexagon(DegeneracyError):
    pass


# --- invariants ------------------------------------------------------------

class BarNotOnCurve(InvariantViolation):
    pass
