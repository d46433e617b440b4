"""Exception hierarchy shared by every module."""


class MacdonaldError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class DivisionByZero(MacdonaldError, ZeroDivisionError):
    pass


class DimensionMismatch(MacdonaldError, ValueError):
    pass


class SpecializationPole(MacdonaldError, ZeroDivisionError):
    pass


class InexactDivision(MacdonaldError, ArithmeticError):
    pass


class InternalNonPolynomial(MacdonaldError, ArithmeticError):
    """An operator that must return a polynomial did not. Always a bug."""


class MalformedPartition(MacdonaldError, ValueError):
    pass


class BoxOutOfShape(MacdonaldError, ValueError):
    pass


class NotStrictlyDecreasing(MacdonaldError, ValueError):
    pass


class UnknownSystem(MacdonaldError, KeyError):
    pass


class ZeroPoint(MacdonaldError, ValueError):
    pass


class GenericityViolation(MacdonaldError, ValueError):
    pass


class SingularHankel(MacdonaldError, ArithmeticError):
    pass


class BadNumerator(MacdonaldError, ValueError):
    pass


class InternalMismatch(MacdonaldError, AssertionError):
    """Two independent computations of the same quantity disagree."""


class RHViolation(MacdonaldError, AssertionError):
    pass


class SizeGuardExceeded(MacdonaldError, ValueError):
    pass


class MismatchReport(MacdonaldError, AssertionError):
    pass
