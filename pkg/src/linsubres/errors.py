"""Exception hierarchy shared by all linsubres modules."""


class LinsubresError(Exception):
    """Base class for every error raised by this package."""


class FieldMismatch(LinsubresError, ValueError):
    """Two values from different fields were combined."""


class DivisionByZero(LinsubresError, ZeroDivisionError):
    """Exact division by the zero element."""


class InvalidModulus(LinsubresError, ValueError):
    """Prime-field modulus is not a prime below 2**64."""


class CharacteristicError(LinsubresError, ValueError):
    """The field characteristic violates a stated precondition.

    The message names the hypothesis that failed, e.g. "char = 0 or
    char >= m + n".  Maps to CLI exit code 3.
    """


class UnsupportedCase(CharacteristicError):
    """Positive characteristic below max(m, n): no supported case applies."""


class CoincidentRoots(LinsubresError, ValueError):
    """alpha = beta where the two roots must be distinct."""


class BasisMismatch(LinsubresError, ValueError):
    """A result was supplied in the wrong coefficient basis."""


class PreconditionError(LinsubresError, ValueError):
    """Structural precondition violated (degrees, ranges, shapes)."""
