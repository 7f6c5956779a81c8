"""Exception hierarchy shared by every module of the package."""


class WittorsionError(Exception):
    """Base class for all errors raised by this package."""


# gf
class NotPrime(WittorsionError, ValueError):
    pass


class DegreeOutOfRange(WittorsionError, ValueError):
    pass


class ReducibleModulus(WittorsionError, ValueError):
    pass


class FieldMismatch(WittorsionError, TypeError):
    pass


class DivisionByZero(WittorsionError, ZeroDivisionError):
    pass


class FieldTooLarge(WittorsionError, ValueError):
    pass


# witt2
class NonUnit(WittorsionError, ZeroDivisionError):
    pass


class ExtensionFieldNotSupported(WittorsionError, ValueError):
    pass


# poly
class DuplicateAbscissa(WittorsionError, ValueError):
    pass


class ZeroPolynomial(WittorsionError, ValueError):
    pass


class DivisionByZeroPolynomial(WittorsionError, ZeroDivisionError):
    pass


# ec
class PointNotOnCurve(WittorsionError, ValueError):
    pass


class SingularCurve(WittorsionError, ValueError):
    pass


# lift
class OrderDivisibleByP(WittorsionError, ValueError):
    pass


class InsufficientSamples(WittorsionError):
    pass


class ValidationFailed(WittorsionError):
    """Raised when a reconstructed polynomial disagrees with fresh data.

    ``counterexample`` holds the first offending input when one exists.
    """

    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


class DegenerateTransport(WittorsionError, ValueError):
    pass


# packets
class NonUnitX(WittorsionError, ValueError):
    pass


class IdentityFailed(WittorsionError):
    pass
