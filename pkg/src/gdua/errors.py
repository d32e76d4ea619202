"""Exception hierarchy.

Mathematical precondition failures derive from :class:`PreconditionError`,
input/syntax problems from :class:`InputError`; the CLI maps these onto its
exit codes.
"""

from __future__ import annotations


class GduaError(Exception):
    """Base class for every error raised by this package."""


class PreconditionError(GduaError):
    """A mathematical hypothesis required by an operation does not hold."""


class InputError(GduaError, ValueError):
    """Malformed input: bad syntax, bad JSON, incompatible fields."""


class IncompatibleFieldError(InputError):
    """Arithmetic between elements of different quadratic fields."""


class ParseError(InputError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class UndecidedError(GduaError):
    """A decision procedure exhausted its search bound without a verdict."""


class ZeroInputError(PreconditionError):
    pass


class RootOfUnityError(PreconditionError):
    pass


class ZeroPolynomialError(PreconditionError):
    pass


class NotNoetherianError(PreconditionError):
    pass


class NotConformalError(PreconditionError):
    pass


class NotNormalError(PreconditionError):
    pass


class ConstraintViolated(PreconditionError):
    pass


class ZeroParameterError(ConstraintViolated):
    pass


class WrongInvariantShape(PreconditionError):
    pass


class PresentationMismatch(PreconditionError):
    pass


class BetaZeroError(PreconditionError):
    pass


class BothRootsOfUnityError(PreconditionError):
    pass
