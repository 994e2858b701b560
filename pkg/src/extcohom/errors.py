"""Exception taxonomy shared across the package.

Two families matter to the command line driver: DomainError (a well-formed
request that the mathematics rejects, exit code 1) and InputError (text that
does not parse or a model that fails validation, exit code 2).
"""


class ExtCohomError(Exception):
    """Base class for every error raised by this package."""


class DomainError(ExtCohomError):
    """A mathematically invalid request on a valid model."""


class NotACocycle(DomainError):
    """Raised when a class is requested for an element with d(a) != 0.

    Carries the offending element and its differential so callers can show
    the user exactly what failed to vanish.
    """

    def __init__(self, message, element=None, differential=None):
        super().__init__(message)
        self.element = element
        self.differential = differential


class NotHomogeneous(DomainError):
    """An operation that needs a single-degree element got a mixed one."""


class NotExact(DomainError):
    """Raised when a primitive is requested for a non-exact element."""


class CupObstruction(DomainError):
    """A construction that needs a vanishing cup product hit a nonzero one."""


class DegenerateBasis(DomainError):
    """Two degree-1 classes that were required to be independent are not."""


class NonUniqueLift(DomainError):
    """Raised when a degree-1 class has more than one cocycle lift."""


class InputError(ExtCohomError):
    """Base class for parse and validation failures (CLI exit code 2)."""


class ParseError(InputError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class ValidationError(InputError):
    """A structurally broken model (bad differential, bad generators)."""

    def __init__(self, message, generator=None):
        super().__init__(message)
        self.generator = generator


class NonHomogeneousDifferential(ValidationError):
    pass


class DifferentialSquareViolation(ValidationError):
    pass
