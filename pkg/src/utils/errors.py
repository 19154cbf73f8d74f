"""
Exception hierarchy shared by every subpackage
"""


class NctError(Exception):
    """Base class for all library errors"""


class UsageError(NctError):
    """Malformed text input or command-line usage"""


class DomainError(NctError):
    """A mathematical precondition does not hold"""


class NotPrimeError(DomainError):
    """An argument that must be prime is not"""


class RationalInputError(DomainError):
    """A quadratic irrationality was required but a rational value was given"""


class MixedFieldError(DomainError):
    """Arithmetic between elements of different quadratic fields"""


class ShapeError(DomainError):
    """Matrix dimensions or block shape do not fit the operation"""


class SingularMatrixError(DomainError):
    """A matrix that must be invertible is singular"""


class DegenerateInputError(DomainError):
    """Input lies on a degenerate locus the operation does not cover"""


class PrecisionExhaustedError(DomainError):
    """Interval arithmetic could not certify a result at the working precision"""


class BadReductionError(DomainError):
    """The curve has bad reduction at the requested prime"""


class ConvergenceError(DomainError):
    """An Euler product was requested outside its region of convergence"""


class ExcludedPrimesDegenerate(DomainError):
    """tr^2(A) - (n+1)^2 vanishes, so every prime is excluded"""
