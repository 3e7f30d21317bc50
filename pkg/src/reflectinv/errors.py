"""Exception hierarchy.

Two mixins classify errors for the CLI exit-code contract: ``InputError``
(bad user input, exit code 2) and ``DiagnosticError`` (a mathematically
meaningful failure detected during computation, exit code 3).
"""


class ReflectinvError(Exception):
    """Base class for all errors raised by this package."""


class InputError(ReflectinvError):
    """Problems with user-supplied data (files, names, malformed text)."""


class DiagnosticError(ReflectinvError):
    """A computation ran but detected a mathematical inconsistency."""


# -- exact arithmetic / linear algebra ---------------------------------------

class ParseError(InputError, ValueError):
    """Malformed scalar text or zero denominator."""


class DivisionByZero(ReflectinvError, ZeroDivisionError):
    """Inverse of zero requested."""


class DimensionMismatch(InputError, ValueError):
    """Operands have incompatible shapes."""


class NotSquare(InputError, ValueError):
    """Operation requires a square matrix."""


class Singular(ReflectinvError):
    """Matrix has determinant zero."""


# -- group closure ------------------------------------------------------------

class SingularGenerator(InputError):
    """A group generator is not invertible."""


class CapExceeded(InputError):
    """Closure grew past the element cap (infinite or too-large group)."""


# -- representations ----------------------------------------------------------

class NotAHomomorphism(DiagnosticError):
    """Generator images are inconsistent with the group's relations."""


class GeneratorCountMismatch(InputError):
    """Representations are defined over different generator lists."""


class UnknownRepresentation(InputError, KeyError):
    """Representation name not found in the source."""


# -- polynomials --------------------------------------------------------------

class ZeroVector(InputError, ValueError):
    """Cannot normalize the zero vector."""


# -- series -------------------------------------------------------------------

class NonUnitConstantTerm(InputError, ValueError):
    """Series inversion needs a nonzero constant term."""


class NonIntegralCoefficient(DiagnosticError):
    """A dimension series coefficient is not a non-negative integer."""


class NonTerminatingNumerator(DiagnosticError):
    """Numerator extraction left nonzero terms near the truncation bound."""


# -- equivariant module structure ----------------------------------------------

class MethodDisagreement(DiagnosticError):
    """The averaging and linear-system bases span different spaces."""


class NoSuchDegrees(InputError):
    """Auto-detection of primary invariant degrees failed."""


class NotOneDimensional(InputError):
    """Primary invariant choice is ambiguous at the requested degree."""


class FreenessViolation(DiagnosticError):
    """Products of invariants and generators are linearly dependent.

    Carries the offending degree in ``degree``.
    """

    def __init__(self, message: str, degree: int):
        super().__init__(message)
        self.degree = degree


# -- catalog ------------------------------------------------------------------

class UnknownCatalogName(InputError, KeyError):
    """No built-in entry with that name."""
