"""Exception types shared across the package.

Two families: ``ValidationError`` covers bad user input and violated
preconditions, ``InvariantViolation`` covers internal consistency failures
that indicate a bug rather than a bad argument.  The CLI maps the first
family to exit code 1 and the second to exit code 2.
"""


class DischarError(Exception):
    """Base class for every error raised by this package."""

    @property
    def code(self) -> str:
        return type(self).__name__


class ValidationError(DischarError):
    """Rejected input or an unmet operation precondition."""


class NotFiniteType(ValidationError):
    """Cartan matrix is malformed or reflection closure does not terminate."""


class DimensionMismatch(ValidationError):
    """Vectors or matrices of incompatible rank were combined."""


class GroupTooLarge(ValidationError):
    """Weyl group closure exceeded the configured order bound."""


class IncompleteAssignment(ValidationError):
    """A hand-entered root grading does not cover every root."""


class NotAntidominant(ValidationError):
    """Weight pairs to a positive integer against some positive coroot."""


class NotIntegral(ValidationError):
    """Weight has a non-integer fundamental-weight coordinate."""


class NotStronglyAntidominant(ValidationError):
    """Weight fails to pair strictly negatively against every positive coroot."""


class NotCompatible(ValidationError):
    """Parameter does not shift into the weight lattice (lambda + rho not integral)."""


class ParameterIncompatible(ValidationError):
    """Multiplicity parameters lie outside the required lattices or chambers."""


class TruncationTooSmall(ValidationError):
    """Filtration truncation bound proven insufficient for the requested weight."""


class InvariantViolation(DischarError):
    """Internal consistency check failed; signals a bug, not bad input."""


class CollapseAmbiguous(InvariantViolation):
    """Two resolution positions survive for one weight component."""
