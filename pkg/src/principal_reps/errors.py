"""Exception types shared across the package."""


class PrincipalRepsError(Exception):
    """Base class for all errors raised by this package."""


class CapExceeded(PrincipalRepsError):
    """An enumeration grew past its configured size cap."""


class InvalidSubset(PrincipalRepsError, ValueError):
    """A subset mask violates a containment precondition."""


class IncomparableCharacters(PrincipalRepsError, ValueError):
    """Two characters live at different finite levels (q, a)."""


class AlgebraMismatch(PrincipalRepsError, ValueError):
    """Elements of different algebras were combined."""


class InvalidPath(PrincipalRepsError, ValueError):
    """A vertex sequence is not a path in the quiver."""


class ShapeMismatch(PrincipalRepsError, ValueError):
    """A representation matrix does not match the vertex dimensions."""


class FieldMismatch(PrincipalRepsError, ValueError):
    """Representations over different coefficient fields were combined."""


class DecompositionFailed(PrincipalRepsError):
    """An idempotent could not be split into complementary summands."""


class BudgetExceeded(PrincipalRepsError):
    """A lattice scan ran out of evaluation budget.

    Attributes:
        violations: vectors with negative form value found before stopping.
        cursor: prefix index at which a resumed scan should start.
        evaluated: number of points evaluated so far.
    """

    def __init__(self, message, violations, cursor, evaluated):
        super().__init__(message)
        self.violations = violations
        self.cursor = cursor
        self.evaluated = evaluated
