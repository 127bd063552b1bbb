"""Exception types shared across the library."""


class IsoparamError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(IsoparamError):
    """Operands live in spaces of different dimensions."""


class NondiagnosableOperator(IsoparamError):
    """The eigenstructure matches none of the Lorentzian canonical forms.

    Usually signals an operator that is not self-adjoint for the given
    scalar product, or tolerances that are too tight for the data.
    """


class VectorNotInSubspace(IsoparamError):
    """A vector expected to lie in a subspace does not (within tolerance)."""


class WNotProper(IsoparamError):
    """The defining subspace must be a proper real subspace of C^(n-1)."""


class NotTangent(IsoparamError):
    """A vector expected to be tangent to the submanifold is not."""


class NotNormal(IsoparamError):
    """A vector expected to be a unit normal of the submanifold is not."""


class InvalidCodimension(IsoparamError):
    """Codimension k outside the admissible range for the requested formula."""


class FocalRadius(IsoparamError):
    """Radius at which the tube degenerates to the focal submanifold."""


class InvalidK(IsoparamError):
    """Invalid k parameter for a standard example."""


class DuplicateEigenvalue(IsoparamError):
    """The Cartan sum has a vanishing denominator."""


class PoleAtP(IsoparamError):
    """The rational function phi is evaluated at its pole x = p."""


class ConstraintViolation(IsoparamError):
    """Jordan data violates the algebraic constraints of an isoparametric lift."""


class ParityViolation(IsoparamError):
    """A constant-angle subspace with angle below pi/2 must have even dimension."""
