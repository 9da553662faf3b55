"""Exception types raised across the package."""


class AlgebraError(Exception):
    """Base class for every error raised by orthonf."""


# field construction and arithmetic
class FieldError(AlgebraError, ValueError):
    pass


class NonPrimeCharacteristic(FieldError):
    pass


class ReducibleModulus(FieldError):
    pass


class NoDefaultModulus(FieldError):
    pass


class DivisionByZero(AlgebraError, ZeroDivisionError):
    pass


class FieldMismatch(AlgebraError, ValueError):
    pass


# linear algebra
class NoSolution(AlgebraError, ArithmeticError):
    pass


class Singular(AlgebraError, ArithmeticError):
    pass


class DimensionMismatch(AlgebraError, ValueError):
    pass


# polynomials
class ParseError(AlgebraError, ValueError):
    def __init__(self, position, message):
        self.position = position
        self.message = message
        super().__init__(f"at position {position}: {message}")


class VariableOutOfRange(ParseError):
    pass


class CoefficientOutOfRange(ParseError):
    pass


class LengthMismatch(AlgebraError, ValueError):
    pass


class ContextMismatch(AlgebraError, ValueError):
    pass


class ZeroPolynomial(AlgebraError, ValueError):
    pass


class ZeroDivisor(ZeroPolynomial):
    """A divisor list contained the zero polynomial."""


class NotMonomialOrder(AlgebraError, ValueError):
    pass


# point sets and solver
class InvalidPoints(AlgebraError, ValueError):
    pass


class DuplicatePoints(InvalidPoints):
    pass


class DimensionGuard(AlgebraError, ValueError):
    def __init__(self, dim, cap):
        self.dim = dim
        self.cap = cap
        super().__init__(f"basis dimension {dim} exceeds the configured cap {cap}")


class NotRref(AlgebraError, ValueError):
    pass


class FrameMismatch(AlgebraError, ValueError):
    pass


class InvariantViolation(AlgebraError, AssertionError):
    """An internal consistency check failed; always indicates a bug."""
