"""Exception types shared across the package."""


class OpticsError(Exception):
    """Base class for all errors raised by photon_invariants."""


class DimensionError(OpticsError, ValueError):
    """Mode counts or photon numbers of the operands do not agree."""


class CapacityError(OpticsError, MemoryError):
    """A dense representation would exceed the configured size guard."""


class SymmetryError(OpticsError, ValueError):
    """A particle-basis vector is not permutation symmetric."""

    def __init__(self, message, pair=None, violation=None):
        super().__init__(message)
        self.pair = pair
        self.violation = violation


class ArgumentError(OpticsError, ValueError):
    """Invalid argument (unknown name, bad parameter, wrong count)."""


class NumericError(OpticsError, ArithmeticError):
    """A numerical routine failed to converge or missed its residual bound."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class ParseError(OpticsError, ValueError):
    """Syntax or semantic error in a state expression."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
