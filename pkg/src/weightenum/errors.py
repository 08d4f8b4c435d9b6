"""Exception hierarchy for the weightenum package."""


class WeightEnumError(Exception):
    """Base class for all errors raised by this package."""


# --- field construction and arithmetic ---

class NonPrimeCharacteristic(WeightEnumError):
    """The requested characteristic is not a prime number."""


class ReducibleModulus(WeightEnumError):
    """The extension modulus factors over the prime field."""


class DegreeMismatch(WeightEnumError):
    """Field order, extension degree and modulus degree disagree."""


class DivisionByZero(WeightEnumError, ZeroDivisionError):
    """Division or inversion of the zero element."""


class MixedFields(WeightEnumError):
    """Operands belong to different fields (or are not valid elements)."""


class IncompatibleCharacteristic(WeightEnumError):
    """Scalar extension requested into a field of different characteristic."""


# --- codes and lattices ---

class RankDeficientGenerator(WeightEnumError):
    """Generator matrix rows are linearly dependent."""


class ZeroColumn(WeightEnumError):
    """Generator matrix has a zero column and zero columns are disallowed."""


class DimensionZeroDual(WeightEnumError):
    """The dual of a full-space code has dimension zero (empty generator)."""


class NotSaturated(WeightEnumError):
    """The index set is not saturated (not closed)."""


class NotAFlat(WeightEnumError):
    """The index set is not a member of the flat lattice."""


class NotComparable(WeightEnumError):
    """Moebius function requested for an incomparable pair of flats."""


class RankDropped(WeightEnumError):
    """Internal consistency failure: reduction mod p lost rank."""


class BudgetExceeded(WeightEnumError):
    """An enumeration exceeded its configured work budget."""

    def __init__(self, limit, message=None):
        self.limit = limit
        super().__init__(message or f"enumeration budget of {limit} exceeded")


# --- polynomials and parsing ---

class NotDivisible(WeightEnumError):
    """Exact polynomial division failed (nonzero remainder)."""


class OutOfRange(WeightEnumError):
    """A combinatorial parameter is outside its valid range."""


class ParseError(WeightEnumError):
    """Malformed textual input.  Carries a position for diagnostics."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)
