"""Linear codes over exact fields: saturation closure, duals, scalar extension.

Index sets over the columns {1, ..., n} are bit masks: bit i (0-based)
stands for column position i+1.  All text and JSON interfaces use 1-based
index lists; the helpers below convert.
"""

from __future__ import annotations

from .errors import (
    DimensionZeroDual,
    IncompatibleCharacteristic,
    NotSaturated,
    RankDeficientGenerator,
    ZeroColumn,
)
from .fields import ExtensionField, Field, default_modulus, find_embedding, make_field
from .matrices import EchelonBasis, Matrix


def mask_from_indices(indices, n: int) -> int:
    """1-based index iterable -> bit mask."""
    mask = 0
    for i in indices:
        if not 1 <= i <= n:
            raise ValueError(f"index {i} out of range 1..{n}")
        mask |= 1 << (i - 1)
    return mask


def indices_from_mask(mask: int):
    """Bit mask -> ascending tuple of 1-based indices."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


class Code:
    """A linear [n, k] code presented by a full-row-rank generator matrix."""

    __slots__ = ("field", "n", "k", "generator", "allow_zero_columns",
                 "_columns", "_full_mask")

    def __init__(self, generator: Matrix, allow_zero_columns: bool = False):
        if generator.rows < 1 or generator.cols < 1:
            raise RankDeficientGenerator("generator must have positive dimensions")
        field = generator.field
        if generator.rank() != generator.rows:
            raise RankDeficientGenerator(
                f"generator rows are dependent (rank < {generator.rows})")
        columns = generator.columns()
        zero = field.zero
        if not allow_zero_columns:
            for j, col in enumerate(columns):
                if all(e == zero for e in col):
                    raise ZeroColumn(f"column {j + 1} of the generator is zero")
        self.field = field
        self.n = generator.cols
        self.k = generator.rows
        self.generator = generator
        self.allow_zero_columns = allow_zero_columns
        self._columns = columns
        self._full_mask = (1 << self.n) - 1

    @classmethod
    def from_rows(cls, field, rows, allow_zero_columns: bool = False) -> "Code":
        return cls(Matrix.from_rows(make_field(field), rows),
                   allow_zero_columns=allow_zero_columns)

    @property
    def full_mask(self) -> int:
        return self._full_mask

    def describe(self) -> str:
        return f"[{self.n},{self.k}] code over {self.field.spec_string()}"

    def __repr__(self):
        return f"Code({self.describe()})"

    # -- saturation ----------------------------------------------------------

    def column_basis(self, mask: int) -> EchelonBasis:
        """Echelon basis of the span of the columns indexed by mask."""
        basis = EchelonBasis(self.field, self.k)
        cols = self._columns
        i = 0
        m = mask
        while m:
            if m & 1:
                basis.insert(cols[i])
            m >>= 1
            i += 1
        return basis

    def closure(self, mask: int) -> int:
        """Smallest saturated superset: every column inside the span joins."""
        basis = self.column_basis(mask)
        out = mask
        for j in range(self.n):
            if not (out >> j) & 1 and basis.contains(self._columns[j]):
                out |= 1 << j
        return out

    def is_saturated(self, mask: int) -> bool:
        return self.closure(mask) == mask

    def column_rank(self, mask: int) -> int:
        return self.column_basis(mask).rank

    def dim_of(self, mask: int) -> int:
        """Dimension of the subcode vanishing on the set (saturated sets only)."""
        if not self.is_saturated(mask):
            raise NotSaturated(
                f"{list(indices_from_mask(mask))} is not saturated")
        return self.k - self.column_rank(mask)

    # -- derived codes -------------------------------------------------------

    def dual(self) -> "Code":
        """Dual code under the standard bilinear form; generator is a kernel basis.

        The dual may have zero columns even when this code does not, so it
        is always built with allow_zero_columns=True.
        """
        if self.k == self.n:
            raise DimensionZeroDual(
                "the full space has a zero-dimensional dual")
        kernel = self.generator.kernel_basis()
        return Code(kernel, allow_zero_columns=True)

    def extend_scalars(self, degree: int | None = None, *, field=None,
                       modulus=None) -> "Code":
        """Re-read the generator in an extension field.

        Either give the extension degree over the current field (a default
        modulus is chosen deterministically), or an explicit target field.
        The prime field must match (IncompatibleCharacteristic otherwise).
        """
        base = self.field
        if not base.is_finite():
            raise IncompatibleCharacteristic(
                "scalar extension is for finite ground fields")
        if field is not None:
            target = make_field(field)
        else:
            if degree is None or degree < 1:
                raise ValueError("need an extension degree >= 1 or a target field")
            if degree == 1:
                return self
            total = base.degree * degree
            target = ExtensionField(
                base.char, modulus or default_modulus(base.char, total))
        if not target.is_finite() or target.char != base.char:
            raise IncompatibleCharacteristic(
                f"cannot extend {base.spec_string()} into "
                f"{target.spec_string() if isinstance(target, Field) else target}")
        embed = find_embedding(base, target)
        rows = [[embed(e) for e in row] for row in self.generator.entries]
        return Code(Matrix(target, rows, validate=False),
                    allow_zero_columns=self.allow_zero_columns)
