"""Exact matrices over a Field: RREF, rank, kernel, and echelon bases."""

from __future__ import annotations

from .errors import MixedFields
from .fields import Field


class Matrix:
    """Immutable matrix with entries stored as canonical raw field elements."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: Field, entries, validate: bool = True,
                 cols: int | None = None):
        rows = tuple(tuple(r) for r in entries)
        if rows:
            cols = len(rows[0])
            if any(len(r) != cols for r in rows):
                raise ValueError("ragged rows")
        else:
            cols = cols or 0
        if validate:
            for r in rows:
                for e in r:
                    field.check(e)
        self.field = field
        self.rows = len(rows)
        self.cols = cols
        self.entries = rows

    @classmethod
    def from_rows(cls, field: Field, rows):
        """Build a matrix, coercing entries (ints, coefficient lists, fractions)."""
        coerce = field.coerce
        return cls(field, [[coerce(e) for e in r] for r in rows], validate=False)

    @classmethod
    def identity(cls, field: Field, n: int):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)],
                   validate=False)

    @classmethod
    def zero(cls, field: Field, rows: int, cols: int):
        z = field.zero
        return cls(field, [[z] * cols for _ in range(rows)], validate=False)

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(r[j] for r in self.entries)

    def columns(self):
        return tuple(self.column(j) for j in range(self.cols))

    def transpose(self):
        return Matrix(self.field, zip(*self.entries) if self.rows else [],
                      validate=False)

    def mul(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise MixedFields("matrix product across different fields")
        if self.cols != other.rows:
            raise ValueError("inner dimensions disagree")
        f = self.field
        add, mul, zero = f.add, f.mul, f.zero
        cols = other.transpose().entries
        out = [[_dot(add, mul, zero, r, c) for c in cols] for r in self.entries]
        return Matrix(f, out, validate=False)

    def rref(self):
        """Reduced row echelon form: (R, rank, pivot column indices)."""
        f = self.field
        zero, one = f.zero, f.one
        work = [list(r) for r in self.entries]
        nrows = len(work)
        pivots = []
        r = 0
        for c in range(self.cols):
            pr = None
            for i in range(r, nrows):
                if work[i][c] != zero:
                    pr = i
                    break
            if pr is None:
                continue
            work[r], work[pr] = work[pr], work[r]
            lead = work[r][c]
            if lead != one:
                work[r] = f.vec_scale(work[r], f.inv(lead))
            for i in range(nrows):
                factor = work[i][c]
                if i != r and factor != zero:
                    work[i] = f.vec_submul(work[i], work[r], factor)
            pivots.append(c)
            r += 1
            if r == nrows:
                break
        return Matrix(f, work, validate=False), r, tuple(pivots)

    def rank(self) -> int:
        return self.rref()[1]

    def kernel_basis(self) -> "Matrix":
        """Rows form a basis of the right kernel {v : M v^T = 0}.

        The basis is read off the RREF: one row per free column.  A
        full-column-rank matrix yields a 0 x cols result.
        """
        f = self.field
        R, rank, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in set(pivots)]
        rows = []
        for fc in free:
            v = [f.zero] * self.cols
            v[fc] = f.one
            for i, pc in enumerate(pivots):
                v[pc] = f.neg(R.entries[i][fc])
            rows.append(v)
        return Matrix(f, rows, validate=False, cols=self.cols)

    def row_space_equals(self, other: "Matrix") -> bool:
        if self.field != other.field or self.cols != other.cols:
            return False
        return self.rref()[0].nonzero_rows() == other.rref()[0].nonzero_rows()

    def nonzero_rows(self):
        zero = self.field.zero
        return tuple(r for r in self.entries if any(e != zero for e in r))

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.entries == other.entries and self.cols == other.cols)

    def __hash__(self):
        return hash((self.field, self.entries, self.cols))

    def __str__(self):
        fmt = self.field.fmt
        return "\n".join(" ".join(fmt(e) for e in r) for r in self.entries)

    def __repr__(self):
        return f"Matrix({self.field.spec_string()}, {self.rows}x{self.cols})"


def _dot(add, mul, zero, u, v):
    acc = zero
    for a, b in zip(u, v):
        acc = add(acc, mul(a, b))
    return acc


class EchelonBasis:
    """Growing reduced echelon basis of a subspace of F^width.

    The stored rows are the canonical RREF basis of the span, so the state
    is independent of insertion order; this keeps flat enumeration
    deterministic.
    """

    __slots__ = ("field", "width", "pivots", "vectors")

    def __init__(self, field: Field, width: int):
        self.field = field
        self.width = width
        self.pivots = []   # ascending pivot positions
        self.vectors = []  # parallel list, pivot entry normalized to 1

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def copy(self) -> "EchelonBasis":
        dup = EchelonBasis.__new__(EchelonBasis)
        dup.field = self.field
        dup.width = self.width
        dup.pivots = list(self.pivots)
        dup.vectors = list(self.vectors)
        return dup

    def residual(self, v):
        """Reduce v against the basis; returns the (possibly zero) remainder."""
        f = self.field
        zero = f.zero
        v = list(v)
        for pos, row in zip(self.pivots, self.vectors):
            factor = v[pos]
            if factor != zero:
                v = f.vec_submul(v, row, factor)
        return v

    def contains(self, v) -> bool:
        zero = self.field.zero
        return all(e == zero for e in self.residual(v))

    def insert(self, v) -> bool:
        """Add v to the span.  Returns True if the rank grew."""
        f = self.field
        zero = f.zero
        res = self.residual(v)
        pos = next((i for i, e in enumerate(res) if e != zero), None)
        if pos is None:
            return False
        lead = res[pos]
        if lead != f.one:
            res = f.vec_scale(res, f.inv(lead))
        # back-eliminate to keep the basis fully reduced
        for i, row in enumerate(self.vectors):
            factor = row[pos]
            if factor != zero:
                self.vectors[i] = f.vec_submul(row, res, factor)
        at = next((i for i, p in enumerate(self.pivots) if p > pos),
                  len(self.pivots))
        self.pivots.insert(at, pos)
        self.vectors.insert(at, res)
        return True
