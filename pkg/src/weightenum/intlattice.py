"""Integer matrices with exact normal forms: Hermite, Smith, kernels, saturation.

Everything uses Python's arbitrary-precision ints; minors of the inputs we
care about (small code generator matrices) stay modest, but nothing here
assumes machine-word bounds.
"""

from __future__ import annotations


class IntMatrix:
    """Immutable integer matrix."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols: int | None = None):
        rows = tuple(tuple(int(e) for e in r) for r in entries)
        if rows:
            cols = len(rows[0])
            if any(len(r) != cols for r in rows):
                raise ValueError("ragged rows")
        else:
            cols = cols or 0
        self.rows = len(rows)
        self.cols = cols
        self.entries = rows

    @classmethod
    def identity(cls, n: int):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def transpose(self):
        return IntMatrix(zip(*self.entries) if self.rows else [], cols=0)

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("inner dimensions disagree")
        cols = list(zip(*other.entries))
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols]
                          for r in self.entries])

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and self.entries == other.entries
                and self.cols == other.cols)

    def __hash__(self):
        return hash((self.entries, self.cols))

    def __str__(self):
        return "\n".join(" ".join(str(e) for e in r) for r in self.entries)

    def __repr__(self):
        return f"IntMatrix({self.rows}x{self.cols})"


def hnf(M: IntMatrix):
    """Row-style Hermite normal form.

    Returns (H, U) with H = U * M and U unimodular.  Convention: pivots
    positive, entries above each pivot reduced into [0, pivot), zero rows
    at the bottom.
    """
    m = M.rows
    A = [list(r) for r in M.entries]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    r = 0
    for c in range(M.cols):
        while True:
            nz = [i for i in range(r, m) if A[i][c]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(A[i][c]))
            if i0 != r:
                A[r], A[i0] = A[i0], A[r]
                U[r], U[i0] = U[i0], U[r]
            clean = True
            for i in range(r + 1, m):
                if A[i][c]:
                    q = A[i][c] // A[r][c]
                    if q:
                        A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                        U[i] = [a - q * b for a, b in zip(U[i], U[r])]
                    if A[i][c]:
                        clean = False
            if clean:
                break
        if r < m and A[r][c]:
            if A[r][c] < 0:
                A[r] = [-a for a in A[r]]
                U[r] = [-a for a in U[r]]
            for i in range(r):
                q = A[i][c] // A[r][c]
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
            r += 1
            if r == m:
                break
    return IntMatrix(A), IntMatrix(U)


def determinant(M: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        return 1
    A = [list(r) for r in M.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def kernel_basis_int(M: IntMatrix) -> IntMatrix:
    """Basis of the integer right kernel {x in Z^cols : M x = 0}.

    Computed from the HNF of the transpose: rows of U facing zero rows of
    H satisfy u * M^T = 0.  The result is automatically saturated (its
    span is Q-span intersected with Z^cols).
    """
    if M.rows == 0:
        return IntMatrix.identity(M.cols)
    T = M.transpose()
    H, U = hnf(T)
    rows = [U.entries[i] for i in range(T.rows)
            if not any(H.entries[i])]
    return IntMatrix(rows, cols=M.cols)


def row_saturation(M: IntMatrix) -> IntMatrix:
    """Z-basis of (Q-rowspace of M) intersected with Z^cols.

    Double integer kernel: the saturation is the lattice orthogonal to the
    kernel of M.  All elementary divisors of the result are 1.
    """
    return kernel_basis_int(kernel_basis_int(M))


def smith_divisors(M: IntMatrix):
    """Elementary divisors of M: positive, each dividing the next."""
    A = [list(r) for r in M.entries]
    nr, nc = M.rows, M.cols
    divisors = []
    t = 0
    while True:
        pivot = None
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                v = abs(A[i][j])
                if v and (best is None or v < best):
                    best = v
                    pivot = (i, j)
        if pivot is None:
            break
        while True:
            i0, j0 = pivot
            if i0 != t:
                A[t], A[i0] = A[i0], A[t]
            if j0 != t:
                for row in A:
                    row[t], row[j0] = row[j0], row[t]
            head = A[t][t]
            dirty = False
            for i in range(t + 1, nr):
                if A[i][t]:
                    q = A[i][t] // head
                    if q:
                        A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                    if A[i][t]:
                        dirty = True
            for j in range(t + 1, nc):
                if A[t][j]:
                    q = A[t][j] // head
                    if q:
                        for row in A:
                            row[j] -= q * row[t]
                    if A[t][j]:
                        dirty = True
            if dirty:
                pivot = _smallest_nonzero(A, t, nr, nc)
                continue
            # row and column are clear; enforce divisibility of the rest
            offender = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if A[i][j] % head:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[offender])]
            pivot = (t, t)
        divisors.append(abs(A[t][t]))
        t += 1
        if t == nr or t == nc:
            break
    return divisors


def _smallest_nonzero(A, t, nr, nc):
    best = None
    where = None
    for i in range(t, nr):
        for j in range(t, nc):
            v = abs(A[i][j])
            if v and (best is None or v < best):
                best = v
                where = (i, j)
    return where
