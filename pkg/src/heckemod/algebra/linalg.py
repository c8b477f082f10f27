"""Dense linear algebra by Gaussian elimination.

:class:`Matrix` holds element codes of a FiniteField.  The pivot rule is
fixed (first nonzero entry in the column, scanning rows top-down), so row
reduction is deterministic.  :func:`inverse` works over any exact field of
Python objects (Fractions, Cyclotomic, RationalFunction).
"""

from __future__ import annotations

from ..errors import ValidationError


class Matrix:
    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field, rows, ncols=None):
        rows = [list(r) for r in rows]
        if rows:
            widths = {len(r) for r in rows}
            if len(widths) != 1:
                raise ValidationError(f"ragged matrix: row lengths {sorted(widths)}")
            width = widths.pop()
            if ncols is not None and ncols != width:
                raise ValidationError(f"declared {ncols} columns but rows have {width}")
            ncols = width
        elif ncols is None:
            ncols = 0
        for r in rows:
            for c in r:
                if not (isinstance(c, int) and 0 <= c < field.q):
                    raise ValidationError(f"entry {c!r} is not an element code of F_{field.q}")
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, field, n):
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, field, m, n):
        return cls(field, [[0] * n for _ in range(m)], ncols=n)

    def rref(self):
        """Reduced row echelon form and pivot columns."""
        F = self.field
        M = [list(r) for r in self.rows]
        pivots = []
        row = 0
        for col in range(self.ncols):
            if row == len(M):
                break
            piv = next((i for i in range(row, len(M)) if M[i][col]), None)
            if piv is None:
                continue
            M[row], M[piv] = M[piv], M[row]
            inv = F.inv(M[row][col])
            M[row] = [F.mul(inv, c) for c in M[row]]
            for i in range(len(M)):
                if i != row and M[i][col]:
                    f = M[i][col]
                    M[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(M[i], M[row])]
            pivots.append(col)
            row += 1
        return Matrix(self.field, M, ncols=self.ncols), pivots

    def rank(self):
        return len(self.rref()[1])

    def kernel_dimension(self):
        return self.ncols - self.rank()

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.field == other.field and self.rows == other.rows

    def __repr__(self):
        return f"Matrix(F_{self.field.q}, {self.nrows}x{self.ncols})"


def kernel_dimension(M: Matrix) -> int:
    """Dimension of the right kernel of M."""
    return M.kernel_dimension()


class EchelonBasis:
    """Incrementally maintained echelon basis of a subspace of F^n.

    Each stored row is normalised with a leading 1 at its pivot; a new
    vector is reduced against the stored rows and kept if nonzero.
    """

    __slots__ = ("field", "rows", "_add", "_mul")

    def __init__(self, field):
        self.field = field
        self.rows = {}  # pivot -> row
        self._add, self._mul = field.tables()

    def insert(self, vec):
        """Reduce vec; store it and return True if it is independent."""
        add, mul, neg = self._add, self._mul, self.field._neg
        v = list(vec)
        for i, c in enumerate(v):
            if not c:
                continue
            row = self.rows.get(i)
            if row is None:
                inv = self.field.inv(c)
                self.rows[i] = [mul[inv][x] for x in v]
                return True
            f = neg[c]
            mf = mul[f]
            for j in range(i, len(v)):
                rj = row[j]
                if rj:
                    v[j] = add[v[j]][mf[rj]]
        return False

    def __len__(self):
        return len(self.rows)


def inverse(rows):
    """Exact inverse of a square matrix over a field of Python objects."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValidationError("inverse needs a square matrix")
    M = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        piv = next((i for i in range(col, n) if M[i][col] != 0), None)
        if piv is None:
            raise ValidationError("matrix is singular")
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [inv * c for c in M[col]]
        for i in range(n):
            if i != col and M[i][col] != 0:
                f = M[i][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[col])]
    return [r[n:] for r in M]


def matmul(a, b):
    """Product of two matrices given as lists of rows of field objects."""
    if a and len(a[0]) != len(b):
        raise ValidationError("shape mismatch in matrix product")
    cols = len(b[0]) if b else 0
    out = []
    for r in a:
        row = []
        for j in range(cols):
            acc = 0
            for k, x in enumerate(r):
                acc = acc + x * b[k][j]
            row.append(acc)
        out.append(row)
    return out
