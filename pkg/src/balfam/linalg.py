"""
Exact dense linear algebra over the rationals.

Entries are ``fractions.Fraction`` values, which are always reduced with a
positive denominator, so no rounding ever enters a rank or kernel computation.
Pivoting is deterministic: the leftmost column holding a nonzero entry at or
below the current pivot row, and the topmost such row.
"""

from fractions import Fraction

from .errors import DimensionMismatch


class RationalMatrix:
    """Dense row-major matrix of Fractions with at least one row and column."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        grid = [[Fraction(x) for x in row] for row in entries]
        if not grid or not grid[0]:
            raise DimensionMismatch("a matrix needs at least one row and one column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise DimensionMismatch("ragged rows")
        self.rows = len(grid)
        self.cols = width
        self.entries = grid

    @classmethod
    def from_columns(cls, columns):
        columns = [list(c) for c in columns]
        if not columns:
            raise DimensionMismatch("a matrix needs at least one column")
        return cls([list(r) for r in zip(*columns)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, size):
        return cls([[int(i == j) for j in range(size)] for i in range(size)])

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries)
        return f"RationalMatrix([{body}])"

    def copy_rows(self):
        return [row[:] for row in self.entries]

    def transpose(self):
        return RationalMatrix([list(col) for col in zip(*self.entries)])

    def dot(self, vector):
        vector = list(vector)
        if len(vector) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vector)} against {self.cols} columns")
        return [sum((a * b for a, b in zip(row, vector) if a and b), Fraction(0))
                for row in self.entries]

    def tolist(self):
        return self.copy_rows()


def _as_matrix(matrix):
    return matrix if isinstance(matrix, RationalMatrix) else RationalMatrix(matrix)


def rref(matrix):
    """
    Reduced row echelon form.

    Returns ``(rows, pivots)`` where ``rows`` is the reduced grid (a fresh
    list of lists) and ``pivots`` the ascending list of pivot columns.
    """
    m = _as_matrix(matrix)
    a = m.copy_rows()
    nrows, ncols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        if piv != 1:
            a[r] = [x / piv for x in a[r]]
        prow = a[r]
        for i in range(nrows):
            f = a[i][c]
            if i != r and f != 0:
                row = a[i]
                for j in range(c, ncols):
                    if prow[j]:
                        row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(matrix):
    return len(rref(matrix)[1])


def kernel_dimension(matrix):
    m = _as_matrix(matrix)
    return m.cols - rank(m)


def kernel_vector(matrix):
    """
    One nonzero solution of ``matrix @ x == 0``, or None when the kernel is trivial.

    The lowest-indexed free variable is set to 1, every other free variable
    to 0, and the pivot variables are read off the reduced echelon form.
    """
    m = _as_matrix(matrix)
    a, pivots = rref(m)
    pivot_set = set(pivots)
    free = next((c for c in range(m.cols) if c not in pivot_set), None)
    if free is None:
        return None
    x = [Fraction(0)] * m.cols
    x[free] = Fraction(1)
    for r, c in enumerate(pivots):
        x[c] = -a[r][free]
    return x


def kernel_basis(matrix):
    """Basis of the kernel, one vector per free column in ascending order."""
    m = _as_matrix(matrix)
    a, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        x = [Fraction(0)] * m.cols
        x[f] = Fraction(1)
        for r, c in enumerate(pivots):
            x[c] = -a[r][f]
        basis.append(x)
    return basis
