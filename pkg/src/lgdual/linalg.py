"""Exact integer matrix algebra.

Provides arbitrary-precision integer matrices together with Smith and
column-style Hermite normal forms, cokernel presentations, and unimodular
right-equivalence solving.  Everything here is pure and exact; matrices are
immutable after construction.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import ShapeMismatchError

__all__ = [
    "IntMatrix",
    "SmithDecomposition",
    "ChowGroup",
    "xgcd",
    "snf",
    "cokernel",
    "hnf_col",
    "hnf_col_transform",
    "right_equivalent",
]


def xgcd(a, b):
    """Extended gcd: returns (x, y, g) with x*a + y*b == g >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


class IntMatrix:
    """Immutable integer matrix, row-major, arbitrary precision.

    The column count is explicit so zero-row matrices keep their shape
    (they show up as the exponent matrix of an empty superpotential).
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(tuple(int(x) for x in row) for row in entries)
        if len(entries) != rows or any(len(row) != cols for row in entries):
            raise ShapeMismatchError(
                "expected %dx%d entries, got %s" % (rows, cols, [len(r) for r in entries])
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [tuple(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cols is required for a matrix with no rows")
            cols = len(rows[0])
        return cls(len(rows), cols, rows)

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, IntMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return "IntMatrix(%d, %d, %r)" % (self.rows, self.cols, list(map(list, self.entries)))

    def __matmul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeMismatchError(
                "cannot multiply %dx%d by %dx%d" % (self.rows, self.cols, other.rows, other.cols)
            )
        ot = other.entries
        out = []
        for row in self.entries:
            acc = [0] * other.cols
            for k, a in enumerate(row):
                if a:
                    orow = ot[k]
                    for j in range(other.cols):
                        acc[j] += a * orow[j]
            out.append(tuple(acc))
        return IntMatrix(self.rows, other.cols, out)

    def transpose(self):
        return IntMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.entries else ((),) * self.cols if self.cols else ())

    def take_rows(self, indices):
        return IntMatrix(len(indices), self.cols, tuple(self.entries[i] for i in indices))

    def row_gcd(self, i):
        g = 0
        for x in self.entries[i]:
            g = gcd(g, abs(x))
        return g

    def row_gcds(self):
        return tuple(self.row_gcd(i) for i in range(self.rows))

    def det(self):
        """Exact determinant via fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ShapeMismatchError("determinant of non-square %dx%d matrix" % (self.rows, self.cols))
        n = self.rows
        if n == 0:
            return 1
        m = [list(row) for row in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def rank(self):
        """Rank over the rationals."""
        m = [[Fraction(x) for x in row] for row in self.entries]
        r = 0
        for col in range(self.cols):
            piv = None
            for i in range(r, len(m)):
                if m[i][col] != 0:
                    piv = i
                    break
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = 1 / m[r][col]
            m[r] = [x * inv for x in m[r]]
            for i in range(len(m)):
                if i != r and m[i][col] != 0:
                    f = m[i][col]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            r += 1
            if r == len(m):
                break
        return r

    def is_unimodular(self):
        return self.rows == self.cols and self.det() in (1, -1)


def block_diag(a, b):
    """Direct sum of two integer matrices."""
    rows = []
    for row in a.entries:
        rows.append(row + (0,) * b.cols)
    for row in b.entries:
        rows.append((0,) * a.cols + row)
    return IntMatrix(a.rows + b.rows, a.cols + b.cols, rows)


@dataclass(frozen=True)
class SmithDecomposition:
    """u @ a @ v == s with u, v unimodular and s = diag(d1 | d2 | ...)."""

    u: IntMatrix
    s: IntMatrix
    v: IntMatrix

    def diagonal(self):
        return tuple(self.s[i][i] for i in range(min(self.s.rows, self.s.cols)))


def snf(a):
    """Smith normal form with transforms.

    Pivoting by minimal nonzero absolute value, alternating row/column
    sweeps, then a divisibility pass folding any stained trailing entry
    into the pivot row.  Adequate and fully exact at small scale.
    """
    r, n = a.rows, a.cols
    m = [list(row) for row in a.entries]
    u = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def addmul_row(i, j, q):
        # row_i += q * row_j
        mi, mj = m[i], m[j]
        for k in range(n):
            mi[k] += q * mj[k]
        ui, uj = u[i], u[j]
        for k in range(r):
            ui[k] += q * uj[k]

    def addmul_col(j, i, q):
        # col_j += q * col_i
        for row in m:
            row[j] += q * row[i]
        for row in v:
            row[j] += q * row[i]

    def negate_row(i):
        m[i] = [-x for x in m[i]]
        u[i] = [-x for x in u[i]]

    for t in range(min(r, n)):
        while True:
            # smallest nonzero entry of the trailing block becomes the pivot
            piv = None
            best = None
            for i in range(t, r):
                for j in range(t, n):
                    x = m[i][j]
                    if x != 0 and (best is None or abs(x) < best):
                        best = abs(x)
                        piv = (i, j)
            if piv is None:
                break
            if piv != (t, t):
                if piv[0] != t:
                    swap_rows(t, piv[0])
                if piv[1] != t:
                    swap_cols(t, piv[1])
            dirty = False
            for i in range(t + 1, r):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    if q:
                        addmul_row(i, t, -q)
                    if m[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    if q:
                        addmul_col(j, t, -q)
                    if m[t][j]:
                        dirty = True
            if dirty:
                continue
            # pivot must divide the whole trailing block
            stain = None
            d = m[t][t]
            for i in range(t + 1, r):
                for j in range(t + 1, n):
                    if m[i][j] % d:
                        stain = i
                        break
                if stain is not None:
                    break
            if stain is None:
                break
            addmul_row(t, stain, 1)
        if m[t][t] < 0:
            negate_row(t)
    return SmithDecomposition(
        IntMatrix(r, r, u),
        IntMatrix(r, n, m),
        IntMatrix(n, n, v),
    )


@dataclass(frozen=True)
class ChowGroup:
    """Cokernel presentation of an integer matrix map.

    The map sends the column lattice into the row lattice (chi -> a @ chi);
    its cokernel is Z^free_rank plus cyclic factors of the orders listed in
    ``torsion``.  ``projection`` stacks the free coordinate functionals first
    (sign-normalized so the first nonzero entry is positive), then the
    torsion coordinate functionals.  ``source`` is the defining matrix.
    """

    free_rank: int
    torsion: tuple
    projection: IntMatrix
    source: IntMatrix

    def free_projection(self):
        return self.projection.take_rows(range(self.free_rank))


def cokernel(a):
    """Cokernel of chi -> a @ chi as a ChowGroup presentation."""
    dec = snf(a)
    diag = dec.diagonal()
    k = sum(1 for d in diag if d != 0)
    torsion = tuple(d for d in diag if d > 1)
    free_rows = []
    for i in range(k, a.rows):
        row = dec.u[i]
        lead = next((x for x in row if x != 0), 0)
        if lead < 0:
            row = tuple(-x for x in row)
        free_rows.append(row)
    torsion_rows = [dec.u[i] for i in range(k) if diag[i] > 1]
    projection = IntMatrix(len(free_rows) + len(torsion_rows), a.rows, free_rows + torsion_rows)
    return ChowGroup(a.rows - k, torsion, projection, a)


def _hnf_col_ops(a):
    """Column-reduce a to Hermite form, returning (h, u, u_inv) as lists."""
    r, n = a.rows, a.cols
    m = [list(row) for row in a.entries]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    uinv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in u:
            row[i], row[j] = row[j], row[i]
        uinv[i], uinv[j] = uinv[j], uinv[i]

    def negate(j):
        for row in m:
            row[j] = -row[j]
        for row in u:
            row[j] = -row[j]
        uinv[j] = [-x for x in uinv[j]]

    def addmul(j, i, q):
        # col_j += q * col_i; inverse transform: row_i -= q * row_j
        for row in m:
            row[j] += q * row[i]
        for row in u:
            row[j] += q * row[i]
        ri, rj = uinv[i], uinv[j]
        for k in range(n):
            ri[k] -= q * rj[k]

    pivot_col = 0
    for row_idx in range(r):
        if pivot_col >= n:
            break
        # euclidean sweep across the active columns of this row
        while True:
            nz = [j for j in range(pivot_col, n) if m[row_idx][j] != 0]
            if not nz:
                break
            jmin = min(nz, key=lambda j: abs(m[row_idx][j]))
            if jmin != pivot_col:
                swap(pivot_col, jmin)
            done = True
            for j in range(pivot_col + 1, n):
                x = m[row_idx][j]
                if x:
                    q = x // m[row_idx][pivot_col]
                    addmul(j, pivot_col, -q)
                    if m[row_idx][j]:
                        done = False
            if done:
                break
        if m[row_idx][pivot_col] == 0:
            continue
        if m[row_idx][pivot_col] < 0:
            negate(pivot_col)
        p = m[row_idx][pivot_col]
        for j in range(pivot_col):
            x = m[row_idx][j]
            q = x // p  # floor puts the entry into [0, p)
            if q:
                addmul(j, pivot_col, -q)
        pivot_col += 1
    return m, u, uinv


def hnf_col(a):
    """Unique column-style Hermite normal form h = a @ u.

    Convention: pivots positive, entries left of a pivot within its row lie
    in [0, pivot), zero columns pushed rightmost.
    """
    m, _, _ = _hnf_col_ops(a)
    return IntMatrix(a.rows, a.cols, m)


def hnf_col_transform(a):
    """Hermite form plus the transform pair: returns (h, u, u_inv)."""
    m, u, uinv = _hnf_col_ops(a)
    n = a.cols
    return IntMatrix(a.rows, a.cols, m), IntMatrix(n, n, u), IntMatrix(n, n, uinv)


def _first_independent_rows(b):
    """Indices of the first maximal set of Q-linearly independent rows."""
    basis = []  # reduced Fraction rows
    picked = []
    for i in range(b.rows):
        vec = [Fraction(x) for x in b[i]]
        for lead, red in basis:
            if vec[lead]:
                f = vec[lead]
                vec = [x - f * y for x, y in zip(vec, red)]
        lead = next((j for j, x in enumerate(vec) if x != 0), None)
        if lead is None:
            continue
        inv = 1 / vec[lead]
        basis.append((lead, [x * inv for x in vec]))
        picked.append(i)
        if len(picked) == b.cols:
            break
    return picked


def _solve_square(mat, rhs):
    """Solve mat @ x = rhs over the rationals; mat n x n invertible.

    mat and rhs are lists of Fraction rows; returns list of Fraction rows.
    """
    n = len(mat)
    aug = [list(mat[i]) + list(rhs[i]) for i in range(n)]
    w = len(aug[0])
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [row[n:w] for row in aug]


def right_equivalent(a, b):
    """Unimodular u with b @ u == a, or None when no such u exists.

    Decided through equality of Hermite forms.  When b has full column
    rank the witness is recovered by a rational row-select solve (it is
    then unique); otherwise it is assembled from the tracked Hermite
    transforms of both sides.
    """
    if a.rows != b.rows or a.cols != b.cols:
        raise ShapeMismatchError(
            "right equivalence needs equal shapes, got %dx%d and %dx%d"
            % (a.rows, a.cols, b.rows, b.cols)
        )
    n = a.cols
    if n == 0:
        return IntMatrix.identity(0)
    ha, ua, ua_inv = hnf_col_transform(a)
    hb, ub, ub_inv = hnf_col_transform(b)
    if ha != hb:
        return None
    picked = _first_independent_rows(b)
    if len(picked) == n:
        bsel = [[Fraction(x) for x in b[i]] for i in picked]
        asel = [[Fraction(x) for x in a[i]] for i in picked]
        sol = _solve_square(bsel, asel)
        if any(x.denominator != 1 for row in sol for x in row):
            raise AssertionError("equivalent matrices produced a non-integral witness")
        u = IntMatrix(n, n, [[int(x) for x in row] for row in sol])
    else:
        u = ub @ ua_inv
    if b @ u != a or not u.is_unimodular():
        raise AssertionError("right-equivalence witness failed verification")
    return u
