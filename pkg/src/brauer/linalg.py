"""Small exact linear algebra over the rationals.

Matrices are lists of rows. Entries are ints or Fractions; results use Fraction
only when a division actually happens.
"""
from __future__ import annotations

from fractions import Fraction

Matrix = list  # list[list[int | Fraction]]


def zeros(r: int, c: int) -> Matrix:
    return [[0] * c for _ in range(r)]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix, inner: int | None = None, cols: int | None = None) -> Matrix:
    """a (r x n) times b (n x c).

    ``inner`` and ``cols`` give n and c when they cannot be read off an empty b.
    """
    n = len(b) if inner is None else inner
    c = cols if cols is not None else (len(b[0]) if b else 0)
    out = []
    for row in a:
        acc = [0] * c
        for k in range(n):
            x = row[k]
            if x:
                bk = b[k]
                for j in range(c):
                    y = bk[j]
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def is_zero(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def rref(a: Matrix, ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(row) for row in a]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        if piv != 1:
            m[r] = [_norm(Fraction(x) / piv) if x else 0 for x in m[r]]
        row_r = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                row_i = m[i]
                m[i] = [_norm(x - f * y) if y else x for x, y in zip(row_i, row_r)]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(a: Matrix, ncols: int | None = None) -> int:
    return len(rref(a, ncols)[1])


def nullspace(a: Matrix, ncols: int) -> tuple[list[list], list[int]]:
    """Basis of {x : a x = 0} and the free columns.

    Basis vector k is 1 at free column k and 0 at the other free columns, so the
    coordinates of any kernel vector w are simply w restricted to the free columns.
    """
    red, pivots = rref(a, ncols)
    pset = set(pivots)
    free = [c for c in range(ncols) if c not in pset]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, p in zip(red, pivots):
            if row[f]:
                v[p] = -row[f]
        basis.append(v)
    return basis, free


def complement_units(rows: list[list], n: int) -> list[int]:
    """Coordinates j whose unit vectors complete the row space of ``rows`` to all of Q^n."""
    _, pivots = rref(rows, n)
    pset = set(pivots)
    return [j for j in range(n) if j not in pset]


def det(a: Matrix) -> Fraction | int:
    n = len(a)
    m = [list(row) for row in a]
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            result = -result
        piv = Fraction(m[c][c])
        result *= piv
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / piv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return _norm(result)


def transpose(a: Matrix, ncols: int | None = None) -> Matrix:
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*a)]
