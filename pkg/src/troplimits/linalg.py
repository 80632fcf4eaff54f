"""Small exact linear algebra over Q and Z.

Matrices are sequences of rows; every entry is an int or a Fraction.  The
sizes in this package are tiny (rank <= 8), so plain Gaussian elimination on
Fractions is all that is needed.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Vec = tuple


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v)), 0)


def matvec(A: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(dot(row, v) for row in A)


def transpose(A: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def matmul(A, B) -> list[list]:
    Bt = transpose(B)
    return [[dot(row, col) for col in Bt] for row in A]


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def rref(rows: Sequence[Sequence], ncols: int, col_order: Sequence[int] | None = None):
    """Reduced row echelon form.

    Returns ``(R, pivots)`` with ``R`` a list of nonzero Fraction rows.  When
    ``col_order`` is given, pivots are searched in that column order.
    """
    M = [[Fraction(x) for x in r] for r in rows]
    order = list(col_order) if col_order is not None else list(range(ncols))
    pivots: list[int] = []
    r = 0
    for c in order:
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    if not rows:
        return 0
    return len(rref(rows, ncols if ncols is not None else len(rows[0]))[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[tuple]:
    """Rational basis of ``{x : A x = 0}``."""
    R, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def solve(A: Sequence[Sequence], b: Sequence, ncols: int):
    """One rational solution of ``A x = b``, or ``None`` if inconsistent."""
    if not A:
        return tuple(Fraction(0) for _ in range(ncols))
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(aug, ncols + 1, col_order=list(range(ncols + 1)))
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(R, pivots):
        x[p] = row[ncols]
    return tuple(x)


def primitive(v: Sequence) -> tuple[int, ...]:
    """Primitive integer vector on the ray of a rational vector (zero stays zero)."""
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def integer_rows(rows: Sequence[Sequence]) -> list[tuple[int, ...]]:
    """Scale each rational row to an integer row spanning the same line."""
    return [primitive(r) for r in rows]


def column_hermite(A: Sequence[Sequence[int]], n: int):
    """Unimodular column reduction.

    Returns ``(H, U)`` with ``H = A U`` in column echelon form and ``U`` an
    ``n x n`` unimodular integer matrix.  The columns of ``U`` matching zero
    columns of ``H`` form a lattice basis of ``{x in Z^n : A x = 0}``.
    """
    H = [list(map(int, r)) for r in A]
    U = identity(n)
    m = len(H)
    col = 0

    def swap(i, j):
        for row in H:
            row[i], row[j] = row[j], row[i]
        for row in U:
            row[i], row[j] = row[j], row[i]

    def addmul(dst, src, k):
        # column dst += k * column src
        for row in H:
            row[dst] += k * row[src]
        for row in U:
            row[dst] += k * row[src]

    for r in range(m):
        if col >= n:
            break
        while True:
            nz = [j for j in range(col, n) if H[r][j] != 0]
            if not nz:
                break
            j0 = min(nz, key=lambda j: abs(H[r][j]))
            if j0 != col:
                swap(j0, col)
            done = True
            for j in range(col + 1, n):
                if H[r][j] != 0:
                    q = H[r][j] // H[r][col]
                    addmul(j, col, -q)
                    if H[r][j] != 0:
                        done = False
            if done:
                break
        if H[r][col] != 0:
            col += 1
    return H, U


def integer_kernel(rows: Sequence[Sequence], n: int) -> list[tuple[int, ...]]:
    """Lattice basis of ``{x in Z^n : A x = 0}`` (a saturated sublattice)."""
    if not rows:
        return [tuple(r) for r in identity(n)]
    H, U = column_hermite(integer_rows(rows), n)
    zero_cols = [j for j in range(n) if all(row[j] == 0 for row in H)]
    return [tuple(U[i][j] for i in range(n)) for j in zero_cols]


def inverse(A: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(A)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(A)]
    R, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R]
