"""Exact rational matrices: rank, row reduction and nullspaces."""

from fractions import Fraction
from math import gcd, lcm
from typing import List, Sequence, Tuple

Matrix = List[List[Fraction]]


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    """Copy ``rows`` into a list-of-lists of Fractions, checking it is rectangular."""
    out = [[Fraction(v) for v in row] for row in rows]
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("matrix rows have different lengths")
    return out


def transpose(rows: Sequence[Sequence[Fraction]], ncols: int = 0) -> Matrix:
    if not rows:
        return [[] for _ in range(ncols)]
    return [list(col) for col in zip(*rows)]


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> List[List[int]]:
    # Scale each row by the lcm of its denominators; row scaling keeps the rank.
    out = []
    for row in rows:
        d = 1
        for v in row:
            d = lcm(d, Fraction(v).denominator)
        out.append([int(Fraction(v) * d) for v in row])
    return out


def rank(rows: Sequence[Sequence]) -> int:
    """Exact rank by fraction-free (Bareiss) elimination.

    >>> rank([[1, 0], [-1, 1], [0, -1]])
    2
    """
    a = _integer_rows(rows)
    if not a or not a[0]:
        return 0
    m, n = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, m):
            f = a[i][c]
            row_i, row_r = a[i], a[r]
            for j in range(c, n):
                # exact division is guaranteed by Sylvester's identity
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
        prev = p
        r += 1
    return r


def rref(rows: Sequence[Sequence]) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form over the rationals.

    Returns the nonzero rows and the list of pivot columns.
    """
    a = as_matrix(rows)
    if not a:
        return [], []
    m, n = len(a), len(a[0])
    pivots: List[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int = 0) -> Matrix:
    """Basis of the right nullspace ``{v : A v = 0}`` as a list of vectors.

    ``ncols`` is needed only when ``rows`` is empty.
    """
    a = as_matrix(rows)
    n = len(a[0]) if a else ncols
    red, pivots = rref(a)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def integer_vector(v: Sequence[Fraction]) -> List[int]:
    """Scale a rational vector to a primitive integer vector."""
    (row,) = _integer_rows([v])
    g = 0
    for x in row:
        g = gcd(g, x)
    return [x // g for x in row] if g else row


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> List[Fraction]:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]
