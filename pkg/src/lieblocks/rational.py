"""Small exact linear algebra over the rationals.

Matrices are lists of lists of ``Fraction``.  Everything here is plain
Gaussian elimination; sizes in this package never exceed a few dozen.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Matrix = list[list[Fraction]]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not accepted in exact matrices")
    return Fraction(x)


def matrix(rows: Iterable[Iterable]) -> Matrix:
    out = [[as_fraction(x) for x in row] for row in rows]
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return out


def shape(a: Sequence[Sequence]) -> tuple[int, int]:
    return len(a), (len(a[0]) if a else 0)


def zeros(n: int, m: int | None = None) -> Matrix:
    m = n if m is None else m
    return [[Fraction(0)] * m for _ in range(n)]


def identity(n: int) -> Matrix:
    out = zeros(n)
    for i in range(n):
        out[i][i] = Fraction(1)
    return out


def transpose(a: Matrix, ncols: int | None = None) -> Matrix:
    # ncols lets an n x 0 matrix transpose to 0 x n
    n, m = shape(a)
    if ncols is not None:
        m = ncols
    return [[a[i][j] for i in range(n)] for j in range(m)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, k = shape(a)
    k2, m = shape(b)
    if k != k2 and n and k2:
        raise ValueError(f"shape mismatch {n}x{k} @ {k2}x{m}")
    return [[sum((a[i][t] * b[t][j] for t in range(k)), Fraction(0)) for j in range(m)]
            for i in range(n)]


def add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(c, a: Matrix) -> Matrix:
    c = as_fraction(c)
    return [[c * x for x in row] for row in a]


def neg(a: Matrix) -> Matrix:
    return [[-x for x in row] for row in a]


def block(blocks: Sequence[Sequence[Matrix]], row_sizes: Sequence[int],
          col_sizes: Sequence[int]) -> Matrix:
    """Assemble a block matrix; sizes are explicit so empty blocks work."""
    out = zeros(sum(row_sizes), sum(col_sizes))
    r0 = 0
    for bi, rs in enumerate(row_sizes):
        c0 = 0
        for bj, cs in enumerate(col_sizes):
            blk = blocks[bi][bj]
            for i in range(rs):
                for j in range(cs):
                    out[r0 + i][c0 + j] = as_fraction(blk[i][j])
            c0 += cs
        r0 += rs
    return out


def is_skew(a: Matrix) -> bool:
    n, m = shape(a)
    if n != m:
        return False
    return all(a[i][j] == -a[j][i] for i in range(n) for j in range(i, n))


def det(a: Matrix) -> Fraction:
    n, m = shape(a)
    if n != m:
        raise ValueError("determinant of a non-square matrix")
    w = [row[:] for row in a]
    result = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if w[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            w[k], w[piv] = w[piv], w[k]
            result = -result
        p = w[k][k]
        result *= p
        for i in range(k + 1, n):
            if w[i][k] != 0:
                t = w[i][k] / p
                wi, wk = w[i], w[k]
                for j in range(k, n):
                    wi[j] -= t * wk[j]
    return result


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    w = [row[:] for row in a]
    n, m = shape(w)
    pivots: list[int] = []
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, n) if w[i][c] != 0), None)
        if piv is None:
            continue
        w[r], w[piv] = w[piv], w[r]
        p = w[r][c]
        w[r] = [x / p for x in w[r]]
        for i in range(n):
            if i != r and w[i][c] != 0:
                t = w[i][c]
                w[i] = [x - t * y for x, y in zip(w[i], w[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    return w, pivots


def rank(a: Matrix) -> int:
    return len(rref(a)[1])


def nullspace(a: Matrix, ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {x : a x = 0} as a list of column vectors."""
    n, m = shape(a)
    if ncols is not None:
        m = ncols
    if n == 0:
        return [[Fraction(int(i == j)) for i in range(m)] for j in range(m)]
    red, pivots = rref(a)
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -red[r][f]
        basis.append(v)
    return basis


def solve(a: Matrix, b: Matrix, ncols: int | None = None) -> Matrix | None:
    """One solution X of a X = b (free variables set to zero), or None."""
    n, m = shape(a)
    if ncols is not None:
        m = ncols
    k = len(b[0]) if b else 0
    aug = [list(a[i]) + list(b[i]) for i in range(n)]
    red, pivots = rref(aug)
    if any(p >= m for p in pivots):
        return None
    x = zeros(m, k)
    for r, c in enumerate(pivots):
        for j in range(k):
            x[c][j] = red[r][m + j]
    return x


def inverse(a: Matrix) -> Matrix:
    n, _ = shape(a)
    x = solve(a, identity(n))
    if x is None or det(a) == 0:
        raise ZeroDivisionError("singular matrix")
    return x


def fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
