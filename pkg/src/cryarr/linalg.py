"""Exact linear algebra over the integers and rationals.

Everything here works with arbitrary-precision ``int`` and
``fractions.Fraction``; no floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd

from .errors import SingularMatrixError


def gcd_all(values) -> int:
    return reduce(gcd, (abs(int(v)) for v in values), 0)


def dot(u, v):
    """Exact scalar product; entries may mix int and Fraction."""
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    return sum(a * b for a, b in zip(u, v))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_neg(u):
    return tuple(-a for a in u)


def vec_scale(c, u):
    return tuple(c * a for a in u)


def clear_denominators(vec):
    """Primitive integer vector spanning the same ray; orientation preserved."""
    lcm = 1
    for x in vec:
        d = Fraction(x).denominator
        lcm = lcm * d // gcd(lcm, d)
    ints = [int(Fraction(x) * lcm) for x in vec]
    g = gcd_all(ints)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def sign_normalize(vec):
    """Flip the vector if its first nonzero entry is negative."""
    for x in vec:
        if x != 0:
            return tuple(-y for y in vec) if x < 0 else tuple(vec)
    return tuple(vec)


def direction(vec):
    """Canonical key for the line spanned by ``vec``: primitive, first nonzero positive."""
    return sign_normalize(clear_denominators(vec))


def identity_matrix(n, one=1):
    return tuple(tuple(one if i == j else 0 * one for j in range(n)) for i in range(n))


def mat_vec(m, v):
    return tuple(dot(row, v) for row in m)


def mat_mul(a, b):
    cols = list(zip(*b))
    return tuple(tuple(dot(row, col) for col in cols) for row in a)


def matrix_rank(rows) -> int:
    """Rank over the rationals by Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][c]
        m[rank] = [x / pv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def invert(matrix):
    """Exact inverse of a square rational matrix (Gauss-Jordan)."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


def kernel_vector(rows, dim):
    """Primitive integer generator of the kernel of the given covectors,
    or None unless the kernel is exactly one-dimensional."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(dim):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(dim) if c not in pivots]
    if len(free) != 1:
        return None
    fc = free[0]
    vec = [Fraction(0)] * dim
    vec[fc] = Fraction(1)
    for row_idx, c in enumerate(pivots):
        vec[c] = -m[row_idx][fc]
    return clear_denominators(vec)


def smith_normal_form(matrix):
    """Elementary divisors d1 | d2 | ... of an integer matrix.

    Returns min(rows, cols) non-negative integers forming a divisibility
    chain (zeros at the end).  Uses elementary row/column reduction with
    the minimal nonzero absolute value as pivot.
    """
    a = [list(map(int, row)) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    n = min(rows, cols)
    if n == 0:
        return ()
    divisors = []
    t = 0
    while t < n:
        pos = _min_nonzero(a, t, rows, cols)
        if pos is None:
            break
        while True:
            i0, j0 = pos
            if i0 != t:
                a[t], a[i0] = a[i0], a[t]
            if j0 != t:
                for row in a:
                    row[t], row[j0] = row[j0], row[t]
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // p
                    for j in range(t, cols):
                        a[i][j] -= q * a[t][j]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // p
                    for i in range(t, rows):
                        a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        dirty = True
            if not dirty:
                offender = None
                for i in range(t + 1, rows):
                    if any(a[i][j] % p for j in range(t + 1, cols)):
                        offender = i
                        break
                if offender is None:
                    break
                for j in range(t, cols):
                    a[t][j] += a[offender][j]
            pos = _min_nonzero(a, t, rows, cols)
        divisors.append(abs(a[t][t]))
        t += 1
    divisors += [0] * (n - len(divisors))
    return tuple(divisors)


def _min_nonzero(a, t, rows, cols):
    best = None
    pos = None
    for i in range(t, rows):
        for j in range(t, cols):
            v = abs(a[i][j])
            if v and (best is None or v < best):
                best = v
                pos = (i, j)
    return pos


def vol(m, vectors):
    """Product of the elementary divisors of the matrix whose columns are
    the first ``m`` vectors.

    For m = 1 this is the gcd of the coordinates, for m = r the absolute
    value of the determinant.  A zero column makes the result 0.
    """
    if m < 1 or m > len(vectors):
        raise ValueError("need 1 <= m <= number of vectors")
    vs = vectors[:m]
    r = len(vs[0])
    if any(len(v) != r for v in vs):
        raise ValueError("dimension mismatch")
    cols_matrix = [[vs[j][i] for j in range(m)] for i in range(r)]
    result = 1
    for d in smith_normal_form(cols_matrix):
        result *= d
    return result


def dual_basis(basis):
    """Dual covectors B* with <B*_i, B_j> = delta_ij for independent rational B."""
    inv = invert(basis)
    n = len(basis)
    return tuple(tuple(inv[k][i] for k in range(n)) for i in range(n))
