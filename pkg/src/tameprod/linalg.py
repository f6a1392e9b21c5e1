"""Small exact linear algebra helpers over the rationals."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import DimensionMismatch


def demote(x):
    """Turn integral Fractions back into ints (keeps arithmetic fast)."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a, b):
    n, m = len(a), len(b[0])
    inner = len(b)
    return [
        [sum(a[i][t] * b[t][j] for t in range(inner)) for j in range(m)]
        for i in range(n)
    ]


def transpose(a):
    return [list(col) for col in zip(*a)]


def invert(matrix):
    """Exact inverse of a square matrix (entries int or Fraction)."""
    n = len(matrix)
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(matrix)
    ]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise DimensionMismatch("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [[demote(x) for x in row[n:]] for row in aug]


def contragredient_matrix(g):
    """(g^T)^{-1}, exactly."""
    return transpose(invert(g))


def rref(matrix):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    rows = [[Fraction(x) for x in row] for row in matrix if any(row)]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(matrix) -> int:
    return len(rref(matrix)[0])


def nullspace_primitive(matrix, ncols: int):
    """Basis of the nullspace as primitive integer vectors.

    Each vector has coprime entries and positive first nonzero entry;
    `matrix` may be empty (nullspace is all of Q^ncols).
    """
    rows, pivots = rref([row for row in matrix if any(row)])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        mult = lcm(*(x.denominator for x in vec)) if ncols else 1
        ints = [int(x * mult) for x in vec]
        g = gcd(*ints) if any(ints) else 1
        ints = [x // g for x in ints]
        lead = next((x for x in ints if x), 1)
        if lead < 0:
            ints = [-x for x in ints]
        basis.append(tuple(ints))
    return basis


def solve_dict_system(basis_dicts, target_dict):
    """Solve sum_i x_i * basis_i == target in coordinates given by dict keys.

    Returns the coefficient list, or None if the target is not in the span.
    """
    keys = set(target_dict)
    for d in basis_dicts:
        keys |= set(d)
    keys = sorted(keys)
    n = len(basis_dicts)
    aug = [
        [Fraction(d.get(key, 0)) for d in basis_dicts] + [Fraction(target_dict.get(key, 0))]
        for key in keys
    ]
    rows, pivots = rref(aug)
    sol = [Fraction(0)] * n
    for r, pc in enumerate(pivots):
        if pc == n:
            return None  # inconsistent
        sol[pc] = rows[r][n]
    # verify (handles free columns set to zero)
    for key in keys:
        total = sum(sol[i] * basis_dicts[i].get(key, 0) for i in range(n))
        if total != target_dict.get(key, 0):
            return None
    return sol
