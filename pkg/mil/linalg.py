#!/usr/bin/env python3
"""
Dense linear algebra over a FieldSpec. Matrices are lists of rows of
element codes; nothing here mutates its arguments.
"""
from .errors import DimensionMismatch


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def transpose(matrix, cols=None):
    if not matrix:
        return [[] for _ in range(cols or 0)]
    return [list(column) for column in zip(*matrix)]


def matmul(field, left, right):
    if left and right and len(left[0]) != len(right):
        raise DimensionMismatch(f"cannot multiply {len(left)}x{len(left[0])} by {len(right)}x{len(right[0])}")
    columns = transpose(right)
    out = []
    for row in left:
        out_row = []
        for column in columns:
            acc = 0
            for u, v in zip(row, column):
                if u and v:
                    acc = field.add(acc, field.mul(u, v))
            out_row.append(acc)
        out.append(out_row)
    return out


def subtract(field, left, right):
    return [[field.sub(u, v) for u, v in zip(a, b)] for a, b in zip(left, right)]


def rref(field, matrix):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        scale = field.inv(rows[r][c])
        rows[r] = [field.mul(scale, v) for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [field.sub(v, field.mul(factor, w)) for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(field, matrix):
    return len(rref(field, matrix)[1])


def nullspace(field, matrix, ncols):
    """Basis of {v : matrix * v = 0}, one vector per free column, in column order."""
    if not matrix:
        return identity(ncols)
    reduced, pivots = rref(field, matrix)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, p in zip(reduced, pivots):
            if row[f]:
                v[p] = field.neg(row[f])
        basis.append(v)
    return basis


def column_rank(field, matrices):
    """Dimension of the sum of the column spaces of the given matrices."""
    stacked = []
    for m in matrices:
        stacked.extend(transpose(m))
    return rank(field, stacked) if stacked else 0


def determinant(field, matrix):
    rows = [list(r) for r in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionMismatch("determinant of a non-square matrix")
    det = 1
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c]), None)
        if pivot is None:
            return 0
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = field.neg(det)
        det = field.mul(det, rows[c][c])
        scale = field.inv(rows[c][c])
        for i in range(c + 1, n):
            if rows[i][c]:
                factor = field.mul(rows[i][c], scale)
                rows[i] = [field.sub(v, field.mul(factor, w)) for v, w in zip(rows[i], rows[c])]
    return det


def inverse(field, matrix):
    n = len(matrix)
    augmented = [list(row) + identity(n)[i] for i, row in enumerate(matrix)]
    reduced, pivots = rref(field, augmented)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in reduced]
