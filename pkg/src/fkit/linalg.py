"""Small exact linear algebra over a Field: matrices as lists of lists of
Scalars.  Everything here is plain Gaussian elimination; sizes are tiny
(3x3 for GL_3 actions, up to 27x27 for trace-form Gram matrices)."""

from __future__ import annotations


def zeros(field, n, m):
    z = field.zero
    return [[z] * m for _ in range(n)]


def identity(field, n):
    M = zeros(field, n, n)
    one = field.one
    for i in range(n):
        M[i][i] = one
    return M


def matmul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        Ai = A[i]
        for j in range(m):
            s = Ai[0] * B[0][j]
            for t in range(1, k):
                s = s + Ai[t] * B[t][j]
            row.append(s)
        out.append(row)
    return out


def matvec(A, v):
    out = []
    for row in A:
        s = row[0] * v[0]
        for t in range(1, len(v)):
            s = s + row[t] * v[t]
        out.append(s)
    return out


def transpose(A):
    return [list(col) for col in zip(*A)]


def scale(A, c):
    return [[c * x for x in row] for row in A]


def det(field, A):
    n = len(A)
    M = [list(row) for row in A]
    d = field.one
    for col in range(n):
        piv = None
        for r in range(col, n):
            if not M[r][col].is_zero():
                piv = r
                break
        if piv is None:
            return field.zero
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            d = -d
        d = d * M[col][col]
        inv = M[col][col].inv()
        for r in range(col + 1, n):
            f = M[r][col] * inv
            if f.is_zero():
                continue
            for c in range(col, n):
                M[r][c] = M[r][c] - f * M[col][c]
    return d


class SingularMatrixError(ValueError):
    pass


def inverse(field, A):
    n = len(A)
    M = [list(row) + list(Irow) for row, Irow in zip(A, identity(field, n))]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if not M[r][col].is_zero():
                piv = r
                break
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        M[col], M[piv] = M[piv], M[col]
        inv = M[col][col].inv()
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r == col:
                continue
            f = M[r][col]
            if f.is_zero():
                continue
            M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    return [row[n:] for row in M]


def rank(A):
    if not A:
        return 0
    M = [list(row) for row in A]
    n, m = len(M), len(M[0])
    r = 0
    for col in range(m):
        piv = None
        for i in range(r, n):
            if not M[i][col].is_zero():
                piv = i
                break
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = M[r][col].inv()
        M[r] = [x * inv for x in M[r]]
        for i in range(n):
            if i != r and not M[i][col].is_zero():
                f = M[i][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
        if r == n:
            break
    return r
