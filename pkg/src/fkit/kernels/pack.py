"""Pack prime-field algebras and elements into int64 numpy arrays for the
scan kernels.  Only PrimeField algebras are packed; everything else goes
through the generic exact-arithmetic path."""

import numpy as np

from ..fields import PrimeField
from .. import jordan as jmod


class PackedAlgebra:
    """Structure constants of a composition algebra over F_p as int64 arrays.

    table[i, j, k]  coefficient of e_k in e_i e_j
    conj[i, k]      coefficient of e_k in conj(e_i)
    gram[i, j]      Gram matrix of the norm form (n(x) = x^T G x)
    jgram[t, s]     Gram matrix of the Jordan trace pairing in jordan_basis
                    coordinates (block-diag: I_3 then 2G per strip slot)
    """

    def __init__(self, algebra):
        if not isinstance(algebra.field, PrimeField):
            raise TypeError("kernel packing requires a prime field")
        self.algebra = algebra
        self.p = algebra.field.p
        m = algebra.dim
        self.m = m
        self.jdim = 3 + 3 * m
        self.wdim = 2 + 2 * self.jdim
        self.table = np.zeros((m, m, m), dtype=np.int64)
        for i in range(m):
            for j in range(m):
                for k in range(m):
                    self.table[i, j, k] = algebra.table[i][j][k].v
        self.conj = np.zeros((m, m), dtype=np.int64)
        for i in range(m):
            for k in range(m):
                self.conj[i, k] = algebra.conj_mat[i][k].v
        G = algebra.gram()
        self.gram = np.array([[x.v for x in row] for row in G], dtype=np.int64)
        self.tvec = np.array([t.v for t in algebra.trace_vec()], dtype=np.int64)
        self.unit = np.array([u.v for u in algebra.unit_coords], dtype=np.int64)
        JG = jmod.trace_form_gram(algebra)
        self.jgram = np.array([[x.v for x in row] for row in JG], dtype=np.int64)
        # trace-zero basis of C as rows (used by the strip / sextic scans)
        t0 = algebra.trace0_basis()
        self.trace0 = np.array([[c.v for c in e.coords] for e in t0], dtype=np.int64)


def pack_jordan(X):
    return np.array([s.v for s in jmod.coords_of(X)], dtype=np.int64)


def unpack_jordan(algebra, arr):
    f = algebra.field
    return jmod.from_coords(algebra, [f.scalar(int(v)) for v in arr])


def pack_w(v):
    """Freudenthal element -> int64 array [a, b-coords, c-coords, d]."""
    out = [v.a.v]
    out.extend(s.v for s in jmod.coords_of(v.b))
    out.extend(s.v for s in jmod.coords_of(v.c))
    out.append(v.d.v)
    return np.array(out, dtype=np.int64)


def unpack_w(algebra, arr):
    from ..freudenthal import FreudenthalElem

    f = algebra.field
    L = 3 + 3 * algebra.dim
    a = f.scalar(int(arr[0]))
    b = jmod.from_coords(algebra, [f.scalar(int(x)) for x in arr[1 : 1 + L]])
    c = jmod.from_coords(algebra, [f.scalar(int(x)) for x in arr[1 + L : 1 + 2 * L]])
    d = f.scalar(int(arr[1 + 2 * L]))
    return FreudenthalElem(a, b, c, d)
