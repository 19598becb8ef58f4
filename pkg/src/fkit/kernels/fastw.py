"""Generator actions on packed int64 W-vectors over F_p.

Thin Python orchestration over the jitted Jordan primitives; used by the
high-volume verification suites.  Layout matches pack.pack_w:
v = [a, b (L), c (L), d].
"""

import numpy as np

from . import loops


def _split(v, L):
    return v[0], v[1 : 1 + L], v[1 + L : 1 + 2 * L], v[1 + 2 * L]


def _join(a, b, c, d, p):
    return np.concatenate(
        ([a % p], b % p, c % p, [d % p])
    ).astype(np.int64)


def jcross(pk, X, Y):
    p = pk.p
    s = loops.jsharp(pk.table, pk.conj, pk.gram, (X + Y) % p, p)
    s = s - loops.jsharp(pk.table, pk.conj, pk.gram, X % p, p)
    s = s - loops.jsharp(pk.table, pk.conj, pk.gram, Y % p, p)
    return s % p


def apply_n(pk, x, v):
    p = pk.p
    L = pk.jdim
    a, b, c, d = _split(v, L)
    xs = loops.jsharp(pk.table, pk.conj, pk.gram, x, p)
    nx = loops.jnorm(pk.table, pk.gram, pk.tvec, x, p)
    nb = (b + a * x) % p
    nc = (c + jcross(pk, b, x) + a * xs) % p
    nd = (
        d
        + loops.jpair(pk.jgram, c, x, p)
        + loops.jpair(pk.jgram, b, xs, p)
        + a * nx
    ) % p
    return _join(a, nb, nc, nd, p)


def apply_nbar(pk, x, v):
    p = pk.p
    L = pk.jdim
    a, b, c, d = _split(v, L)
    xs = loops.jsharp(pk.table, pk.conj, pk.gram, x, p)
    nx = loops.jnorm(pk.table, pk.gram, pk.tvec, x, p)
    na = (
        a
        + loops.jpair(pk.jgram, b, x, p)
        + loops.jpair(pk.jgram, c, xs, p)
        + d * nx
    ) % p
    nb = (b + jcross(pk, c, x) + d * xs) % p
    nc = (c + d * x) % p
    return _join(na, nb, nc, d, p)


def apply_iota(pk, v):
    p = pk.p
    L = pk.jdim
    a, b, c, d = _split(v, L)
    return _join(-d, c, -b, a, p)


def apply_s(pk, lam, v):
    p = pk.p
    L = pk.jdim
    a, b, c, d = _split(v, L)
    li = loops.inv_mod(lam, p)
    return _join(lam * lam % p * a, lam * b, c, li * d, p)


def apply_sstar(pk, lam, v):
    p = pk.p
    L = pk.jdim
    a, b, c, d = _split(v, L)
    li = loops.inv_mod(lam, p)
    return _join(li * a, b, lam * c, lam * lam % p * d, p)


def symp(pk, v, w):
    return loops.wsymp(pk.jgram, v, w, pk.p)


def quartic(pk, v):
    return loops.wq(pk.table, pk.conj, pk.gram, pk.tvec, pk.jgram, v, pk.p)
