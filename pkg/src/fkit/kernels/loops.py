"""Hot loops over prime fields, compiled with numba (or run as plain Python
when FKIT_NUMBA=0).  Everything works on the int64 arrays produced by
`pack.PackedAlgebra`; element layouts:

  composition element  x[0:m]
  Jordan element       X = [c1, c2, c3, x1 (m), x2 (m), x3 (m)]   (len L)
  W element            v = [a, b (L), c (L), d]                   (len 2+2L)

All arithmetic is mod p with representatives in [0, p).
"""

import numpy as np

from .backend import jit


@jit
def inv_mod(a, p):
    a %= p
    r = 1
    e = p - 2
    base = a
    while e:
        if e & 1:
            r = (r * base) % p
        base = (base * base) % p
        e >>= 1
    return r


@jit
def cmul(table, x, y, p):
    m = x.shape[0]
    out = np.zeros(m, dtype=np.int64)
    for i in range(m):
        xi = x[i]
        if xi == 0:
            continue
        for j in range(m):
            yj = y[j]
            if yj == 0:
                continue
            f = (xi * yj) % p
            for k in range(m):
                t = table[i, j, k]
                if t != 0:
                    out[k] = (out[k] + f * t) % p
    return out


@jit
def cconj(conjm, x, p):
    m = x.shape[0]
    out = np.zeros(m, dtype=np.int64)
    for i in range(m):
        xi = x[i]
        if xi == 0:
            continue
        for k in range(m):
            out[k] = (out[k] + xi * conjm[i, k]) % p
    return out


@jit
def cnorm(gram, x, p):
    m = x.shape[0]
    s = 0
    for i in range(m):
        if x[i] == 0:
            continue
        for j in range(m):
            s += x[i] * gram[i, j] % p * x[j]
    return s % p


@jit
def ctr(tvec, x, p):
    s = 0
    for i in range(x.shape[0]):
        s += tvec[i] * x[i]
    return s % p


@jit
def jpair(jgram, X, Y, p):
    L = X.shape[0]
    s = 0
    for t in range(L):
        if X[t] == 0:
            continue
        row = 0
        for u in range(L):
            g = jgram[t, u]
            if g != 0 and Y[u] != 0:
                row += g * Y[u]
        s += X[t] * (row % p)
    return s % p


@jit
def jnorm(table, gram, tvec, X, p):
    m = (X.shape[0] - 3) // 3
    c1, c2, c3 = X[0], X[1], X[2]
    x1 = X[3 : 3 + m]
    x2 = X[3 + m : 3 + 2 * m]
    x3 = X[3 + 2 * m : 3 + 3 * m]
    s = (c1 * c2 % p) * c3 % p
    s -= c1 * cnorm(gram, x1, p) + c2 * cnorm(gram, x2, p) + c3 * cnorm(gram, x3, p)
    s += ctr(tvec, cmul(table, cmul(table, x1, x2, p), x3, p), p)
    return s % p


@jit
def jsharp(table, conjm, gram, X, p):
    m = (X.shape[0] - 3) // 3
    out = np.zeros(X.shape[0], dtype=np.int64)
    c1, c2, c3 = X[0], X[1], X[2]
    x1 = X[3 : 3 + m]
    x2 = X[3 + m : 3 + 2 * m]
    x3 = X[3 + 2 * m : 3 + 3 * m]
    out[0] = (c2 * c3 - cnorm(gram, x1, p)) % p
    out[1] = (c1 * c3 - cnorm(gram, x2, p)) % p
    out[2] = (c1 * c2 - cnorm(gram, x3, p)) % p
    b3 = cconj(conjm, x3, p)
    b2 = cconj(conjm, x2, p)
    b1 = cconj(conjm, x1, p)
    n1 = cmul(table, b3, b2, p)
    n2 = cmul(table, b1, b3, p)
    n3 = cmul(table, b2, b1, p)
    for k in range(m):
        out[3 + k] = (n1[k] - c1 * x1[k]) % p
        out[3 + m + k] = (n2[k] - c2 * x2[k]) % p
        out[3 + 2 * m + k] = (n3[k] - c3 * x3[k]) % p
    return out


@jit
def jmul(table, conjm, tvec, unit, X, Y, p):
    """Jordan product via the 3x3 Hermitian matrix model."""
    m = (X.shape[0] - 3) // 3
    inv2 = inv_mod(2, p)
    MX = np.zeros((3, 3, m), dtype=np.int64)
    MY = np.zeros((3, 3, m), dtype=np.int64)
    for src in range(2):
        Z = X if src == 0 else Y
        M = MX if src == 0 else MY
        z1 = Z[3 : 3 + m]
        z2 = Z[3 + m : 3 + 2 * m]
        z3 = Z[3 + 2 * m : 3 + 3 * m]
        for k in range(m):
            M[0, 0, k] = Z[0] * unit[k] % p
            M[1, 1, k] = Z[1] * unit[k] % p
            M[2, 2, k] = Z[2] * unit[k] % p
        M[0, 1] = z3
        M[1, 0] = cconj(conjm, z3, p)
        M[1, 2] = z1
        M[2, 1] = cconj(conjm, z1, p)
        M[2, 0] = z2
        M[0, 2] = cconj(conjm, z2, p)
    out = np.zeros(X.shape[0], dtype=np.int64)
    prod = np.zeros((3, 3, m), dtype=np.int64)
    for i in range(3):
        for j in range(3):
            acc = np.zeros(m, dtype=np.int64)
            for k in range(3):
                t1 = cmul(table, MX[i, k], MY[k, j], p)
                t2 = cmul(table, MY[i, k], MX[k, j], p)
                for u in range(m):
                    acc[u] = (acc[u] + t1[u] + t2[u]) % p
            for u in range(m):
                prod[i, j, u] = acc[u] * inv2 % p
    for i in range(3):
        out[i] = ctr(tvec, prod[i, i], p) * inv2 % p
    out[3 : 3 + m] = prod[1, 2]
    out[3 + m : 3 + 2 * m] = prod[2, 0]
    out[3 + 2 * m : 3 + 3 * m] = prod[0, 1]
    return out


@jit
def wsymp(jgram, v, w, p):
    L = (v.shape[0] - 2) // 2
    a, d = v[0], v[1 + 2 * L]
    a2, d2 = w[0], w[1 + 2 * L]
    s = a * d2 - d * a2
    s -= jpair(jgram, v[1 : 1 + L], w[1 + L : 1 + 2 * L], p)
    s += jpair(jgram, v[1 + L : 1 + 2 * L], w[1 : 1 + L], p)
    return s % p


@jit
def wq(table, conjm, gram, tvec, jgram, v, p):
    L = (v.shape[0] - 2) // 2
    a, d = v[0], v[1 + 2 * L]
    b = v[1 : 1 + L]
    c = v[1 + L : 1 + 2 * L]
    P = (a * d - jpair(jgram, b, c, p)) % p
    s = P * P
    s += 4 * a * jnorm(table, gram, tvec, c, p)
    s += 4 * d * jnorm(table, gram, tvec, b, p)
    bs = jsharp(table, conjm, gram, b, p)
    cs = jsharp(table, conjm, gram, c, p)
    s -= 4 * jpair(jgram, bs, cs, p)
    return s % p


@jit
def wflat(table, conjm, gram, tvec, jgram, v, p):
    L = (v.shape[0] - 2) // 2
    n = v.shape[0]
    a, d = v[0], v[1 + 2 * L]
    b = v[1 : 1 + L]
    c = v[1 + L : 1 + 2 * L]
    P = (a * d - jpair(jgram, b, c, p)) % p
    nb = jnorm(table, gram, tvec, b, p)
    nc = jnorm(table, gram, tvec, c, p)
    bs = jsharp(table, conjm, gram, b, p)
    cs = jsharp(table, conjm, gram, c, p)
    out = np.zeros(n, dtype=np.int64)
    out[0] = (-(a * P) - 2 * nb) % p
    out[n - 1] = (d * P + 2 * nc) % p
    # cross(X, Y) = sharp(X + Y) - sharp(X) - sharp(Y)
    cpbs = np.zeros(L, dtype=np.int64)
    bpcs = np.zeros(L, dtype=np.int64)
    for t in range(L):
        cpbs[t] = (c[t] + bs[t]) % p
        bpcs[t] = (b[t] + cs[t]) % p
    s1 = jsharp(table, conjm, gram, cpbs, p)
    s2 = jsharp(table, conjm, gram, bpcs, p)
    css = jsharp(table, conjm, gram, c, p)
    bss = jsharp(table, conjm, gram, b, p)
    sbs = jsharp(table, conjm, gram, bs, p)
    scs = jsharp(table, conjm, gram, cs, p)
    for t in range(L):
        cross_c_bs = (s1[t] - css[t] - sbs[t]) % p
        cross_b_cs = (s2[t] - bss[t] - scs[t]) % p
        out[1 + t] = (-2 * cross_c_bs + 2 * a * cs[t] - P * b[t]) % p
        out[1 + L + t] = (2 * cross_b_cs - 2 * d * bs[t] + P * c[t]) % p
    return out


@jit
def _is_zero(v):
    for t in range(v.shape[0]):
        if v[t] != 0:
            return False
    return True


@jit
def has_rank_le1_kernel(table, conjm, gram, tvec, jgram, v, p):
    """(v,v,w,w') = 0 for all w, w' symplectically orthogonal to v, with the
    4-linear values recovered from quartic differences."""
    n = v.shape[0]
    L = (n - 2) // 2
    phi = np.zeros(n, dtype=np.int64)
    b = v[1 : 1 + L]
    c = v[1 + L : 1 + 2 * L]
    phi[0] = (-v[1 + 2 * L]) % p
    for t in range(L):
        sb = 0
        sc = 0
        for u in range(L):
            g = jgram[t, u]
            if g != 0:
                sb += g * b[u]
                sc += g * c[u]
        phi[1 + t] = sc % p
        phi[1 + L + t] = (-sb) % p
    phi[n - 1] = v[0] % p
    piv = -1
    for j in range(n):
        if phi[j] != 0:
            piv = j
            break
    if piv < 0:
        # v is symplectically degenerate only when v = 0
        return True
    pinv = inv_mod(phi[piv], p)
    inv6 = inv_mod(6, p)
    inv2 = inv_mod(2, p)
    qv = wq(table, conjm, gram, tvec, jgram, v, p)
    # perp basis vectors w_j = e_j - phi_j * pinv * e_piv  (j != piv)
    idx = np.zeros(n - 1, dtype=np.int64)
    k = 0
    for j in range(n):
        if j != piv:
            idx[k] = j
            k += 1
    w = np.zeros(n, dtype=np.int64)
    tmp = np.zeros(n, dtype=np.int64)
    fvv = np.zeros(n - 1, dtype=np.int64)

    for ii in range(n - 1):
        j = idx[ii]
        for t in range(n):
            w[t] = 0
        w[j] = 1
        w[piv] = (w[piv] - phi[j] * pinv) % p
        fvv[ii] = _fvv_arrays(table, conjm, gram, tvec, jgram, v, w, qv, inv6, p)
        if fvv[ii] != 0:
            return False
    for ii in range(n - 1):
        j1 = idx[ii]
        for jj in range(ii + 1, n - 1):
            j2 = idx[jj]
            for t in range(n):
                w[t] = 0
            w[j1] = 1
            w[j2] = (w[j2] + 1) % p
            w[piv] = (w[piv] - (phi[j1] + phi[j2]) * pinv) % p
            fw = _fvv_arrays(table, conjm, gram, tvec, jgram, v, w, qv, inv6, p)
            if (fw - fvv[ii] - fvv[jj]) % p != 0:
                return False
    return True


@jit
def _fvv_arrays(table, conjm, gram, tvec, jgram, v, w, qv, inv6, p):
    n = v.shape[0]
    plus = np.zeros(n, dtype=np.int64)
    minus = np.zeros(n, dtype=np.int64)
    for t in range(n):
        plus[t] = (v[t] + w[t]) % p
        minus[t] = (v[t] - w[t]) % p
    qp = wq(table, conjm, gram, tvec, jgram, plus, p)
    qm = wq(table, conjm, gram, tvec, jgram, minus, p)
    qw = wq(table, conjm, gram, tvec, jgram, w, p)
    return (qp + qm - 2 * qv - 2 * qw) % p * inv6 % p


@jit
def wrank(table, conjm, gram, tvec, jgram, v, p):
    if _is_zero(v):
        return 0
    if wq(table, conjm, gram, tvec, jgram, v, p) != 0:
        return 4
    if not _is_zero(wflat(table, conjm, gram, tvec, jgram, v, p)):
        return 3
    if has_rank_le1_kernel(table, conjm, gram, tvec, jgram, v, p):
        return 1
    return 2


# -- scans --------------------------------------------------------------


@jit
def scan_jordan_ranks(table, conjm, gram, tvec, m, p, start, stop):
    """Rank counts over a block of J_C(F_p), plus an order-sensitive
    checksum for cross-run agreement."""
    L = 3 + 3 * m
    counts = np.zeros(4, dtype=np.int64)
    checksum = 0
    X = np.zeros(L, dtype=np.int64)
    for idx in range(start, stop):
        t = idx
        for k in range(L):
            X[k] = t % p
            t //= p
        if _is_zero(X):
            r = 0
        elif _is_zero(jsharp(table, conjm, gram, X, p)):
            r = 1
        elif jnorm(table, gram, tvec, X, p) == 0:
            r = 2
        else:
            r = 3
        counts[r] += 1
        checksum = (checksum * 31 + r + 1) % 2305843009213693951
    return counts, checksum


@jit
def scan_w_ranks(table, conjm, gram, tvec, jgram, m, p, start, stop):
    """Exhaustive rank counts over a block of W(F_p)."""
    L = 3 + 3 * m
    n = 2 + 2 * L
    counts = np.zeros(5, dtype=np.int64)
    checksum = 0
    v = np.zeros(n, dtype=np.int64)
    for idx in range(start, stop):
        t = idx
        for k in range(n):
            v[k] = t % p
            t //= p
        r = wrank(table, conjm, gram, tvec, jgram, v, p)
        counts[r] += 1
        checksum = (checksum * 31 + r + 1) % 2305843009213693951
    return counts, checksum


@jit
def sample_w_ranks(table, conjm, gram, tvec, jgram, samples, p):
    """Rank counts over pre-drawn sample vectors (rows of `samples`)."""
    N = samples.shape[0]
    counts = np.zeros(5, dtype=np.int64)
    for i in range(N):
        r = wrank(table, conjm, gram, tvec, jgram, samples[i], p)
        counts[r] += 1
    return counts


@jit
def scan_sextic(table, tvec, trace0, m, p, start, stop):
    """Check -4 det((1/2) Tr(x_i x_j)) = Tr(x1 x2 x3)^2 over a block of
    trace-zero triples; returns the number of failures."""
    k = trace0.shape[0]
    inv2 = inv_mod(2, p)
    fails = 0
    x1 = np.zeros(m, dtype=np.int64)
    x2 = np.zeros(m, dtype=np.int64)
    x3 = np.zeros(m, dtype=np.int64)
    S = np.zeros((3, 3), dtype=np.int64)
    for idx in range(start, stop):
        t = idx
        for u in range(m):
            x1[u] = 0
            x2[u] = 0
            x3[u] = 0
        for j in range(k):
            d = t % p
            t //= p
            for u in range(m):
                x1[u] = (x1[u] + d * trace0[j, u]) % p
        for j in range(k):
            d = t % p
            t //= p
            for u in range(m):
                x2[u] = (x2[u] + d * trace0[j, u]) % p
        for j in range(k):
            d = t % p
            t //= p
            for u in range(m):
                x3[u] = (x3[u] + d * trace0[j, u]) % p
        S[0, 0] = ctr(tvec, cmul(table, x1, x1, p), p)
        S[1, 1] = ctr(tvec, cmul(table, x2, x2, p), p)
        S[2, 2] = ctr(tvec, cmul(table, x3, x3, p), p)
        S[0, 1] = ctr(tvec, cmul(table, x1, x2, p), p)
        S[0, 2] = ctr(tvec, cmul(table, x1, x3, p), p)
        S[1, 2] = ctr(tvec, cmul(table, x2, x3, p), p)
        S[1, 0], S[2, 0], S[2, 1] = S[0, 1], S[0, 2], S[1, 2]
        detS = (
            S[0, 0] * (S[1, 1] * S[2, 2] - S[1, 2] * S[2, 1])
            - S[0, 1] * (S[1, 0] * S[2, 2] - S[1, 2] * S[2, 0])
            + S[0, 2] * (S[1, 0] * S[2, 1] - S[1, 1] * S[2, 0])
        ) % p
        # det of (1/2) S is det(S) / 8; the identity reads -4 det(S)/8 = d^2
        lhs = (-detS) % p * inv2 % p
        d3 = ctr(tvec, cmul(table, cmul(table, x1, x2, p), x3, p), p)
        if lhs != d3 * d3 % p:
            fails += 1
    return fails


@jit
def scan_fiber(table, tvec, trace0, m, p, Star, dtar):
    """Count trace-zero triples with Tr(x_i x_j) = Star and
    Tr(x1 x2 x3) = dtar; also return the first witness index (or -1)."""
    k = trace0.shape[0]
    total = 1
    for _ in range(3 * k):
        total *= p
    count = 0
    witness = np.int64(-1)
    x1 = np.zeros(m, dtype=np.int64)
    x2 = np.zeros(m, dtype=np.int64)
    x3 = np.zeros(m, dtype=np.int64)
    for idx in range(total):
        t = idx
        for u in range(m):
            x1[u] = 0
            x2[u] = 0
            x3[u] = 0
        for j in range(k):
            d = t % p
            t //= p
            for u in range(m):
                x1[u] = (x1[u] + d * trace0[j, u]) % p
        for j in range(k):
            d = t % p
            t //= p
            for u in range(m):
                x2[u] = (x2[u] + d * trace0[j, u]) % p
        for j in range(k):
            d = t % p
            t //= p
            for u in range(m):
                x3[u] = (x3[u] + d * trace0[j, u]) % p
        if ctr(tvec, cmul(table, x1, x1, p), p) != Star[0, 0]:
            continue
        if ctr(tvec, cmul(table, x1, x2, p), p) != Star[0, 1]:
            continue
        if ctr(tvec, cmul(table, x2, x2, p), p) != Star[1, 1]:
            continue
        if ctr(tvec, cmul(table, x1, x3, p), p) != Star[0, 2]:
            continue
        if ctr(tvec, cmul(table, x2, x3, p), p) != Star[1, 2]:
            continue
        if ctr(tvec, cmul(table, x3, x3, p), p) != Star[2, 2]:
            continue
        if ctr(tvec, cmul(table, cmul(table, x1, x2, p), x3, p), p) != dtar:
            continue
        count += 1
        if witness < 0:
            witness = idx
    return count, witness


@jit
def so3_order(cm, p):
    """|{g in GL_3(F_p) : g c g^T = c, det g = 1}| by row-by-row pruning."""
    count = 0
    r1 = np.zeros(3, dtype=np.int64)
    r2 = np.zeros(3, dtype=np.int64)
    r3 = np.zeros(3, dtype=np.int64)
    cr1 = np.zeros(3, dtype=np.int64)
    cr2 = np.zeros(3, dtype=np.int64)
    for a1 in range(p):
        r1[0] = a1
        for a2 in range(p):
            r1[1] = a2
            for a3 in range(p):
                r1[2] = a3
                for i in range(3):
                    cr1[i] = (
                        cm[i, 0] * r1[0] + cm[i, 1] * r1[1] + cm[i, 2] * r1[2]
                    ) % p
                if (r1[0] * cr1[0] + r1[1] * cr1[1] + r1[2] * cr1[2]) % p != cm[0, 0]:
                    continue
                for b1 in range(p):
                    r2[0] = b1
                    for b2 in range(p):
                        r2[1] = b2
                        for b3 in range(p):
                            r2[2] = b3
                            if (
                                r2[0] * cr1[0] + r2[1] * cr1[1] + r2[2] * cr1[2]
                            ) % p != cm[0, 1]:
                                continue
                            for i in range(3):
                                cr2[i] = (
                                    cm[i, 0] * r2[0]
                                    + cm[i, 1] * r2[1]
                                    + cm[i, 2] * r2[2]
                                ) % p
                            if (
                                r2[0] * cr2[0] + r2[1] * cr2[1] + r2[2] * cr2[2]
                            ) % p != cm[1, 1]:
                                continue
                            for c1 in range(p):
                                r3[0] = c1
                                for c2 in range(p):
                                    r3[1] = c2
                                    for c3 in range(p):
                                        r3[2] = c3
                                        if (
                                            r3[0] * cr1[0]
                                            + r3[1] * cr1[1]
                                            + r3[2] * cr1[2]
                                        ) % p != cm[0, 2]:
                                            continue
                                        if (
                                            r3[0] * cr2[0]
                                            + r3[1] * cr2[1]
                                            + r3[2] * cr2[2]
                                        ) % p != cm[1, 2]:
                                            continue
                                        s = 0
                                        for i in range(3):
                                            for j in range(3):
                                                s += r3[i] * cm[i, j] % p * r3[j]
                                        if s % p != cm[2, 2]:
                                            continue
                                        det = (
                                            r1[0] * (r2[1] * r3[2] - r2[2] * r3[1])
                                            - r1[1] * (r2[0] * r3[2] - r2[2] * r3[0])
                                            + r1[2] * (r2[0] * r3[1] - r2[1] * r3[0])
                                        ) % p
                                        if det == 1:
                                            count += 1
    return count


@jit
def scan_strip_sharp_zero(table, conjm, gram, trace0, m, p, out):
    """Indices of trace-zero strip triples beta with sharp(J(beta)) = 0.
    Writes into `out` (caller-allocated); returns the count (may exceed
    out.size, in which case the caller must retry with a bigger buffer)."""
    k = trace0.shape[0]
    L = 3 + 3 * m
    total = 1
    for _ in range(3 * k):
        total *= p
    X = np.zeros(L, dtype=np.int64)
    found = 0
    for idx in range(total):
        t = idx
        for u in range(L):
            X[u] = 0
        for slot in range(3):
            for j in range(k):
                d = t % p
                t //= p
                for u in range(m):
                    X[3 + slot * m + u] = (X[3 + slot * m + u] + d * trace0[j, u]) % p
        if _is_zero(jsharp(table, conjm, gram, X, p)):
            if found < out.shape[0]:
                out[found] = idx
            found += 1
    return found


@jit
def scan_rank0_pairs(table, conjm, gram, tvec, jgram, unit, strips, m, p, i_start, i_stop):
    """Count rank-1 elements (0, b, c, 0) with b drawn from rows
    [i_start, i_stop) of the packed Jordan strips and c from all rows.
    Pairs with b * c != 0 are pruned before the full intrinsic rank test."""
    K = strips.shape[0]
    L = 3 + 3 * m
    n = 2 + 2 * L
    count = 0
    pruned_in = 0
    v = np.zeros(n, dtype=np.int64)
    for i in range(i_start, i_stop):
        for j in range(K):
            prod = jmul(table, conjm, tvec, unit, strips[i], strips[j], p)
            if not _is_zero(prod):
                continue
            allz = True
            for t in range(L):
                if strips[i, t] != 0 or strips[j, t] != 0:
                    allz = False
                    break
            if allz:
                continue
            pruned_in += 1
            for t in range(n):
                v[t] = 0
            for t in range(L):
                v[1 + t] = strips[i, t]
                v[1 + L + t] = strips[j, t]
            if wrank(table, conjm, gram, tvec, jgram, v, p) == 1:
                count += 1
    return count, pruned_in


@jit
def scan_diag_slice(table, conjm, gram, tvec, jgram, m, p):
    """Exhaustive check on the diagonal slice (1, diag(u), diag(w), d):
    rank 1 holds iff w = u# (diagonal) and d = u1 u2 u3.  Returns
    (mismatches, number of rank-1 elements found)."""
    L = 3 + 3 * m
    n = 2 + 2 * L
    mism = 0
    nrank1 = 0
    v = np.zeros(n, dtype=np.int64)
    total = p ** 7
    for idx in range(total):
        t = idx
        u1 = t % p
        t //= p
        u2 = t % p
        t //= p
        u3 = t % p
        t //= p
        w1 = t % p
        t //= p
        w2 = t % p
        t //= p
        w3 = t % p
        t //= p
        d = t % p
        for k in range(n):
            v[k] = 0
        v[0] = 1
        v[1] = u1
        v[2] = u2
        v[3] = u3
        v[1 + L] = w1
        v[2 + L] = w2
        v[3 + L] = w3
        v[1 + 2 * L] = d
        expected = (
            w1 == u2 * u3 % p
            and w2 == u1 * u3 % p
            and w3 == u1 * u2 % p
            and d == u1 * u2 % p * u3 % p
        )
        got = wrank(table, conjm, gram, tvec, jgram, v, p) == 1
        if got:
            nrank1 += 1
        if got != expected:
            mism += 1
    return mism, nrank1
