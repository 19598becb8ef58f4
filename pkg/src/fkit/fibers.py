"""Restriction to the unarion Freudenthal space and its fibers.

The map F sends (a, b, c, d) over C to (a, f(b), f(c), d) over F, where f
keeps the diagonal and replaces each strip entry by half its trace.  The
rank-1 fiber over a normalized target (1, 0, c, d) is parametrized by
trace-zero triples x = (x1, x2, x3) subject to

    c = (1/2) Tr(x_i x_j)     and     d = Tr(x1 x2 x3),

which for dim C = 4 are tied together by the sextic identity
-4 det((1/2) Tr(x_i x_j)) = Tr(x1 x2 x3)^2.  The fiber over 0 consists of
pure tensors x (x) v with x nilpotent in the split quaternion algebra.
"""

from __future__ import annotations

import numpy as np

from . import freudenthal as fr
from . import jordan as jmod
from . import linalg, quadform
from .composition import AlgebraError, CompElem, construct
from .fields import PrimeField, QQ


def unarion_of(field):
    return construct("unarion", (), field)


def check_triple(x):
    """Validate a trace-zero triple (x1, x2, x3) in a common algebra."""
    if len(x) != 3:
        raise AlgebraError("need a triple (x1, x2, x3)")
    A = x[0].algebra
    for xi in x:
        if xi.algebra != A:
            raise AlgebraError("triple entries from different algebras")
        if not A.trace(xi).is_zero():
            raise AlgebraError("triple entries must have trace zero")
    return A


def F_map(w, target=None):
    """(a, b, c, d) -> (a, f(b), f(c), d) into the unarion space."""
    A = w.algebra
    if target is None:
        target = unarion_of(A.field)
    return fr.FreudenthalElem(
        w.a, jmod.f_map(w.b, target), jmod.f_map(w.c, target), w.d
    )


def embed_w(w, algebra):
    """Section of F_map: include the unarion space into W_C."""
    return fr.FreudenthalElem(
        w.a,
        jmod.embed_unarion(w.b, algebra),
        jmod.embed_unarion(w.c, algebra),
        w.d,
    )


def jordan_to_symmetric(X):
    """Unarion Jordan element -> literal symmetric 3x3 scalar matrix."""
    c1, c2, c3 = X.c
    x1, x2, x3 = (xi.coords[0] for xi in X.x)
    return [[c1, x3, x2], [x3, c2, x1], [x2, x1, c3]]


def symmetric_to_jordan(algebra, S):
    """Symmetric 3x3 scalar matrix -> unarion Jordan element."""
    c = (S[0][0], S[1][1], S[2][2])
    xs = tuple(CompElem(algebra, (v,)) for v in (S[1][2], S[2][0], S[0][1]))
    return jmod.JordanElem(algebra, c, xs)


class FiberTarget:
    """A normalized target (1, 0, c, d) in the unarion space, or 0.

    Stores the symmetric matrix of c and the scalar d; the rank-3 and
    rank-0 routines require the respective shapes."""

    def __init__(self, xi):
        if xi.algebra.dim != 1:
            raise AlgebraError("fiber target must live over the unarion algebra")
        self.xi = xi
        self.field = xi.field
        self.is_zero = xi.is_zero()
        if not self.is_zero:
            if xi.a != self.field.one or not xi.b.is_zero():
                raise AlgebraError("fiber target must be normalized to (1,0,c,d)")
        self.c = xi.c
        self.d = xi.d
        self.c_matrix = jordan_to_symmetric(xi.c)

    @staticmethod
    def from_symmetric(field, S, d):
        una = unarion_of(field)
        c = symmetric_to_jordan(una, [[field.scalar(v) for v in row] for row in S])
        return FiberTarget(
            fr.FreudenthalElem(field.one, jmod.JordanElem.zero_elem(una), c, d)
        )

    def c_rank(self):
        return linalg.rank([list(r) for r in self.c_matrix])


def gram_half(x):
    """The matrix (1/2) Tr(x_i x_j) of a trace-zero triple."""
    A = check_triple(x)
    field = A.field
    half = field.one / field.scalar(2)
    return [[half * A.trace(A.mul(x[i], x[j])) for j in range(3)] for i in range(3)]


def triple_product_trace(x):
    A = check_triple(x)
    return A.trace(A.mul(A.mul(x[0], x[1]), x[2]))


def rank1_lift(x):
    """(1, J(x), J(x)#, N(J(x))) — always a rank-1 element."""
    A = check_triple(x)
    b = jmod.JordanElem.strip(A, *x)
    return fr.special_rank1(b)


def fiber_membership(xi, x):
    """Does the trace-zero triple x lift xi = (1, 0, c, d)?"""
    if xi.is_zero:
        raise AlgebraError("membership needs a normalized (1,0,c,d) target")
    G = gram_half(x)
    for i in range(3):
        for j in range(3):
            if G[i][j] != xi.c_matrix[i][j]:
                return False
    return triple_product_trace(x) == xi.d


def sextic_check(x):
    """(lhs, rhs, equal) for -4 det((1/2)Tr(x_i x_j)) = Tr(x1 x2 x3)^2."""
    A = check_triple(x)
    if A.dim != 4:
        raise AlgebraError("the sextic identity is a dim-4 statement")
    field = A.field
    lhs = -(field.scalar(4) * linalg.det(field, gram_half(x)))
    d = triple_product_trace(x)
    return lhs, d * d, lhs == d * d


# -- finite-field fiber enumeration ------------------------------------


def _fiber_scan(xi, algebra):
    """(count, witness triple or None) by a compiled scan of (C^0)^3."""
    from .kernels import PackedAlgebra
    from .kernels import loops

    pk = PackedAlgebra(algebra)
    p = pk.p
    field = algebra.field
    two = field.scalar(2)
    Star = np.array(
        [[(two * xi.c_matrix[i][j]).v for j in range(3)] for i in range(3)],
        dtype=np.int64,
    )
    count, widx = loops.scan_fiber(pk.table, pk.tvec, pk.trace0, pk.m, p, Star, xi.d.v)
    witness = decode_triple(algebra, int(widx)) if widx >= 0 else None
    return int(count), witness


def decode_triple(algebra, idx):
    """Inverse of the scan's odometer indexing over (C^0)^3."""
    basis = algebra.trace0_basis()
    p = algebra.field.p
    out = []
    t = idx
    for _ in range(3):
        acc = algebra.zero
        for e in basis:
            d = t % p
            t //= p
            acc = acc + algebra.field.scalar(d) * e
        out.append(acc)
    return tuple(out)


def encode_triple(algebra, x):
    """Odometer index of a trace-zero triple (coordinates in trace0_basis)."""
    basis = algebra.trace0_basis()
    field = algebra.field
    p = field.p
    span = [e.coords for e in basis]
    M = [[span[j][i] for j in range(len(basis))] for i in range(algebra.dim)]
    idx = 0
    shift = 1
    for xi in x:
        sol = _solve_coords(field, M, list(xi.coords))
        for s in sol:
            idx += s.v * shift
            shift *= p
    return idx


def _solve_coords(field, M, rhs):
    rows = len(M)
    cols = len(M[0])
    aug = [[M[i][j] for j in range(cols)] + [rhs[i]] for i in range(rows)]
    piv = []
    r = 0
    for c in range(cols):
        sel = None
        for rr in range(r, rows):
            if not aug[rr][c].is_zero():
                sel = rr
                break
        if sel is None:
            continue
        aug[r], aug[sel] = aug[sel], aug[r]
        inv = aug[r][c].inv()
        aug[r] = [v * inv for v in aug[r]]
        for rr in range(rows):
            if rr != r and not aug[rr][c].is_zero():
                f = aug[rr][c]
                aug[rr] = [a - f * b for a, b in zip(aug[rr], aug[r])]
        piv.append(c)
        r += 1
    sol = [field.zero] * cols
    for k, c in enumerate(piv):
        sol[c] = aug[k][cols]
    return sol


def rank3_fiber_test(xi, algebra):
    """Decide whether the rank-1 fiber over (1, 0, c, d) with rank-3 c is
    nonempty: d^2 = -4 det(c) and c similar to the norm form on C^0.
    Over a finite field an explicit witness is found by scanning."""
    if algebra.dim != 4:
        raise AlgebraError("rank-3 fiber test needs dim C = 4")
    if xi.c_rank() != 3:
        raise AlgebraError("target c must have rank 3")
    field = xi.field
    det_c = linalg.det(field, [list(r) for r in xi.c_matrix])
    if xi.d * xi.d != -(field.scalar(4) * det_c):
        return {"status": "empty", "reason": "determinant condition fails"}
    cform = quadform.TernaryForm(field, xi.c_matrix)
    nform = quadform.norm_form_on_trace0(algebra)
    if not quadform.ternary_similar(cform, nform):
        return {"status": "empty", "reason": "form not similar to the C^0 norm form"}
    if isinstance(field, PrimeField):
        count, witness = _fiber_scan(xi, algebra)
        if count == 0:
            return {"status": "empty", "reason": "exhaustive scan found no witness"}
        return {"status": "nonempty", "witness": witness, "cardinality": count}
    return {"status": "nonempty", "witness": None, "cardinality": None}


def rank0_fiber_predicate(w):
    """Classify w against the fiber over 0: rank-1 elements there are pure
    tensors x (x) v with x^2 = 0 in the split quaternion algebra."""
    A = w.algebra
    if A.dim != 4:
        raise AlgebraError("rank-0 fiber predicate needs dim C = 4")
    nf = quadform.norm_form_on_trace0(A)
    # split check: the trace-zero norm form must be isotropic; over a finite
    # field every quaternion algebra is split.
    if A.field == QQ and not quadform.ternary_similar(
        nf, quadform.TernaryForm(A.field, [[1, 0, 0], [0, 1, 0], [0, 0, -1]])
    ):
        raise AlgebraError("rank-0 fiber predicate needs a split algebra")
    if not F_map(w).is_zero():
        return ("not-in-fiber", None, None)
    if fr.rank_w(w) != 1:
        return ("not-in-fiber", None, None)
    entries = list(w.b.x) + list(w.c.x)
    x = None
    for e in entries:
        if not e.is_zero():
            x = e
            break
    if x is None:  # pragma: no cover - rank 1 excludes w = 0
        return ("violation", w, "zero element reported rank 1")
    if not A.norm(x).is_zero():
        return ("violation", w, "direction is not nilpotent")
    v = []
    for e in entries:
        lam = _proportionality(A, x, e)
        if lam is None:
            return ("violation", w, "strip entries are not proportional")
        v.append(lam)
    return ("pure-tensor", x, tuple(v))


def _proportionality(A, x, e):
    """lam with e = lam * x, or None."""
    field = A.field
    piv = None
    for i, c in enumerate(x.coords):
        if not c.is_zero():
            piv = i
            break
    if piv is None:
        return None
    lam = e.coords[piv] / x.coords[piv]
    if e == lam * x:
        return lam
    return None


def quadratic_fiber_test(xi, algebra):
    """Fiber conditions for dim C = 2: nonempty only if d = 0 and
    c = -n(u) t t^T for the trace-zero direction u; returns the witness
    triples t * u (enumerated over finite fields, constructed over Q)."""
    if algebra.dim != 2:
        raise AlgebraError("quadratic fiber test needs dim C = 2")
    field = xi.field
    if not xi.d.is_zero():
        return {"status": "empty", "reason": "d must vanish", "witnesses": []}
    u = algebra.trace0_basis()[0]
    nu = algebra.norm(u)
    if isinstance(field, PrimeField):
        witnesses = []
        p = field.p
        for idx in range(p**3):
            t = idx
            ts = []
            for _ in range(3):
                ts.append(field.scalar(t % p))
                t //= p
            ok = True
            for i in range(3):
                for j in range(3):
                    if -(nu * ts[i] * ts[j]) != xi.c_matrix[i][j]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                witnesses.append(tuple(ti * u for ti in ts))
        status = "nonempty" if witnesses else "empty"
        return {"status": status, "witnesses": witnesses}
    # over Q: c must be -n(u) t t^T; factor the rank <= 1 matrix
    C = xi.c_matrix
    if all(C[i][j].is_zero() for i in range(3) for j in range(3)):
        z = algebra.zero
        return {"status": "nonempty", "witnesses": [(z, z, z)]}
    if linalg.rank([list(r) for r in C]) > 1:
        return {"status": "empty", "reason": "c has rank > 1", "witnesses": []}
    piv = None
    for i in range(3):
        if not C[i][i].is_zero():
            piv = i
            break
    if piv is None:
        return {"status": "empty", "reason": "rank-1 with zero diagonal is impossible for t t^T", "witnesses": []}
    # t_piv^2 = -C[piv][piv]/n(u); solvable iff that is a rational square
    val = -(C[piv][piv] / nu)
    if not val.is_square():
        return {"status": "empty", "reason": "scale is not a square", "witnesses": []}
    tpiv = _rational_sqrt(field, val)
    ts = [C[piv][j] / (-(nu * tpiv)) for j in range(3)]
    ok = all(
        -(nu * ts[i] * ts[j]) == C[i][j] for i in range(3) for j in range(3)
    )
    if not ok:
        return {"status": "empty", "reason": "c is not of the form -n(u) t t^T", "witnesses": []}
    return {"status": "nonempty", "witnesses": [tuple(ti * u for ti in ts)]}


def _rational_sqrt(field, s):
    import math
    from fractions import Fraction

    fr_ = Fraction(str(s))
    return field.scalar(Fraction(math.isqrt(fr_.numerator), math.isqrt(fr_.denominator)))


def nilpotent_pair_oracle(field):
    """Exhaustive check over 2x2 matrices: beta^2 = gamma^2 = 0 and
    beta gamma + gamma beta = 0 force beta, gamma proportional."""
    if not isinstance(field, PrimeField):
        raise AlgebraError("the oracle enumerates a finite field")
    p = field.p
    nil = []
    for a in range(p):
        for b in range(p):
            for c in range(p):
                for d in range(p):
                    # beta^2 = (a+d) beta - (ad - bc) I; nilpotent iff
                    # trace and determinant vanish
                    if (a + d) % p == 0 and (a * d - b * c) % p == 0:
                        nil.append((a, b, c, d))
    counterexamples = []
    checked = 0
    for B in nil:
        for G in nil:
            s = 0
            # (BG + GB) entries
            bg = _mat2_mul(B, G, p)
            gb = _mat2_mul(G, B, p)
            if any((bg[i] + gb[i]) % p for i in range(4)):
                continue
            checked += 1
            if not _proportional4(B, G, p):
                counterexamples.append((B, G))
    return {
        "nilpotents": len(nil),
        "anticommuting_pairs": checked,
        "counterexamples": counterexamples,
    }


def _mat2_mul(X, Y, p):
    a, b, c, d = X
    e, f, g, h = Y
    return (
        (a * e + b * g) % p,
        (a * f + b * h) % p,
        (c * e + d * g) % p,
        (c * f + d * h) % p,
    )


def _proportional4(X, Y, p):
    if all(v % p == 0 for v in X) or all(v % p == 0 for v in Y):
        return True
    for i in range(4):
        for j in range(4):
            if (X[i] * Y[j] - X[j] * Y[i]) % p:
                return False
    return True
