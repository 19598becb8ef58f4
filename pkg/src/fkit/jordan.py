"""The cubic Jordan algebra of 3x3 Hermitian matrices over a composition
algebra: Jordan product, cubic norm, trace pairing, trilinear form, sharp
map, cross product, rank, and the Aut(C) x GL_3 action.

An element is stored as (c1, c2, c3, x1, x2, x3) for the Hermitian matrix

    [ c1       x3   conj(x2) ]
    [ conj(x3) c2   x1       ]
    [ x2  conj(x1)  c3       ]

The Jordan product is computed from the literal matrix expansion (not from
an abstract cubic-norm recovery) so that the dense matrix model provides an
independent oracle path when C is associative.
"""

from __future__ import annotations

from . import linalg
from .composition import AlgebraError, CompElem
from .fields import Scalar


class JordanElem:
    __slots__ = ("algebra", "c", "x")

    def __init__(self, algebra, c, x):
        if len(c) != 3 or len(x) != 3:
            raise AlgebraError("need 3 diagonal scalars and 3 strip elements")
        self.algebra = algebra
        self.c = tuple(algebra.field.scalar(ci) for ci in c)
        self.x = tuple(x)
        for xi in self.x:
            if xi.algebra != algebra:
                raise AlgebraError("strip element from a different algebra")

    # -- vector-space structure ---------------------------------------

    def __add__(self, other):
        self._check(other)
        return JordanElem(
            self.algebra,
            [a + b for a, b in zip(self.c, other.c)],
            [a + b for a, b in zip(self.x, other.x)],
        )

    def __sub__(self, other):
        self._check(other)
        return JordanElem(
            self.algebra,
            [a - b for a, b in zip(self.c, other.c)],
            [a - b for a, b in zip(self.x, other.x)],
        )

    def __neg__(self):
        return JordanElem(self.algebra, [-a for a in self.c], [-a for a in self.x])

    def __rmul__(self, s):
        if isinstance(s, (Scalar, int)):
            return JordanElem(self.algebra, [s * a for a in self.c], [s * a for a in self.x])
        return NotImplemented

    def _check(self, other):
        if self.algebra != other.algebra:
            raise AlgebraError("elements over different algebras")

    def is_zero(self):
        return all(a.is_zero() for a in self.c) and all(a.is_zero() for a in self.x)

    def __eq__(self, other):
        if not isinstance(other, JordanElem):
            return NotImplemented
        return self.algebra == other.algebra and self.c == other.c and self.x == other.x

    def __hash__(self):
        return hash((self.algebra, self.c, self.x))

    def __repr__(self):
        return f"JordanElem(c={[str(a) for a in self.c]}, x={list(self.x)})"

    # -- convenience constructors -------------------------------------

    @staticmethod
    def diag(algebra, c1, c2, c3):
        z = algebra.zero
        return JordanElem(algebra, (c1, c2, c3), (z, z, z))

    @staticmethod
    def strip(algebra, x1, x2, x3):
        """J(x): zero diagonal, off-diagonal strip (x1, x2, x3)."""
        f = algebra.field
        return JordanElem(algebra, (f.zero, f.zero, f.zero), (x1, x2, x3))

    @staticmethod
    def zero_elem(algebra):
        z = algebra.zero
        f = algebra.field
        return JordanElem(algebra, (f.zero, f.zero, f.zero), (z, z, z))

    @staticmethod
    def identity(algebra):
        z = algebra.zero
        f = algebra.field
        return JordanElem(algebra, (f.one, f.one, f.one), (z, z, z))

    @staticmethod
    def random(algebra, rng):
        f = algebra.field
        return JordanElem(
            algebra,
            [f.random(rng) for _ in range(3)],
            [algebra.random(rng) for _ in range(3)],
        )

    # -- matrix model ---------------------------------------------------

    def as_matrix(self):
        A = self.algebra
        c1, c2, c3 = self.c
        x1, x2, x3 = self.x
        u = A.unit
        return [
            [c1 * u, x3, x2.conj()],
            [x3.conj(), c2 * u, x1],
            [x2, x1.conj(), c3 * u],
        ]

    @staticmethod
    def from_matrix(algebra, M):
        """Read back (c, x) from a Hermitian matrix with scalar diagonal."""
        half = algebra.field.one / algebra.field.scalar(2)
        c = [half * algebra.trace(M[i][i]) for i in range(3)]
        return JordanElem(algebra, c, (M[1][2], M[2][0], M[0][1]))


def dim_jordan(algebra):
    return 3 + 3 * algebra.dim


def jordan_mul(X, Y):
    """A * B = (AB + BA)/2 via the literal 3x3 matrix expansion."""
    X._check(Y)
    A = X.algebra
    MX, MY = X.as_matrix(), Y.as_matrix()
    half = A.field.one / A.field.scalar(2)
    out = []
    for i in range(3):
        row = []
        for j in range(3):
            s = A.zero
            for k in range(3):
                s = s + MX[i][k] * MY[k][j] + MY[i][k] * MX[k][j]
            row.append(half * s)
        out.append(row)
    return JordanElem.from_matrix(A, out)


def norm_N(X):
    """Cubic norm c1 c2 c3 - sum c_i n(x_i) + Tr(x1 x2 x3)."""
    c1, c2, c3 = X.c
    x1, x2, x3 = X.x
    A = X.algebra
    return (
        c1 * c2 * c3
        - c1 * A.norm(x1)
        - c2 * A.norm(x2)
        - c3 * A.norm(x3)
        + A.trace(A.mul(A.mul(x1, x2), x3))
    )


def trace(X):
    return X.c[0] + X.c[1] + X.c[2]


def trace_pairing(X, Y):
    """<X, Y> = Tr(X * Y)."""
    return trace(jordan_mul(X, Y))


def trilinear(X, Y, Z):
    """Full polarization of N, normalized so (X,X,X) = 6 N(X)."""
    return (
        norm_N(X + Y + Z)
        - norm_N(X + Y)
        - norm_N(X + Z)
        - norm_N(Y + Z)
        + norm_N(X)
        + norm_N(Y)
        + norm_N(Z)
    )


def sharp(X):
    """The quadratic adjoint, satisfying sharp(sharp(X)) = N(X) X."""
    A = X.algebra
    c1, c2, c3 = X.c
    x1, x2, x3 = X.x
    nc = [c2 * c3 - A.norm(x1), c1 * c3 - A.norm(x2), c1 * c2 - A.norm(x3)]
    nx1 = A.mul(x3.conj(), x2.conj()) - c1 * x1
    nx2 = A.mul(x1.conj(), x3.conj()) - c2 * x2
    nx3 = A.mul(x2.conj(), x1.conj()) - c3 * x3
    return JordanElem(A, nc, (nx1, nx2, nx3))


def cross(X, Y):
    """X x Y = (X+Y)# - X# - Y#; dual to the trilinear form."""
    return sharp(X + Y) - sharp(X) - sharp(Y)


def rank_jordan(X):
    """Exact rank in {0,1,2,3}, testing conditions from strongest to weakest."""
    if X.is_zero():
        return 0
    if sharp(X).is_zero():
        return 1
    if norm_N(X).is_zero():
        return 2
    return 3


# -- the projection f and the J_F / J_{C0} decomposition ---------------


def f_map(X, target=None):
    """Project onto the unarion Jordan algebra: x_j -> Tr_C(x_j)/2."""
    from .composition import construct

    A = X.algebra
    if target is None:
        target = construct("unarion", (), A.field)
    half = A.field.one / A.field.scalar(2)
    xs = [CompElem(target, (half * A.trace(xi),)) for xi in X.x]
    return JordanElem(target, X.c, xs)


def embed_unarion(X, algebra):
    """Include the unarion Jordan algebra into J_C (x_j -> x_j * unit)."""
    xs = [xi.coords[0] * algebra.unit for xi in X.x]
    return JordanElem(algebra, X.c, xs)


def strip_part(X):
    """The J_{C0} component: kill the diagonal and the unit-direction of
    each strip entry (valid since x = f(x)*unit + trace-zero part)."""
    A = X.algebra
    f = A.field
    half = f.one / f.scalar(2)
    xs = [xi - (half * A.trace(xi)) * A.unit for xi in X.x]
    return JordanElem(A, (f.zero, f.zero, f.zero), xs)


# -- the Aut(C) x GL_3 action ------------------------------------------


def act(g, h, X, check_automorphism=True):
    """(g, h) acts by det(h) (h^{-1})^T (gX) h^{-1}; similitude det(h)."""
    A = X.algebra
    field = A.field
    if check_automorphism and not A.is_automorphism(g):
        raise AlgebraError("g is not an automorphism of the algebra")
    hinv = linalg.inverse(field, h)
    dh = linalg.det(field, h)
    gX = JordanElem(A, X.c, [A.apply_matrix(g, xi) for xi in X.x])
    M = gX.as_matrix()
    # scalar matrices commute with C entries, so matrix products are fine
    out = [[A.zero for _ in range(3)] for _ in range(3)]
    for i in range(3):
        for j in range(3):
            s = A.zero
            for k in range(3):
                for l in range(3):
                    s = s + (hinv[k][i] * hinv[l][j]) * M[k][l]
            out[i][j] = dh * s
    return JordanElem.from_matrix(A, out)


def jordan_basis(algebra):
    """Basis of J_C: three diagonal units then strip basis vectors."""
    f = algebra.field
    z = algebra.zero
    out = []
    for i in range(3):
        c = [f.zero] * 3
        c[i] = f.one
        out.append(JordanElem(algebra, c, (z, z, z)))
    for slot in range(3):
        for e in algebra.basis():
            xs = [z, z, z]
            xs[slot] = e
            out.append(JordanElem(algebra, (f.zero, f.zero, f.zero), tuple(xs)))
    return out


def coords_of(X):
    """Coordinates of X in the jordan_basis order."""
    out = list(X.c)
    for xi in X.x:
        out.extend(xi.coords)
    return out


def from_coords(algebra, coords):
    m = algebra.dim
    c = coords[:3]
    xs = [CompElem(algebra, coords[3 + k * m : 3 + (k + 1) * m]) for k in range(3)]
    return JordanElem(algebra, c, xs)


def matrix_of_act(g, h, algebra):
    """Matrix of act(g, h, .) in the jordan_basis coordinates."""
    basis = jordan_basis(algebra)
    cols = [coords_of(act(g, h, B, check_automorphism=False)) for B in basis]
    n = len(basis)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def trace_form_gram(algebra):
    """Gram matrix of the trace pairing in jordan_basis coordinates."""
    basis = jordan_basis(algebra)
    n = len(basis)
    return [[trace_pairing(basis[i], basis[j]) for j in range(n)] for i in range(n)]
