"""Composition algebras of dimension 1, 2, 4, 8 as structure-constant
algebras.

An algebra stores a multiplication table ``table[i][j]`` = coordinate vector
of e_i * e_j, a conjugation matrix, the unit vector, the trace functional and
the Gram matrix of the norm form.  Division and split forms share this single
code path; quaternions and octonions are produced by Cayley-Dickson doubling.
``matrix2x2`` is a distinguished isomorph of the split quaternions with its
own basis (matrix units) so examples read naturally.
"""

from __future__ import annotations

from .fields import FieldError, FieldMismatchError, Scalar

TAGS = (
    "unarion",
    "binarion-split",
    "binarion-quadratic",
    "quaternion",
    "matrix2x2",
    "octonion",
    "octonion-split",
)


class AlgebraError(ValueError):
    pass


class CompElem:
    """An element of a composition algebra: a coordinate vector."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        if len(coords) != algebra.dim:
            raise AlgebraError(f"expected {algebra.dim} coordinates, got {len(coords)}")
        self.algebra = algebra
        self.coords = tuple(coords)

    def _check(self, other):
        if self.algebra is not other.algebra and self.algebra != other.algebra:
            raise AlgebraError("elements of different algebras")

    def __add__(self, other):
        self._check(other)
        return CompElem(self.algebra, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return CompElem(self.algebra, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return CompElem(self.algebra, [-a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, CompElem):
            self._check(other)
            return self.algebra.mul(self, other)
        return CompElem(self.algebra, [other * a for a in self.coords])

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return CompElem(self.algebra, [other * a for a in self.coords])
        return NotImplemented

    def conj(self):
        return self.algebra.conj(self)

    def trace(self):
        return self.algebra.trace(self)

    def norm(self):
        return self.algebra.norm(self)

    def is_zero(self):
        return all(a.is_zero() for a in self.coords)

    def __eq__(self, other):
        if not isinstance(other, CompElem):
            return NotImplemented
        return self.algebra == other.algebra and self.coords == other.coords

    def __hash__(self):
        return hash((self.algebra, self.coords))

    def __repr__(self):
        return f"CompElem({[str(c) for c in self.coords]})"


class CompositionAlgebra:
    def __init__(self, field, tag, params, labels, table, conj_mat, unit_coords):
        self.field = field
        self.tag = tag
        self.params = tuple(params)
        self.dim = len(labels)
        self.labels = tuple(labels)
        self.table = table  # table[i][j] = tuple of Scalars
        self.conj_mat = conj_mat  # conj(e_i) = sum_j conj_mat[i][j] e_j
        self.unit_coords = tuple(unit_coords)
        self._trace_vec = None
        self._gram = None

    # -- construction -------------------------------------------------

    def element(self, coords):
        return CompElem(self, [self.field.scalar(c) for c in coords])

    @property
    def unit(self):
        return CompElem(self, self.unit_coords)

    @property
    def zero(self):
        return CompElem(self, [self.field.zero] * self.dim)

    def basis(self):
        z, one = self.field.zero, self.field.one
        out = []
        for i in range(self.dim):
            coords = [z] * self.dim
            coords[i] = one
            out.append(CompElem(self, coords))
        return out

    # -- the algebra operations --------------------------------------

    def mul(self, x, y):
        z = self.field.zero
        out = [z] * self.dim
        for i, xi in enumerate(x.coords):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y.coords):
                if yj.is_zero():
                    continue
                f = xi * yj
                row = self.table[i][j]
                for k in range(self.dim):
                    if not row[k].is_zero():
                        out[k] = out[k] + f * row[k]
        return CompElem(self, out)

    def conj(self, x):
        z = self.field.zero
        out = [z] * self.dim
        for i, xi in enumerate(x.coords):
            if xi.is_zero():
                continue
            row = self.conj_mat[i]
            for k in range(self.dim):
                if not row[k].is_zero():
                    out[k] = out[k] + xi * row[k]
        return CompElem(self, out)

    def trace_vec(self):
        if self._trace_vec is None:
            # Tr(e_i) as the unit-coefficient of e_i + conj(e_i); valid since
            # e + ebar lands in F*unit for every construction here.
            vec = []
            for i, e in enumerate(self.basis()):
                s = e + self.conj(e)
                vec.append(self._unit_coefficient(s))
            self._trace_vec = tuple(vec)
        return self._trace_vec

    def _unit_coefficient(self, x):
        # x is assumed to lie on the line F*unit; extract the coefficient.
        for k, u in enumerate(self.unit_coords):
            if not u.is_zero():
                return x.coords[k] / u
        raise AssertionError("unit vector is zero")

    def trace(self, x):
        t = self.field.zero
        for xi, ti in zip(x.coords, self.trace_vec()):
            if not (xi.is_zero() or ti.is_zero()):
                t = t + xi * ti
        return t

    def norm(self, x):
        # n(x) * unit = x * conj(x)
        prod = self.mul(x, self.conj(x))
        return self._unit_coefficient(prod)

    def gram(self):
        """Symmetric Gram matrix G with n(x) = x^T G x (char != 2)."""
        if self._gram is None:
            basis = self.basis()
            half = self.field.one / self.field.scalar(2)
            norms = [self.norm(e) for e in basis]
            G = []
            for i in range(self.dim):
                row = []
                for j in range(self.dim):
                    if i == j:
                        row.append(norms[i])
                    else:
                        b = self.norm(basis[i] + basis[j]) - norms[i] - norms[j]
                        row.append(half * b)
                G.append(tuple(row))
            self._gram = tuple(G)
        return self._gram

    def bilinear(self, x, y):
        """B(x,y) = n(x+y) - n(x) - n(y)."""
        G = self.gram()
        s = self.field.zero
        for i, xi in enumerate(x.coords):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y.coords):
                if yj.is_zero() or G[i][j].is_zero():
                    continue
                s = s + xi * G[i][j] * yj
        return s + s

    def trace0_basis(self):
        """A basis of the trace-zero subspace C^0 (dim-1 elements)."""
        if self.dim == 1:
            return []
        tvec = self.trace_vec()
        basis = self.basis()
        # the constructions below always have Tr(unit-like e_0) != 0 and the
        # remaining basis vectors of trace 0, except binarion-split; handle
        # generically by eliminating against one basis vector of nonzero trace.
        piv = None
        for i, t in enumerate(tvec):
            if not t.is_zero():
                piv = i
                break
        out = []
        for i in range(self.dim):
            if i == piv:
                continue
            e = basis[i]
            if tvec[i].is_zero():
                out.append(e)
            else:
                out.append(e - (tvec[i] / tvec[piv]) * basis[piv])
        return out

    def random(self, rng):
        return CompElem(self, [self.field.random(rng) for _ in range(self.dim)])

    def enumerate_elements(self):
        if not self.field.is_finite():
            raise FieldError("cannot enumerate elements over an infinite field")
        return self._enum(self.dim)

    def _enum(self, k):
        if k == 0:
            yield []
            return
        for rest in self._enum(k - 1):
            for s in self.field.elements():
                yield rest + [s]

    def span_elements(self, vecs):
        """All F-linear combinations of the given elements (finite field)."""
        if not self.field.is_finite():
            raise FieldError("cannot enumerate over an infinite field")

        def rec(i, acc):
            if i == len(vecs):
                yield acc
                return
            for s in self.field.elements():
                yield from rec(i + 1, acc + s * vecs[i])

        yield from rec(0, self.zero)

    # -- automorphisms ------------------------------------------------

    def is_automorphism(self, g):
        """Check g (a dim x dim Scalar matrix) fixes the unit and preserves
        the multiplication table on all basis pairs."""
        from . import linalg

        basis = self.basis()

        def apply(x):
            cols = linalg.matvec(g, list(x.coords))
            return CompElem(self, cols)

        if apply(self.unit) != self.unit:
            return False
        for ei in basis:
            for ej in basis:
                if apply(self.mul(ei, ej)) != self.mul(apply(ei), apply(ej)):
                    return False
        return True

    def apply_matrix(self, g, x):
        from . import linalg

        return CompElem(self, linalg.matvec(g, list(x.coords)))

    def matrix_of(self, fn):
        """Matrix (columns = images of basis vectors) of a linear map."""
        cols = [fn(e).coords for e in self.basis()]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def inner_automorphism(self, u):
        """x -> u x u^{-1} for u with n(u) != 0 (associative algebras only)."""
        nu = self.norm(u)
        if nu.is_zero():
            raise AlgebraError("u is not invertible")
        uinv = (self.field.one / nu) * self.conj(u)
        return self.matrix_of(lambda x: self.mul(self.mul(u, x), uinv))

    def doubling_sign_automorphisms(self):
        """Diagonal sign automorphisms: negating the top half of any
        Cayley-Dickson doubling level is always an automorphism."""
        from . import linalg

        outs = []
        if self.tag in ("binarion-quadratic", "quaternion", "octonion", "octonion-split"):
            half = self.dim
            while half >= 2:
                g = linalg.identity(self.field, self.dim)
                # negate coordinates whose index has the (log2 half - 1) bit set
                for i in range(self.dim):
                    if i % half >= half // 2:
                        g[i][i] = -g[i][i]
                outs.append(g)
                half //= 2
        elif self.tag in ("binarion-split",):
            # the swap (conjugation) map
            z, one = self.field.zero, self.field.one
            outs.append([[z, one], [one, z]])
        return outs

    def sample_automorphisms(self, rng, count):
        """A list of verified automorphism matrices (identity included)."""
        from . import linalg

        pool = [linalg.identity(self.field, self.dim)]
        pool.extend(self.doubling_sign_automorphisms())
        if self.tag in ("quaternion", "matrix2x2"):
            tries = 0
            while len(pool) < count + 1 and tries < 20 * count:
                u = self.random(rng)
                tries += 1
                if not self.norm(u).is_zero():
                    pool.append(self.inner_automorphism(u))
        if self.tag in ("octonion", "octonion-split"):
            # componentwise inner automorphisms of the quaternion subalgebra
            sub = construct("quaternion", self.params[:2], self.field)
            tries = 0
            while len(pool) < count + 1 and tries < 20 * count:
                u = sub.random(rng)
                tries += 1
                if sub.norm(u).is_zero():
                    continue
                gq = sub.inner_automorphism(u)
                z = self.field.zero
                g = [[z] * self.dim for _ in range(self.dim)]
                for i in range(4):
                    for j in range(4):
                        g[i][j] = gq[i][j]
                        g[4 + i][4 + j] = gq[i][j]
                pool.append(g)
        out = []
        while len(out) < count:
            g = pool[rng.randrange(len(pool))]
            if len(pool) > 1 and rng.random() < 0.5:
                from . import linalg as la

                h = pool[rng.randrange(len(pool))]
                g = la.matmul(g, h)
            out.append(g)
        return out

    def __eq__(self, other):
        if not isinstance(other, CompositionAlgebra):
            return NotImplemented
        return (
            self.field == other.field
            and self.tag == other.tag
            and self.params == other.params
        )

    def __hash__(self):
        return hash((self.field, self.tag, self.params))

    def __repr__(self):
        p = ",".join(str(x) for x in self.params)
        return f"CompositionAlgebra({self.tag}({p}) over {self.field.short()})"


# -- constructors -----------------------------------------------------


def _unarion(field):
    one = field.one
    return CompositionAlgebra(
        field, "unarion", (), ("1",), ((((one,),),)), ((one,),), (one,)
    )


def _binarion_split(field):
    z, one = field.zero, field.one
    e1, e2 = (one, z), (z, one)
    zz = (z, z)
    table = ((e1, zz), (zz, e2))
    conj = ((z, one), (one, z))  # conj swaps the idempotents
    return CompositionAlgebra(
        field, "binarion-split", (), ("e1", "e2"), table, conj, (one, one)
    )


def _matrix2x2(field):
    z, one = field.zero, field.one

    def vec(a, b, c, d):
        return (field.scalar(a), field.scalar(b), field.scalar(c), field.scalar(d))

    # basis E11, E12, E21, E22
    mats = {0: (0, 0), 1: (0, 1), 2: (1, 0), 3: (1, 1)}
    table = []
    for i in range(4):
        row = []
        ri, ci = mats[i]
        for j in range(4):
            rj, cj = mats[j]
            out = [0, 0, 0, 0]
            if ci == rj:
                for k in range(4):
                    if mats[k] == (ri, cj):
                        out[k] = 1
            row.append(vec(*out))
        table.append(tuple(row))
    # adjugate: [[a,b],[c,d]] -> [[d,-b],[-c,a]]
    conj = (vec(0, 0, 0, 1), vec(0, -1, 0, 0), vec(0, 0, -1, 0), vec(1, 0, 0, 0))
    return CompositionAlgebra(
        field,
        "matrix2x2",
        (),
        ("E11", "E12", "E21", "E22"),
        tuple(table),
        conj,
        (one, z, z, one),
    )


def _cayley_dickson(A, gamma):
    """Double A with parameter gamma: (a,b)(c,d) = (ac + gamma*d*bbar, abar*d + c*b)."""
    field = A.field
    m = A.dim
    dim = 2 * m
    z = field.zero

    def embed(pos, coords):
        out = [z] * dim
        for k, c in enumerate(coords):
            out[pos * m + k] = c
        return out

    basis = A.basis()
    table = []
    for i in range(dim):
        hi, ii = divmod(i, m)
        row = []
        for j in range(dim):
            hj, jj = divmod(j, m)
            a = basis[ii] if hi == 0 else A.zero
            b = basis[ii] if hi == 1 else A.zero
            c = basis[jj] if hj == 0 else A.zero
            d = basis[jj] if hj == 1 else A.zero
            first = A.mul(a, c) + gamma * A.mul(d, A.conj(b))
            second = A.mul(A.conj(a), d) + A.mul(c, b)
            row.append(tuple(embed(0, first.coords)[:m] + embed(1, second.coords)[m:]))
        table.append(tuple(row))
    conj = []
    for i in range(dim):
        hi, ii = divmod(i, m)
        cc = A.conj(basis[ii])
        if hi == 0:
            conj.append(tuple(embed(0, cc.coords)))
        else:
            neg = [-x for x in basis[ii].coords]
            conj.append(tuple(embed(1, neg)))
    labels = tuple(A.labels) + tuple(f"l{lab}" for lab in A.labels)
    unit = tuple(embed(0, A.unit.coords))
    return table, tuple(conj), labels, unit


def _quaternion(field, a, b):
    # basis 1, i, j, k with i^2=a, j^2=b, k=ij, k^2=-ab
    a = field.scalar(a)
    b = field.scalar(b)
    z, one = field.zero, field.one

    def vec(c0, c1, c2, c3):
        return (c0, c1, c2, c3)

    ab = a * b
    table = (
        (vec(one, z, z, z), vec(z, one, z, z), vec(z, z, one, z), vec(z, z, z, one)),
        (vec(z, one, z, z), vec(a, z, z, z), vec(z, z, z, one), vec(z, z, a, z)),
        (vec(z, z, one, z), vec(z, z, z, -one), vec(b, z, z, z), vec(z, -b, z, z)),
        (vec(z, z, z, one), vec(z, z, -a, z), vec(z, b, z, z), vec(-ab, z, z, z)),
    )
    conj = (
        vec(one, z, z, z),
        vec(z, -one, z, z),
        vec(z, z, -one, z),
        vec(z, z, z, -one),
    )
    return CompositionAlgebra(
        field, "quaternion", (a, b), ("1", "i", "j", "k"), table, conj, (one, z, z, z)
    )


def construct(tag, params, field):
    """Build a composition algebra; see TAGS for recognized tags."""
    if field.char != 0 and field.char < 5:
        raise FieldError("composition algebras require char 0 or char >= 5")
    params = tuple(field.scalar(p) for p in params)
    if tag == "unarion":
        return _unarion(field)
    if tag == "binarion-split":
        return _binarion_split(field)
    if tag == "binarion-quadratic":
        (eps,) = params
        if eps.is_zero() or eps.is_square():
            raise AlgebraError(f"eps = {eps} must be a nonzero nonsquare")
        A = _unarion(field)
        table, conj, labels, unit = _cayley_dickson(A, eps)
        return CompositionAlgebra(
            field, "binarion-quadratic", (eps,), ("1", "s"), table, conj, unit
        )
    if tag == "quaternion":
        a, b = params
        if a.is_zero() or b.is_zero():
            raise AlgebraError("quaternion parameters must be nonzero")
        return _quaternion(field, a, b)
    if tag == "matrix2x2":
        return _matrix2x2(field)
    if tag in ("octonion", "octonion-split"):
        if tag == "octonion-split":
            params = (field.one, field.one, field.one)
        a, b, c = params
        if a.is_zero() or b.is_zero() or c.is_zero():
            raise AlgebraError("octonion parameters must be nonzero")
        Q = _quaternion(field, a, b)
        table, conj, labels, unit = _cayley_dickson(Q, c)
        return CompositionAlgebra(field, tag, (a, b, c), labels, table, conj, unit)
    raise AlgebraError(f"unknown tag {tag!r}")


def verify_composition_law(algebra, trials=None, exhaustive=False, seed=0):
    """Check n(xy) = n(x) n(y); returns a report dict with any failures."""
    import random

    failures = []
    checked = 0
    if exhaustive:
        elems = list(algebra.enumerate_elements())
        for xc in elems:
            x = CompElem(algebra, xc)
            nx = algebra.norm(x)
            for yc in elems:
                y = CompElem(algebra, yc)
                checked += 1
                if algebra.norm(algebra.mul(x, y)) != nx * algebra.norm(y):
                    failures.append((x, y))
    else:
        rng = random.Random(seed)
        for _ in range(trials or 10000):
            x = algebra.random(rng)
            y = algebra.random(rng)
            checked += 1
            if algebra.norm(algebra.mul(x, y)) != algebra.norm(x) * algebra.norm(y):
                failures.append((x, y))
    return {
        "algebra": repr(algebra),
        "pairs_checked": checked,
        "failures": failures,
        "passed": not failures,
    }
