"""The symplectic/quartic space W = F + J + J + F: symplectic form, quartic
form and its 4-linear polarization, the degree-3 flat map, the rank
stratification, and the similitude generators n(x), nbar(x), s_lambda,
s*_lambda, the involution, and Levi elements (g, h).

Generator conventions (fixing two typos in the source displays, validated by
the similitude contracts and flat-map duality tests):
  * s_lambda scales the first coordinate:  (l^2 a, l b, c, l^{-1} d);
    s*_lambda is (l^{-1} a, b, l c, l^2 d).
  * The third component of the flat map is 2 b x c# - 2 d b# + (ad - <b,c>) c.
"""

from __future__ import annotations

import random

from . import jordan, linalg
from .composition import AlgebraError
from .fields import Scalar
from .jordan import (
    JordanElem,
    cross,
    jordan_mul,
    norm_N,
    sharp,
    trace_pairing,
)


class FreudenthalElem:
    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        if b.algebra != c.algebra:
            raise AlgebraError("b and c over different algebras")
        field = b.algebra.field
        self.a = field.scalar(a)
        self.b = b
        self.c = c
        self.d = field.scalar(d)

    @property
    def algebra(self):
        return self.b.algebra

    @property
    def field(self):
        return self.b.algebra.field

    def __add__(self, other):
        return FreudenthalElem(
            self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d
        )

    def __sub__(self, other):
        return FreudenthalElem(
            self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d
        )

    def __neg__(self):
        return FreudenthalElem(-self.a, -self.b, -self.c, -self.d)

    def __rmul__(self, s):
        if isinstance(s, (Scalar, int)):
            return FreudenthalElem(s * self.a, s * self.b, s * self.c, s * self.d)
        return NotImplemented

    def is_zero(self):
        return (
            self.a.is_zero()
            and self.b.is_zero()
            and self.c.is_zero()
            and self.d.is_zero()
        )

    def __eq__(self, other):
        if not isinstance(other, FreudenthalElem):
            return NotImplemented
        return (
            self.a == other.a
            and self.b == other.b
            and self.c == other.c
            and self.d == other.d
        )

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __repr__(self):
        return f"FreudenthalElem(a={self.a}, b={self.b}, c={self.c}, d={self.d})"

    @staticmethod
    def zero_elem(algebra):
        z = JordanElem.zero_elem(algebra)
        f = algebra.field
        return FreudenthalElem(f.zero, z, z, f.zero)

    @staticmethod
    def random(algebra, rng):
        f = algebra.field
        return FreudenthalElem(
            f.random(rng),
            JordanElem.random(algebra, rng),
            JordanElem.random(algebra, rng),
            f.random(rng),
        )


def dim_w(algebra):
    """dim W_C = 8 + 6 dim C (20 / 32 / 56 for dim C = 2 / 4 / 8)."""
    return 2 + 2 * jordan.dim_jordan(algebra)


# -- forms -------------------------------------------------------------


def symplectic(v, w):
    """<v,w> = a d' - <b, c'> + <c, b'> - d a'."""
    return (
        v.a * w.d
        - trace_pairing(v.b, w.c)
        + trace_pairing(v.c, w.b)
        - v.d * w.a
    )


def quartic(v):
    """q(v) = (ad - <b,c>)^2 + 4 a N(c) + 4 d N(b) - 4 <b#, c#>."""
    P = v.a * v.d - trace_pairing(v.b, v.c)
    return (
        P * P
        + 4 * (v.a * norm_N(v.c))
        + 4 * (v.d * norm_N(v.b))
        - 4 * trace_pairing(sharp(v.b), sharp(v.c))
    )


def fourlinear(v1, v2, v3, v4):
    """The symmetric 4-linear form with (v,v,v,v) = 2 q(v); computed by
    inclusion-exclusion polarization of q."""
    field = v1.field
    total = field.zero
    vs = (v1, v2, v3, v4)
    for mask in range(1, 16):
        acc = None
        bits = 0
        for i in range(4):
            if mask & (1 << i):
                bits += 1
                acc = vs[i] if acc is None else acc + vs[i]
        term = quartic(acc)
        if (4 - bits) % 2 == 1:
            term = -term
        total = total + term
    return total / field.scalar(12)


def flat(v):
    """The degree-3 flat map; v has rank <= 2 iff flat(v) = 0."""
    a, b, c, d = v.a, v.b, v.c, v.d
    P = a * d - trace_pairing(b, c)
    nb, nc = norm_N(b), norm_N(c)
    af = -(a * P) - 2 * nb
    bf = -(2 * cross(c, sharp(b))) + 2 * (a * sharp(c)) - P * b
    cf = 2 * cross(b, sharp(c)) - 2 * (d * sharp(b)) + P * c
    df = d * P + 2 * nc
    return FreudenthalElem(af, bf, cf, df)


# -- basis and the intrinsic rank test ---------------------------------


def w_basis(algebra):
    """Basis of W: a-unit, Jordan basis in the b slot, then c slot, d-unit."""
    f = algebra.field
    zj = JordanElem.zero_elem(algebra)
    out = [FreudenthalElem(f.one, zj, zj, f.zero)]
    for B in jordan.jordan_basis(algebra):
        out.append(FreudenthalElem(f.zero, B, zj, f.zero))
    for B in jordan.jordan_basis(algebra):
        out.append(FreudenthalElem(f.zero, zj, B, f.zero))
    out.append(FreudenthalElem(f.zero, zj, zj, f.one))
    return out


def w_coords(v):
    return [v.a] + jordan.coords_of(v.b) + jordan.coords_of(v.c) + [v.d]


def w_from_coords(algebra, coords):
    nj = jordan.dim_jordan(algebra)
    b = jordan.from_coords(algebra, coords[1 : 1 + nj])
    c = jordan.from_coords(algebra, coords[1 + nj : 1 + 2 * nj])
    return FreudenthalElem(coords[0], b, c, coords[-1])


def perp_basis(v):
    """A basis of the symplectic orthogonal complement of v != 0, by exact
    elimination on the covector <v, e_j>."""
    algebra = v.algebra
    basis = w_basis(algebra)
    phi = [symplectic(v, e) for e in basis]
    piv = None
    for j, t in enumerate(phi):
        if not t.is_zero():
            piv = j
            break
    if piv is None:
        raise AlgebraError("perp of the zero vector is everything")
    out = []
    pin = phi[piv].inv()
    for j, e in enumerate(basis):
        if j == piv:
            continue
        if phi[j].is_zero():
            out.append(e)
        else:
            out.append(e - (phi[j] * pin) * basis[piv])
    return out


def has_rank_le1(v):
    """(v,v,w,w') = 0 for all w, w' in the symplectic perp of v."""
    if v.is_zero():
        return True
    wb = perp_basis(v)
    # F(v,v,w,w) for single vectors, then polarize pairwise
    fvv = [_fvv(v, w) for w in wb]
    field = v.field
    six = field.scalar(6)
    for i in range(len(wb)):
        for j in range(i, len(wb)):
            if i == j:
                val = fvv[i]
            else:
                val = (_fvv(v, wb[i] + wb[j]) - fvv[i] - fvv[j]) / field.scalar(2)
            if not val.is_zero():
                return False
    return True


def _fvv(v, w):
    """F(v, v, w, w), via the s^2 coefficient of q(v + s w)."""
    field = v.field
    return (quartic(v + w) + quartic(v - w) - 2 * quartic(v) - 2 * quartic(w)) / field.scalar(6)


def rank_w(v):
    """Exact rank in {0,...,4}: strata cut out by q, flat, and the 4-linear
    form on the perp."""
    if v.is_zero():
        return 0
    if not quartic(v).is_zero():
        return 4
    if not flat(v).is_zero():
        return 3
    if not has_rank_le1(v):
        return 2
    return 1


def special_rank1(b):
    """The rank-1 element (1, b, b#, N(b))."""
    return FreudenthalElem(b.algebra.field.one, b, sharp(b), norm_N(b))


# -- generators --------------------------------------------------------


def atom_n(x):
    return ("n", x)


def atom_nbar(x):
    return ("nbar", x)


def atom_s(lam):
    return ("s", lam)


def atom_sstar(lam):
    return ("sstar", lam)


def atom_involution():
    return ("iota",)


def atom_levi(g, h):
    return ("levi", g, h)


def _apply_n(x, v):
    a, b, c, d = v.a, v.b, v.c, v.d
    xs = sharp(x)
    return FreudenthalElem(
        a,
        b + a * x,
        c + cross(b, x) + a * xs,
        d + trace_pairing(c, x) + trace_pairing(b, xs) + a * norm_N(x),
    )


def _apply_nbar(x, v):
    a, b, c, d = v.a, v.b, v.c, v.d
    xs = sharp(x)
    return FreudenthalElem(
        a + trace_pairing(b, x) + trace_pairing(c, xs) + d * norm_N(x),
        b + cross(c, x) + d * xs,
        c + d * x,
        d,
    )


def _apply_iota(v):
    return FreudenthalElem(-v.d, v.c, -v.b, v.a)


def _apply_s(lam, v):
    li = lam.inv()
    return FreudenthalElem(lam * lam * v.a, lam * v.b, v.c, li * v.d)


def _apply_sstar(lam, v):
    li = lam.inv()
    return FreudenthalElem(li * v.a, v.b, lam * v.c, lam * lam * v.d)


class LeviElement:
    """The similitude (a,b,c,d) -> (l a, Hb, H~c, l^{-1} d) built from a
    verified algebra automorphism g and h in GL_3; l = det(h).

    H~ is the trace-form inverse transpose of H (the dual action), which
    satisfies H~(b#) = H(b)# / l."""

    def __init__(self, algebra, g, h, check=True):
        field = algebra.field
        if check and not algebra.is_automorphism(g):
            raise AlgebraError("g is not an automorphism")
        if linalg.det(field, h).is_zero():
            raise AlgebraError("h must be invertible")
        self.algebra = algebra
        self.g = g
        self.h = h
        self.lam = linalg.det(field, h)
        self.H = jordan.matrix_of_act(g, h, algebra)
        G = jordan.trace_form_gram(algebra)
        Hti = linalg.inverse(field, linalg.transpose(self.H))
        self.Ht = linalg.matmul(linalg.inverse(field, G), linalg.matmul(Hti, G))

    def apply_jordan(self, X, dual=False):
        M = self.Ht if dual else self.H
        return jordan.from_coords(self.algebra, linalg.matvec(M, jordan.coords_of(X)))

    def apply(self, v):
        li = self.lam.inv()
        return FreudenthalElem(
            self.lam * v.a,
            self.apply_jordan(v.b),
            self.apply_jordan(v.c, dual=True),
            li * v.d,
        )


def apply_word(word, v):
    """Left-to-right composition of generator atoms applied to v."""
    for atom in word:
        kind = atom[0]
        if kind == "n":
            v = _apply_n(atom[1], v)
        elif kind == "nbar":
            v = _apply_nbar(atom[1], v)
        elif kind == "iota":
            v = _apply_iota(v)
        elif kind == "s":
            lam = v.field.scalar(atom[1])
            if lam.is_zero():
                raise AlgebraError("s_lambda requires lambda != 0")
            v = _apply_s(lam, v)
        elif kind == "sstar":
            lam = v.field.scalar(atom[1])
            if lam.is_zero():
                raise AlgebraError("s*_lambda requires lambda != 0")
            v = _apply_sstar(lam, v)
        elif kind == "levi":
            lv = atom[1] if isinstance(atom[1], LeviElement) else LeviElement(
                v.algebra, atom[1], atom[2]
            )
            v = lv.apply(v)
        else:
            raise AlgebraError(f"unknown generator atom {kind!r}")
    return v


class SimilitudeError(ValueError):
    """The probed word does not scale the forms consistently."""


def similitude_factor(word, algebra, probes=32, seed=0):
    """The factor nu with <gv, gw> = nu <v, w> and q(gv) = nu^2 q(v),
    determined and cross-checked on a set of random probe vectors."""
    rng = random.Random(seed)
    nu = None
    checked = 0
    while checked < probes:
        v = FreudenthalElem.random(algebra, rng)
        w = FreudenthalElem.random(algebra, rng)
        sv = symplectic(v, w)
        gv = apply_word(word, v)
        gw = apply_word(word, w)
        if sv.is_zero():
            continue
        cand = symplectic(gv, gw) / sv
        if nu is None:
            nu = cand
        elif cand != nu:
            raise SimilitudeError("inconsistent symplectic scaling")
        qv = quartic(v)
        if not qv.is_zero() and quartic(gv) != nu * nu * qv:
            raise SimilitudeError("quartic does not scale by nu^2")
        checked += 1
    if nu is None:
        raise SimilitudeError("could not find probes with nonzero pairing")
    return nu


# -- the rank-1 criterion of the similitude group -----------------------


def rank1_criterion(v, levi_samples=None, rng=None, n_samples=64):
    """Rank-1 test by the similitude-group criterion: b# = a c, c# = d b,
    and H(b) * H~(c) = (ad) I for every sampled Levi element (the identity
    is always included)."""
    algebra = v.algebra
    field = v.field
    if v.is_zero():
        return False
    if sharp(v.b) != v.a * v.c:
        return False
    if sharp(v.c) != v.d * v.b:
        return False
    ad = v.a * v.d
    I = JordanElem.identity(algebra)
    target = ad * I
    if jordan_mul(v.b, v.c) != target:
        return False
    if levi_samples is None:
        levi_samples = sample_levi(algebra, rng or random.Random(0), n_samples)
    for lv in levi_samples:
        hb = lv.apply_jordan(v.b)
        htc = lv.apply_jordan(v.c, dual=True)
        if jordan_mul(hb, htc) != target:
            return False
    return True


def sample_levi(algebra, rng, count):
    """Random Levi elements (g, h) with g a verified automorphism and h a
    random invertible 3x3 matrix."""
    field = algebra.field
    gs = algebra.sample_automorphisms(rng, max(1, count))
    out = []
    while len(out) < count:
        h = [[field.random(rng) for _ in range(3)] for _ in range(3)]
        if linalg.det(field, h).is_zero():
            continue
        g = gs[rng.randrange(len(gs))]
        out.append(LeviElement(algebra, g, h, check=False))
    return out
