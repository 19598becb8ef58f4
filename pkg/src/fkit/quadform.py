"""Ternary quadratic forms over Q and F_p: diagonalization, discriminant,
Hilbert symbols, Hasse invariants, and the similarity test used to decide
whether a rank-3 Gram matrix matches the norm form on the trace-zero part
of a quaternion algebra.

Over Q the similarity test goes through the classical invariants
(square-class of the discriminant, signature, Hasse invariants at the
relevant places); over F_p any two nondegenerate ternary forms are similar.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .fields import QQ, FieldError, PrimeField, Scalar


class FormError(ValueError):
    pass


class TernaryForm:
    """A symmetric 3x3 Gram matrix over a field."""

    def __init__(self, field, gram):
        self.field = field
        G = [[field.scalar(x) for x in row] for row in gram]
        if len(G) != 3 or any(len(r) != 3 for r in G):
            raise FormError("Gram matrix must be 3x3")
        for i in range(3):
            for j in range(3):
                if G[i][j] != G[j][i]:
                    raise FormError("Gram matrix must be symmetric")
        self.gram = tuple(tuple(row) for row in G)

    def det(self):
        return linalg.det(self.field, [list(r) for r in self.gram])

    def is_degenerate(self):
        return self.det().is_zero()

    def rank(self):
        return linalg.rank([list(r) for r in self.gram])

    def evaluate(self, v):
        s = self.field.zero
        for i in range(3):
            for j in range(3):
                s = s + v[i] * self.gram[i][j] * v[j]
        return s

    def scaled(self, lam):
        return TernaryForm(self.field, [[lam * x for x in row] for row in self.gram])

    @staticmethod
    def diag(field, a, b, c):
        z = field.zero
        a, b, c = field.scalar(a), field.scalar(b), field.scalar(c)
        return TernaryForm(field, [[a, z, z], [z, b, z], [z, z, c]])

    def __eq__(self, other):
        if not isinstance(other, TernaryForm):
            return NotImplemented
        return self.field == other.field and self.gram == other.gram

    def __repr__(self):
        rows = "; ".join(
            " ".join(str(x) for x in row) for row in self.gram
        )
        return f"TernaryForm[{rows}]"


def diagonalize(form):
    """(diagonal entries, P) with P^T G P diagonal; over Q the entries are
    reduced to their squarefree parts (P absorbs the square factors)."""
    field = form.field
    G = [list(row) for row in form.gram]
    P = linalg.identity(field, 3)

    def col_op(j, i, f):
        # col_j += f * col_i applied congruently (and to P)
        for r in range(3):
            G[r][j] = G[r][j] + f * G[r][i]
        for r in range(3):
            G[j][r] = G[j][r] + f * G[i][r]
        for r in range(3):
            P[r][j] = P[r][j] + f * P[r][i]

    half = field.one / field.scalar(2)
    for i in range(3):
        if G[i][i].is_zero():
            # bring a nonzero diagonal entry into position i
            swap = None
            for j in range(i + 1, 3):
                if not G[j][j].is_zero():
                    swap = j
                    break
            if swap is not None:
                for r in range(3):
                    G[r][i], G[r][swap] = G[r][swap], G[r][i]
                for r in range(3):
                    G[i][r], G[swap][r] = G[swap][r], G[i][r]
                for r in range(3):
                    P[r][i], P[r][swap] = P[r][swap], P[r][i]
            else:
                off = None
                for j in range(i + 1, 3):
                    if not G[i][j].is_zero():
                        off = j
                        break
                if off is None:
                    continue  # the remaining block is zero
                col_op(i, off, field.one)
        piv = G[i][i]
        if piv.is_zero():
            continue
        inv = piv.inv()
        for j in range(i + 1, 3):
            if not G[i][j].is_zero():
                col_op(j, i, -(G[i][j] * inv))
    diag = [G[i][i] for i in range(3)]
    if field == QQ:
        for i in range(3):
            if diag[i].is_zero():
                continue
            sf = squarefree_part(diag[i])
            r = diag[i] / field.scalar(str(sf))
            # r is a square; scale the basis vector by 1/sqrt(r)
            root = _sqrt_scalar(field, r)
            rinv = root.inv()
            for rr in range(3):
                P[rr][i] = P[rr][i] * rinv
            diag[i] = field.scalar(str(sf))
    return diag, P


def _sqrt_scalar(field, s):
    import math

    fr = Fraction(str(s))
    return field.scalar(Fraction(math.isqrt(fr.numerator), math.isqrt(fr.denominator)))


def _factor(n):
    """Trial-division factorization of a positive integer."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def squarefree_part(x):
    """Squarefree integer representative of the square class of x in Q*."""
    fr = Fraction(str(x))
    if fr == 0:
        return 0
    n = fr.numerator * fr.denominator
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = sign
    for p, e in _factor(n).items():
        if e % 2 == 1:
            out *= p
    return out


def legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def hilbert_symbol(a, b, place):
    """(a, b)_v in {+1, -1}: whether z^2 = a x^2 + b y^2 has a nontrivial
    solution over the completion at the given place ('infinity' or a prime)."""
    a = Fraction(str(a))
    b = Fraction(str(b))
    if a == 0 or b == 0:
        raise FormError("Hilbert symbol needs nonzero arguments")
    if place == "infinity":
        return -1 if (a < 0 and b < 0) else 1
    p = int(place)
    # reduce to integers
    a = a.numerator * a.denominator
    b = b.numerator * b.denominator
    alpha = 0
    while a % p == 0:
        a //= p
        alpha += 1
    beta = 0
    while b % p == 0:
        b //= p
        beta += 1
    if p != 2:
        eps = ((p - 1) // 2) % 2
        s = (-1) ** (alpha * beta * eps)
        if beta % 2:
            s *= legendre(a, p)
        if alpha % 2:
            s *= legendre(b, p)
        return s
    # p = 2
    def eps2(u):
        return ((u - 1) // 2) % 2

    def omega(u):
        return ((u * u - 1) // 8) % 2

    e = eps2(a) * eps2(b) + alpha * omega(b) + beta * omega(a)
    return (-1) ** (e % 2)


def hasse_invariant(diag_entries, place):
    """Product of (a_i, a_j)_v over i < j for a diagonalized form."""
    s = 1
    entries = [Fraction(str(x)) for x in diag_entries]
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            s *= hilbert_symbol(entries[i], entries[j], place)
    return s


def relevant_places(entries):
    """2, infinity, and the primes dividing any squarefree diagonal entry."""
    places = {2}
    for x in entries:
        sf = abs(squarefree_part(x))
        for p in _factor(sf):
            places.add(p)
    return sorted(places) + ["infinity"]


def signature(diag_entries):
    pos = sum(1 for x in diag_entries if Fraction(str(x)) > 0)
    neg = sum(1 for x in diag_entries if Fraction(str(x)) < 0)
    return (pos, neg)


def _invariants(form):
    diag, _ = diagonalize(form)
    entries = [Fraction(str(x)) for x in diag]
    disc = squarefree_part(entries[0] * entries[1] * entries[2])
    return entries, disc


def ternary_isometric_q(f1, f2):
    """Isometry test over Q via disc square class, signature, and Hasse
    invariants at every relevant place."""
    e1, d1 = _invariants(f1)
    e2, d2 = _invariants(f2)
    if d1 != d2:
        return False
    if signature(e1) != signature(e2):
        return False
    places = sorted(set(relevant_places(e1) + relevant_places(e2)), key=str)
    for v in places:
        if hasse_invariant(e1, v) != hasse_invariant(e2, v):
            return False
    return True


def ternary_similar(f1, f2):
    """True iff lambda * f1 is isometric to f2 for some scalar lambda.

    For ternary forms the discriminant scales by lambda (mod squares), so the
    square class of lambda is forced; testing that single candidate (and
    lambda = 1 when the discriminants already agree) decides similarity."""
    if f1.field != f2.field:
        raise FormError("forms over different fields")
    field = f1.field
    if f1.is_degenerate() or f2.is_degenerate():
        raise FormError("similarity test requires nondegenerate forms")
    if isinstance(field, PrimeField):
        return True
    if field != QQ:
        raise FieldError("similarity implemented over Q and F_p")
    _, d1 = _invariants(f1)
    _, d2 = _invariants(f2)
    lam = squarefree_part(Fraction(d1) * Fraction(d2))
    candidates = [field.scalar(lam)]
    if d1 == d2 and lam != 1:
        candidates.append(field.one)
    for c in candidates:
        if ternary_isometric_q(f1.scaled(c), f2):
            return True
    return False


def norm_form_on_trace0(algebra):
    """Gram matrix of the norm form restricted to C^0 for dim C = 4."""
    if algebra.dim != 4:
        raise FormError("trace-zero norm form requires a quaternion algebra")
    basis = algebra.trace0_basis()
    field = algebra.field
    half = field.one / field.scalar(2)
    G = []
    for u in basis:
        row = []
        for v in basis:
            row.append(half * algebra.bilinear(u, v))
        G.append(row)
    return TernaryForm(field, G)
