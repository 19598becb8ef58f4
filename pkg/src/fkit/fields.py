"""Exact coefficient fields: arbitrary-precision rationals, prime fields F_p
(p >= 5), and quadratic extensions F_p(sqrt(eps)) for nonsquare eps.

Every value is a ``Scalar`` carrying a reference to its field.  Scalars are
immutable, hashable, and kept in canonical form (reduced fraction with
positive denominator; residues in [0, p)), so they can be used as dict keys
in census tables.  Characteristics 2 and 3 are rejected: the algebra layer
divides by 2 and 6 and polarizes a quartic form.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover - gmpy2 is a hard dep, Fraction is a safety net
    _mpq = Fraction


class FieldError(ValueError):
    """Invalid field construction (bad prime, square eps, ...)."""


class FieldMismatchError(ValueError):
    """Operands belong to different fields."""


class DivisionByZero(ZeroDivisionError):
    """Exact division by zero."""


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Scalar:
    """An element of a :class:`Field`, stored in canonical form."""

    __slots__ = ("field", "v")

    def __init__(self, field, v):
        self.field = field
        self.v = v

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, int):
            return self.field.scalar(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, self.field._add(self.v, o.v))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, self.field._sub(self.v, o.v))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, self.field._sub(o.v, self.v))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, self.field._mul(self.v, o.v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, self.field._div(self.v, o.v))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, self.field._div(o.v, self.v))

    def __neg__(self):
        return Scalar(self.field, self.field._neg(self.v))

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inv(self):
        return Scalar(self.field, self.field._inv(self.v))

    def is_zero(self):
        return self.field._is_zero(self.v)

    def is_square(self):
        return self.field.is_square(self.v)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.v == other.v

    def __hash__(self):
        return hash((self.field, self.v))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Scalar({self.field.short()}, {self.field.format(self.v)})"

    def __str__(self):
        return self.field.format(self.v)


class Field:
    """Base class; subclasses implement raw-value arithmetic."""

    char = 0
    order = None  # None = infinite

    def scalar(self, v):
        raise NotImplementedError

    @property
    def zero(self):
        return self.scalar(0)

    @property
    def one(self):
        return self.scalar(1)

    def is_finite(self):
        return self.order is not None

    def elements(self):
        """Every element exactly once, in a deterministic order."""
        raise FieldError(f"{self} is infinite; cannot enumerate")

    def _is_zero(self, v):
        raise NotImplementedError

    def format(self, v):
        return str(v)

    def short(self):
        raise NotImplementedError

    def to_json(self):
        raise NotImplementedError

    def random(self, rng):
        """A random element, for sampled verification suites."""
        raise NotImplementedError


class Rationals(Field):
    """The rational numbers, backed by gmpy2.mpq."""

    char = 0
    order = None

    def scalar(self, v):
        if isinstance(v, Scalar):
            if v.field != self:
                raise FieldMismatchError(f"{v.field} is not Q")
            return v
        if isinstance(v, str):
            v = Fraction(v)
        return Scalar(self, _mpq(v))

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return a * b

    def _div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero in Q")
        return a / b

    def _neg(self, a):
        return -a

    def _inv(self, a):
        if a == 0:
            raise DivisionByZero("0 has no inverse")
        return 1 / a

    def _is_zero(self, a):
        return a == 0

    def is_square(self, v):
        if isinstance(v, Scalar):
            v = v.v
        if v < 0:
            return False
        num, den = int(v.numerator), int(v.denominator)
        rn = _isqrt(num)
        rd = _isqrt(den)
        return rn * rn == num and rd * rd == den

    def random(self, rng):
        num = rng.randrange(-20, 21)
        den = rng.randrange(1, 8)
        return Scalar(self, _mpq(num, den))

    def short(self):
        return "Q"

    def to_json(self):
        return {"field": "Q"}

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Rationals()"


def _isqrt(n):
    import math

    return math.isqrt(n)


class PrimeField(Field):
    """F_p for a prime p >= 5; residues stored in [0, p)."""

    def __init__(self, p):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        if p < 5:
            raise FieldError(f"p = {p} < 5: characteristics 2 and 3 are rejected")
        self.p = p
        self.char = p
        self.order = p

    def scalar(self, v):
        if isinstance(v, Scalar):
            if v.field != self:
                raise FieldMismatchError(f"{v.field} is not F_{self.p}")
            return v
        if isinstance(v, str):
            f = Fraction(v)
            return self.scalar(int(f.numerator)) / self.scalar(int(f.denominator))
        return Scalar(self, int(v) % self.p)

    def _add(self, a, b):
        return (a + b) % self.p

    def _sub(self, a, b):
        return (a - b) % self.p

    def _mul(self, a, b):
        return (a * b) % self.p

    def _div(self, a, b):
        if b == 0:
            raise DivisionByZero(f"division by zero in F_{self.p}")
        return (a * pow(b, self.p - 2, self.p)) % self.p

    def _neg(self, a):
        return (-a) % self.p

    def _inv(self, a):
        if a == 0:
            raise DivisionByZero("0 has no inverse")
        return pow(a, self.p - 2, self.p)

    def _is_zero(self, a):
        return a == 0

    def is_square(self, v):
        if isinstance(v, Scalar):
            v = v.v
        v %= self.p
        if v == 0:
            return True
        return pow(v, (self.p - 1) // 2, self.p) == 1

    def nonsquare(self):
        """The smallest quadratic nonresidue mod p."""
        for r in range(2, self.p):
            if not self.is_square(r):
                return self.scalar(r)
        raise AssertionError("unreachable for prime p > 2")

    def elements(self):
        for r in range(self.p):
            yield Scalar(self, r)

    def random(self, rng):
        return Scalar(self, rng.randrange(self.p))

    def short(self):
        return f"F{self.p}"

    def to_json(self):
        return {"field": "Fp", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class QuadExt(Field):
    """F_p(sqrt(eps)) for nonsquare eps; elements (a, b) = a + b*sqrt(eps)."""

    def __init__(self, p, eps):
        base = PrimeField(p)
        eps = eps % p
        if base.is_square(eps):
            raise FieldError(f"eps = {eps} is a square mod {p}")
        self.p = p
        self.eps = eps
        self.char = p
        self.order = p * p

    def scalar(self, v):
        if isinstance(v, Scalar):
            if v.field != self:
                raise FieldMismatchError(f"{v.field} is not F_{self.p}^2")
            return v
        if isinstance(v, tuple):
            return Scalar(self, (v[0] % self.p, v[1] % self.p))
        if isinstance(v, str):
            f = Fraction(v)
            num = self.scalar(int(f.numerator))
            return num / self.scalar(int(f.denominator))
        return Scalar(self, (int(v) % self.p, 0))

    def _add(self, a, b):
        return ((a[0] + b[0]) % self.p, (a[1] + b[1]) % self.p)

    def _sub(self, a, b):
        return ((a[0] - b[0]) % self.p, (a[1] - b[1]) % self.p)

    def _mul(self, a, b):
        return (
            (a[0] * b[0] + self.eps * a[1] * b[1]) % self.p,
            (a[0] * b[1] + a[1] * b[0]) % self.p,
        )

    def _neg(self, a):
        return ((-a[0]) % self.p, (-a[1]) % self.p)

    def _inv(self, a):
        # 1/(x + y s) = (x - y s)/(x^2 - eps y^2)
        nrm = (a[0] * a[0] - self.eps * a[1] * a[1]) % self.p
        if nrm == 0:
            raise DivisionByZero("0 has no inverse")
        ninv = pow(nrm, self.p - 2, self.p)
        return ((a[0] * ninv) % self.p, (-a[1] * ninv) % self.p)

    def _div(self, a, b):
        if b == (0, 0):
            raise DivisionByZero(f"division by zero in F_{self.p}^2")
        return self._mul(a, self._inv(b))

    def _is_zero(self, a):
        return a == (0, 0)

    def is_square(self, v):
        if isinstance(v, Scalar):
            v = v.v
        if v == (0, 0):
            return True
        x = Scalar(self, v)
        return (x ** ((self.order - 1) // 2)).v == (1, 0)

    def elements(self):
        for a in range(self.p):
            for b in range(self.p):
                yield Scalar(self, (a, b))

    def random(self, rng):
        return Scalar(self, (rng.randrange(self.p), rng.randrange(self.p)))

    def format(self, v):
        a, b = v
        if b == 0:
            return str(a)
        return f"{a}+{b}s"

    def short(self):
        return f"F{self.p}^2"

    def to_json(self):
        return {"field": "Fp2", "p": self.p, "eps": self.eps}

    def __eq__(self, other):
        return isinstance(other, QuadExt) and (other.p, other.eps) == (self.p, self.eps)

    def __hash__(self):
        return hash(("Fp2", self.p, self.eps))

    def __repr__(self):
        return f"QuadExt({self.p}, {self.eps})"


QQ = Rationals()


def field_from_json(d):
    kind = d.get("field")
    if kind == "Q":
        return QQ
    if kind == "Fp":
        return PrimeField(int(d["p"]))
    if kind == "Fp2":
        return QuadExt(int(d["p"]), int(d["eps"]))
    raise FieldError(f"unknown field descriptor {d!r}")


def parse_field(spec):
    """Parse CLI shorthand: 'Q', 'Fp:5', 'Fp2:5,2'."""
    if spec == "Q":
        return QQ
    if spec.startswith("Fp2:"):
        p, eps = spec[4:].split(",")
        return QuadExt(int(p), int(eps))
    if spec.startswith("Fp:"):
        return PrimeField(int(spec[3:]))
    raise FieldError(f"cannot parse field spec {spec!r}")
