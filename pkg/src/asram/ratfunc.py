"""The rational function field E = F_q(t): elements, places, valuations, local expansions."""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass

from .errors import DivisionByZero, FieldMismatch, NotIrreducible, NotPositiveDegree, ZeroInput
from .gf import FqElem, ResidueField
from .poly import Poly, gcd, invmod, is_irreducible

INF = math.inf


class RatFunc:
    """A reduced fraction num/den of polynomials over F_q with den monic."""

    __slots__ = ('num', 'den')

    def __init__(self, num, den=None, *, reduced=False):
        F = num.field
        if den is None:
            den = Poly.const(F, 1)
        if den.field != F:
            raise FieldMismatch('numerator and denominator over different fields')
        if not den:
            raise DivisionByZero('rational function with zero denominator')
        if not reduced:
            if not num:
                den = Poly.const(F, 1)
            else:
                g = gcd(num, den)
                if g != 1:
                    num, den = num // g, den // g
                if den.lc != 1:
                    inv = F.inv(den.lc)
                    num, den = num.scale(inv), den.scale(inv)
        object.__setattr__(self, 'num', num)
        object.__setattr__(self, 'den', den)

    def __setattr__(self, name, value):
        raise AttributeError('RatFunc is immutable')

    @property
    def field(self):
        return self.num.field

    @classmethod
    def t(cls, field):
        return cls(Poly.var(field))

    @classmethod
    def const(cls, field, c):
        return cls(Poly.const(field, field.code(c)))

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.field != self.field:
                raise FieldMismatch('rational functions over different fields')
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        if isinstance(other, (int, FqElem)):
            return RatFunc.const(self.field, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise DivisionByZero('inverse of zero')
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n, reduced=True)

    def frob(self, k=1):
        """self^(p^k); coprimality and monicity survive Frobenius."""
        return RatFunc(self.num.frob(k), self.den.frob(k), reduced=True)

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, RatFunc) else other
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def is_poly(self):
        return self.den.degree == 0

    def __str__(self):
        n = self.num.to_str()
        if self.is_poly():
            return n
        d = self.den.to_str()
        if _top_level_plus(n):
            n = f'({n})'
        if _top_level_plus(d):
            d = f'({d})'
        return f'{n}/{d}'

    def __repr__(self):
        return f'RatFunc({self})'


def _top_level_plus(s):
    depth = 0
    for ch in s:
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
        elif ch == '+' and depth == 0:
            return True
    return False


@dataclass(frozen=True)
class Place:
    """A place of F_q(t): a monic irreducible pi, or the infinite place (pi is None)."""

    field: object
    pi: Poly | None = None

    @classmethod
    def infinity(cls, field):
        return cls(field, None)

    @property
    def is_infinite(self):
        return self.pi is None

    @property
    def degree(self):
        return 1 if self.pi is None else self.pi.degree

    @property
    def local_pi(self):
        """Uniformizer used for expansions: pi itself, or s for the infinite place."""
        return Poly.var(self.field) if self.pi is None else self.pi

    @property
    def residue_field(self):
        return _residue_field(self.local_pi)

    def to_local(self, a):
        """Express a in the coordinate where this place is finite (t -> 1/s at infinity)."""
        return infinity_substitute(a) if self.is_infinite else a

    from_local = to_local  # t <-> 1/s is an involution

    def __str__(self):
        return 'inf' if self.pi is None else str(self.pi)


@functools.lru_cache(maxsize=None)
def _residue_field(pi):
    return ResidueField(pi)


def place_validate(pi):
    """Normalize pi to monic and check it defines a finite place."""
    if not isinstance(pi, Poly):
        if isinstance(pi, RatFunc) and pi.is_poly():
            pi = pi.num.scale(pi.den.coeffs[0])
        else:
            raise NotPositiveDegree(f'{pi} is not a polynomial')
    if pi.degree < 1:
        raise NotPositiveDegree(f'place polynomial {pi} has degree {pi.degree}')
    pi = pi.monic()
    if not is_irreducible(pi):
        raise NotIrreducible(f'{pi} is reducible over {pi.field}')
    return Place(pi.field, pi)


def _ord(f, pi):
    """Return (k, f / pi^k) with pi not dividing the cofactor; f != 0."""
    k = 0
    while True:
        quo, rem = divmod(f, pi)
        if rem:
            return k, f
        f = quo
        k += 1


def infinity_substitute(a):
    """a(1/s), reduced, written again in the variable t (read as s)."""
    if not a:
        return a
    dn, dd = a.num.degree, a.den.degree
    num, den = a.num.reverse(), a.den.reverse()
    if dd >= dn:
        num = num.shift(dd - dn)
    else:
        den = den.shift(dn - dd)
    return RatFunc(num, den)


def valuation(a, v):
    """The normalized valuation v(a), +inf for a = 0."""
    if not a:
        return INF
    if v.is_infinite:
        return a.den.degree - a.num.degree
    return _ord(a.num, v.pi)[0] - _ord(a.den, v.pi)[0]


@dataclass(frozen=True)
class LocalExpansion:
    """a = sum(digits[i] * pi^(start + i)) + O(pi^precision); digits are residue polys."""

    start: int
    digits: tuple
    precision: int

    def __iter__(self):
        for i, d in enumerate(self.digits):
            yield self.start + i, d

    def digit(self, n):
        """Digit at exponent n, or None for exponents below start (they are zero)."""
        if n >= self.precision:
            raise IndexError(f'exponent {n} beyond precision {self.precision}')
        i = n - self.start
        return self.digits[i] if 0 <= i < len(self.digits) else None


def local_expand(a, v, n):
    """Truncated pi-adic expansion of a at v, exact for exponents < n."""
    b = v.to_local(a)
    pi = v.local_pi
    if not b:
        return LocalExpansion(n, (), n)
    e1, num = _ord(b.num, pi)
    e2, den = _ord(b.den, pi)
    start = e1 - e2
    k = n - start
    if k <= 0:
        return LocalExpansion(n, (), n)
    mod = pi ** k
    u = num * invmod(den, mod) % mod
    digits = []
    for _ in range(k):
        u, rem = divmod(u, pi)
        digits.append(rem)
    if not digits[0]:
        raise AssertionError('leading digit vanished')
    return LocalExpansion(start, tuple(digits), n)


def lift(x, v):
    """Residue element x (Poly of degree < deg pi) as an element of E in t-coordinates."""
    return v.from_local(RatFunc(x))


def leading_digit(a, v):
    """(v(a), residue class of a * pi^(-v(a)))."""
    if not a:
        raise ZeroInput('leading digit of zero')
    val = valuation(a, v)
    exp = local_expand(a, v, val + 1)
    return val, exp.digits[0]


def uniformizer_power(v, k):
    """pi^k as an element of E (s^k = t^(-k) for the infinite place)."""
    F = v.field
    if v.is_infinite:
        return RatFunc.t(F) ** (-k)
    return RatFunc(v.pi) ** k


def monic_irreducibles(field, degree):
    """All monic irreducible polynomials of the given degree, in code order."""
    for codes in itertools.product(range(field.q), repeat=degree):
        f = Poly(field, tuple(codes) + (1,))
        if is_irreducible(f):
            yield f


def factor(f):
    """Factor a nonzero polynomial by trial division: (unit code, {monic irreducible: exponent})."""
    if not f:
        raise ZeroInput('factor of zero')
    unit = f.lc
    f = f.monic()
    out = {}
    d = 1
    while f.degree >= 1:
        if 2 * d > f.degree:
            out[f] = out.get(f, 0) + 1
            break
        for g in monic_irreducibles(f.field, d):
            k, f = _ord(f, g)
            if k:
                out[g] = k
        d += 1
    return unit, out
