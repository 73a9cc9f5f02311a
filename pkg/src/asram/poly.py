"""Dense univariate polynomials over a finite field.

A polynomial c_0 + c_1 t + ... + c_n t^n is stored as the tuple
(c_0, ..., c_n) of field-element codes (see gf.FieldSpec), with c_n != 0.
The zero polynomial is the empty tuple.  Instances are immutable.
"""

from __future__ import annotations

from .errors import DivisionByZero, FieldMismatch


class Poly:
    __slots__ = ('field', 'coeffs')

    def __init__(self, field, coeffs=()):
        c = [x if isinstance(x, int) else field.code(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, 'field', field)
        object.__setattr__(self, 'coeffs', tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError('Poly is immutable')

    @classmethod
    def const(cls, field, code):
        return cls(field, (code,))

    @classmethod
    def monomial(cls, field, n, code=1):
        return cls(field, (0,) * n + (code,))

    @classmethod
    def var(cls, field):
        return cls(field, (0, 1))

    @property
    def degree(self):
        """Degree, with deg 0 = -1."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int) and other in (0, 1):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f'Poly({self})'

    def __str__(self):
        return self.to_str('t')

    def to_str(self, var='t'):
        F = self.field
        if not self.coeffs:
            return '0'
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(F.elem_str(c))
                continue
            mono = var if i == 1 else f'{var}^{i}'
            if c == 1:
                terms.append(mono)
            else:
                cs = F.elem_str(c)
                if '+' in cs:
                    cs = f'({cs})'
                terms.append(f'{cs}*{mono}')
        return '+'.join(terms)

    def _check(self, other):
        if not isinstance(other, Poly):
            return False
        if other.field != self.field:
            raise FieldMismatch('polynomials over different fields')
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        add = self.field.add
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(self.field, [add(x, y) for x, y in zip(a, b)] + list(a[len(b):]))

    def __neg__(self):
        neg = self.field.neg
        return Poly(self.field, [neg(x) for x in self.coeffs])

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def scale(self, code):
        mul = self.field.mul
        return Poly(self.field, [mul(code, x) for x in self.coeffs])

    def shift(self, n):
        """Multiply by t^n (n >= 0)."""
        if not self.coeffs:
            return self
        return Poly(self.field, (0,) * n + self.coeffs)

    def __mul__(self, other):
        if not self._check(other):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(self.field)
        F = self.field
        add, mul = F.add, F.mul
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add(out[i + j], mul(x, y))
        return Poly(F, out)

    def __pow__(self, n):
        if n < 0:
            raise ValueError('negative exponent')
        result = Poly.const(self.field, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def frob(self, k=1):
        """Raise to the power p^k; coefficient-wise Frobenius in characteristic p."""
        F = self.field
        step = F.p ** k
        out = [0] * (self.degree * step + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * step] = F.frob(c, k)
        return Poly(F, out)

    def __divmod__(self, other):
        if not self._check(other):
            return NotImplemented
        if not other:
            raise DivisionByZero('polynomial division by zero')
        F = self.field
        r = list(self.coeffs)
        db = other.degree
        inv = F.inv(other.lc)
        b = other.coeffs
        qlen = len(r) - db
        if qlen <= 0:
            return Poly(F), self
        quo = [0] * qlen
        for i in range(qlen - 1, -1, -1):
            c = r[i + db]
            if not c:
                continue
            c = F.mul(c, inv)
            quo[i] = c
            for j, y in enumerate(b):
                if y:
                    r[i + j] = F.sub(r[i + j], F.mul(c, y))
        return Poly(F, quo), Poly(F, r[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if not self.coeffs or self.lc == 1:
            return self
        return self.scale(self.field.inv(self.lc))

    def reverse(self, n=None):
        """t^n * self(1/t), with n defaulting to the degree."""
        n = self.degree if n is None else n
        c = list(self.coeffs) + [0] * (n + 1 - len(self.coeffs))
        return Poly(self.field, c[::-1])

    def powmod(self, e, m):
        result = Poly.const(self.field, 1) % m
        base = self % m
        while e:
            if e & 1:
                result = result * base % m
            e >>= 1
            if e:
                base = base * base % m
        return result


def gcd(a, b):
    while b:
        a, b = b, a % b
    return a.monic()


def xgcd(a, b):
    """Return (d, s, u) with d = gcd(a, b) monic and s*a + u*b = d."""
    F = a.field
    r0, r1 = a, b
    s0, s1 = Poly.const(F, 1), Poly(F)
    u0, u1 = Poly(F), Poly.const(F, 1)
    while r1:
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        u0, u1 = u1, u0 - quo * u1
    if not r0:
        return r0, s0, u0
    inv = F.inv(r0.lc)
    return r0.scale(inv), s0.scale(inv), u0.scale(inv)


def invmod(a, m):
    d, s, _ = xgcd(a % m, m)
    if d != 1:
        raise DivisionByZero('not invertible modulo the given polynomial')
    return s % m


def is_irreducible(f):
    """Deterministic irreducibility test over F_q.

    f of degree n is irreducible iff gcd(f, t^(q^i) - t) = 1 for 1 <= i <= n/2
    and f divides t^(q^n) - t.
    """
    n = f.degree
    if n < 1:
        return False
    if n == 1:
        return True
    F = f.field
    t = Poly.var(F)
    f = f.monic()
    x = t % f
    for i in range(1, n + 1):
        x = x.powmod(F.q, f)
        if i <= n // 2 and gcd(f, x - t) != 1:
            return False
    return x == t % f
