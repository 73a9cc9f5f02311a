"""Finite fields F_q = F_p[g]/(modulus) and residue fields F_q[t]/(pi).

Elements of F_q are coded as integers in [0, q): the code of
c_0 + c_1 g + ... + c_{r-1} g^(r-1) is c_0 + c_1 p + ... + c_{r-1} p^(r-1).
FieldSpec does arithmetic on codes with log/antilog tables; FqElem is the
user-facing wrapper with overloaded operators.
"""

from __future__ import annotations

import functools
import itertools

from . import linalg
from .errors import (DivisionByZero, FieldMismatch, InvalidPrime, NormNotOne,
                     NotIrreducible, ZeroInput)
from .poly import Poly, is_irreducible

_ADD_TABLE_LIMIT = 1024


def is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _encode(digits, p):
    return sum(d * p**i for i, d in enumerate(digits))


def modulus_select(p, r, modulus=None):
    """Return the defining polynomial of F_{p^r} as a coefficient tuple, low to high.

    Without an override this is the monic irreducible of degree r whose
    coefficient vector has the smallest base-p encoding.
    """
    if not is_prime(p):
        raise InvalidPrime(f'{p} is not prime')
    if r < 1:
        raise ValueError('extension degree must be >= 1')
    Fp = GF(p)
    if modulus is not None:
        m = Poly(Fp, [c % p for c in modulus])
        if m.degree != r:
            raise NotIrreducible(f'modulus has degree {m.degree}, expected {r}')
        if not is_irreducible(m):
            raise NotIrreducible(f'modulus {m.to_str("g")} is reducible over F_{p}')
        return m.monic().coeffs
    if r == 1:
        return (0, 1)
    for n in range(p**r):
        digits = [(n // p**i) % p for i in range(r)] + [1]
        if digits[0] and is_irreducible(Poly(Fp, digits)):
            return tuple(digits)
    raise AssertionError('unreachable: irreducibles exist in every degree')


@functools.lru_cache(maxsize=None)
def GF(p, r=1, modulus=None):
    """Create (cached) the field F_{p^r}; modulus is an optional coefficient tuple."""
    if r == 1 and modulus is None:
        if not is_prime(p):
            raise InvalidPrime(f'{p} is not prime')
        return FieldSpec(p, 1, (0, 1))
    return FieldSpec(p, r, modulus_select(p, r, modulus))


class FieldSpec:
    """The finite field F_q, q = p^r, presented by a fixed monic irreducible modulus.

    Use GF() rather than calling this directly; it validates the modulus.
    """

    def __init__(self, p, r, modulus):
        self.p = p
        self.r = r
        self.q = p**r
        self.modulus = tuple(modulus)
        self._build_tables()

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        return f'GF({self.p}, {self.r}, modulus={self.modulus})'

    def __str__(self):
        return f'F_{self.q}'

    # table construction

    def digits(self, code):
        p = self.p
        return [(code // p**i) % p for i in range(self.r)]

    def _mul_slow(self, a, b):
        p, r, m = self.p, self.r, self.modulus
        x, y = self.digits(a), self.digits(b)
        prod = [0] * (2 * r - 1)
        for i, u in enumerate(x):
            for j, w in enumerate(y):
                prod[i + j] = (prod[i + j] + u * w) % p
        for k in range(len(prod) - 1, r - 1, -1):
            c = prod[k]
            if c:
                for j in range(r + 1):
                    prod[k - r + j] = (prod[k - r + j] - c * m[j]) % p
        return _encode(prod[:r], p)

    def _build_tables(self):
        q, p = self.q, self.p
        for cand in range(1, q):
            exp = [1]
            x = cand
            while x != 1:
                exp.append(x)
                x = self._mul_slow(x, cand)
            if len(exp) == q - 1:
                break
        self._exp = exp + exp
        self._log = [0] * q
        for i, x in enumerate(exp):
            self._log[x] = i
        self._neg = [_encode([-d % p for d in self.digits(c)], p) for c in range(q)]
        if p != 2 and q <= _ADD_TABLE_LIMIT:
            dig = [self.digits(c) for c in range(q)]
            self._add_table = [_encode([(u + w) % p for u, w in zip(dig[a], dig[b])], p)
                               for a in range(q) for b in range(q)]
        else:
            self._add_table = None

    # arithmetic on codes

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a * self.q + b]
        p = self.p
        return _encode([(u + w) % p for u, w in zip(self.digits(a), self.digits(b))], p)

    def neg(self, a):
        return self._neg[a]

    def sub(self, a, b):
        return self.add(a, self._neg[b])

    def mul(self, a, b):
        if not a or not b:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if not a:
            raise DivisionByZero('division by zero in ' + str(self))
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if not a:
            if n < 0:
                raise DivisionByZero('zero to a negative power')
            return 1 if n == 0 else 0
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def frob(self, a, k=1):
        return self.pow(a, self.p**k)

    def pth_root(self, a):
        return self.frob(a, self.r - 1)

    def trace(self, a):
        """Absolute trace to F_p, returned as an integer in [0, p)."""
        s = 0
        for i in range(self.r):
            s = self.add(s, self.frob(a, i))
        return s

    def norm(self, a):
        """Absolute norm to F_p, returned as an integer in [0, p)."""
        return self.pow(a, (self.q - 1) // (self.p - 1))

    # conversions

    def code(self, x):
        """Code of x; plain ints are read as integers (reduced mod p)."""
        if isinstance(x, FqElem):
            if x.field != self:
                raise FieldMismatch('element of a different field')
            return x.value
        if isinstance(x, int):
            return x % self.p
        raise TypeError(f'cannot convert {type(x).__name__} to an element of {self}')

    def __call__(self, x=0):
        if isinstance(x, (list, tuple)):
            return FqElem(self, _encode([d % self.p for d in x], self.p))
        return FqElem(self, self.code(x))

    def elem(self, code):
        return FqElem(self, code)

    @property
    def gen(self):
        """The class of g modulo the modulus (for r = 1 this is a root of a linear modulus)."""
        if self.r == 1:
            return FqElem(self, -self.modulus[0] % self.p)
        return FqElem(self, self.p)

    def elements(self):
        return [FqElem(self, c) for c in range(self.q)]

    def elem_str(self, code):
        if not code:
            return '0'
        terms = []
        for i, c in reversed(list(enumerate(self.digits(code)))):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = 'g' if i == 1 else f'g^{i}'
                terms.append(mono if c == 1 else f'{c}*{mono}')
        return '+'.join(terms)


class FqElem:
    """An element of a FieldSpec; immutable and hashable."""

    __slots__ = ('field', 'value')

    def __init__(self, field, value):
        object.__setattr__(self, 'field', field)
        object.__setattr__(self, 'value', value)

    def __setattr__(self, name, value):
        raise AttributeError('FqElem is immutable')

    @property
    def coeffs(self):
        return tuple(self.field.digits(self.value))

    def _other(self, other):
        if isinstance(other, (FqElem, int)):
            return self.field.code(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else FqElem(self.field, self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else FqElem(self.field, self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else FqElem(self.field, self.field.sub(o, self.value))

    def __neg__(self):
        return FqElem(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else FqElem(self.field, self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else FqElem(self.field, self.field.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else FqElem(self.field, self.field.div(o, self.value))

    def __pow__(self, n):
        return FqElem(self.field, self.field.pow(self.value, n))

    def __eq__(self, other):
        if isinstance(other, FqElem):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field.code(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return self.field.elem_str(self.value)

    def __repr__(self):
        return f'FqElem({self}, {self.field})'

    def pth_root(self):
        return FqElem(self.field, self.field.pth_root(self.value))

    def frob(self, k=1):
        return FqElem(self.field, self.field.frob(self.value, k))


def pth_root(x):
    """The unique y with y^p = x (works for FqElem)."""
    return x.pth_root()


def trace_to_prime(u):
    return u.field.trace(u.value)


def norm_to_prime(u):
    return u.field.norm(u.value)


def trace_operator_apply(y, r):
    """Return y + y^p + ... + y^(p^(r-1)).

    y may be anything with a ``frob(k)`` method (FqElem, Poly, RatFunc).
    The result z satisfies z^p - z = y^q - y.
    """
    z = y
    for i in range(1, r):
        z = z + y.frob(i)
    return z


def hilbert90(gamma):
    """Return the smallest-code delta_0 with delta_0 / delta_0^p = gamma.

    Exists exactly when gamma has norm 1.
    """
    F = gamma.field
    if not gamma:
        raise ZeroInput('hilbert90 of zero')
    if norm_to_prime(gamma) != 1:
        raise NormNotOne(f'{gamma} has norm {norm_to_prime(gamma)}, not 1')
    for c in range(1, F.q):
        if F.div(c, F.frob(c)) == gamma.value:
            return FqElem(F, c)
    raise AssertionError('unreachable: Hilbert 90')


class TraceKernel:
    """F_p-basis of the kernel of the absolute trace F_q -> F_p."""

    def __init__(self, field, basis):
        self.field = field
        self.basis = basis

    def span(self):
        F = self.field
        out = []
        for coeffs in itertools.product(range(F.p), repeat=len(self.basis)):
            s = F(0)
            for c, b in zip(coeffs, self.basis):
                s = s + b * c
            out.append(s)
        return out

    def __repr__(self):
        return f'TraceKernel([{", ".join(map(str, self.basis))}])'


def fp_functional(F, f):
    """Matrix row of an F_p-linear map F_q -> F_p w.r.t. the basis 1, g, ..., g^(r-1)."""
    return [f(F.p**i) for i in range(F.r)]


def trace_kernel_basis(F):
    row = fp_functional(F, F.trace)
    basis = linalg.nullspace([row], F.r, F.p)
    return TraceKernel(F, [F(v) for v in basis])


class ResidueField:
    """The residue field F_q[t]/(pi) of a finite place, kept as a tower over F_q.

    Elements are Poly instances of degree < deg(pi).
    """

    def __init__(self, pi):
        self.base = pi.field
        self.pi = pi
        self.d = pi.degree
        self.size = self.base.q ** self.d
        self.dim = self.base.r * self.d   # dimension over F_p
        self._as_matrix = None

    def __repr__(self):
        return f'ResidueField({self.pi})'

    def reduce(self, x):
        return x % self.pi

    def zero(self):
        return Poly(self.base)

    def mul(self, x, y):
        return x * y % self.pi

    def frob(self, x, k=1):
        for _ in range(k):
            x = x.frob() % self.pi
        return x

    def pth_root(self, x):
        return self.frob(x % self.pi, self.dim - 1)

    def trace_to_prime(self, x):
        """Composite trace F_q[t]/(pi) -> F_q -> F_p, as an integer in [0, p)."""
        s = Poly(self.base)
        y = x % self.pi
        for _ in range(self.dim):
            s = s + y
            y = y.frob() % self.pi
        assert s.degree <= 0 and (not s or s.coeffs[0] < self.base.p)
        return s.coeffs[0] if s else 0

    def to_vector(self, x):
        """Coordinates over F_p: digits of each F_q coefficient, low degree first."""
        c = list(x.coeffs) + [0] * (self.d - len(x.coeffs))
        out = []
        for code in c:
            out.extend(self.base.digits(code))
        return out

    def from_vector(self, v):
        r, p = self.base.r, self.base.p
        return Poly(self.base, [_encode(v[i * r:(i + 1) * r], p) for i in range(self.d)])

    def basis(self):
        out = []
        for i in range(self.dim):
            v = [0] * self.dim
            v[i] = 1
            out.append(self.from_vector(v))
        return out

    def elements(self):
        for codes in itertools.product(range(self.base.q), repeat=self.d):
            yield Poly(self.base, codes)

    def as_solve(self, c):
        """A solution e of e^p - e = c in the residue field, or None if none exists."""
        p = self.base.p
        if self._as_matrix is None:
            cols = [self.to_vector(self.frob(b) - b) for b in self.basis()]
            self._as_matrix = [list(row) for row in zip(*cols)]
        sol = linalg.solve(self._as_matrix, self.to_vector(c % self.pi), p)
        return None if sol is None else self.from_vector(sol)
