"""Expression parser for elements of F_q(t).

Grammar (unary minus accepted as an extension)::

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := ('-')? atom ('^' ('-')? integer)?
    atom   := VAR | GEN | integer | '(' expr ')'

VAR is 't' and GEN is 'g' by default.  Integers are reduced mod p.
"""

from __future__ import annotations

import re

from .errors import ExpressionSyntaxError, UnknownSymbol
from .ratfunc import Place, RatFunc, place_validate

_TOKEN = re.compile(r'\s*(?:(\d+)|([A-Za-z_]\w*)|(\*\*|[-+*/^()]))')


def tokenize(src):
    pos = 0
    out = []
    src = src.rstrip()
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m:
            raise ExpressionSyntaxError(f'unexpected character {src[pos]!r}', pos)
        num, name, op = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            out.append(('int', int(num), start))
        elif name is not None:
            out.append(('name', name, start))
        else:
            out.append(('op', '^' if op == '**' else op, start))
        pos = m.end()
    out.append(('end', None, len(src)))
    return out


class _Parser:
    def __init__(self, src, field, var, gen):
        self.toks = tokenize(src)
        self.i = 0
        self.F = field
        self.var = var
        self.gen = gen

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def accept(self, op):
        kind, val, _ = self.peek()
        if kind == 'op' and val == op:
            self.i += 1
            return True
        return False

    def expect(self, op):
        if not self.accept(op):
            kind, val, pos = self.peek()
            found = 'end of input' if kind == 'end' else repr(val)
            raise ExpressionSyntaxError(f'expected {op!r}, found {found}', pos)

    def parse(self):
        x = self.expr()
        kind, val, pos = self.peek()
        if kind != 'end':
            raise ExpressionSyntaxError(f'unexpected {val!r}', pos)
        return x

    def expr(self):
        x = self.term()
        while True:
            if self.accept('+'):
                x = x + self.term()
            elif self.accept('-'):
                x = x - self.term()
            else:
                return x

    def term(self):
        x = self.factor()
        while True:
            if self.accept('*'):
                x = x * self.factor()
            elif self.accept('/'):
                x = x / self.factor()
            else:
                return x

    def factor(self):
        if self.accept('-'):
            return -self.factor()
        x = self.atom()
        if self.accept('^'):
            neg = self.accept('-')
            kind, val, pos = self.take()
            if kind != 'int':
                raise ExpressionSyntaxError('exponent must be an integer', pos)
            x = x ** (-val if neg else val)
        return x

    def atom(self):
        kind, val, pos = self.take()
        F = self.F
        if kind == 'int':
            return RatFunc.const(F, val)
        if kind == 'name':
            if val == self.var:
                return RatFunc.t(F)
            if self.gen is not None and val == self.gen:
                return RatFunc.const(F, F.gen)
            raise UnknownSymbol(f'unknown symbol {val!r}', pos)
        if kind == 'op' and val == '(':
            x = self.expr()
            self.expect(')')
            return x
        found = 'end of input' if kind == 'end' else repr(val)
        raise ExpressionSyntaxError(f'unexpected {found}', pos)


def parse_expression(src, field, *, var='t', gen='g'):
    """Parse src into a canonical RatFunc over field."""
    return _Parser(src, field, var, gen).parse()


def parse_element(src, field):
    """Parse a constant expression in g into an FqElem."""
    x = parse_expression(src, field)
    if not x.is_poly() or x.num.degree > 0:
        raise ExpressionSyntaxError(f'{src!r} is not a constant of {field}', 0)
    return field.elem(x.num.coeffs[0] if x.num else 0)


def parse_poly(src, field, *, var='t', gen='g'):
    x = parse_expression(src, field, var=var, gen=gen)
    if not x.is_poly():
        raise ExpressionSyntaxError(f'{src!r} is not a polynomial', 0)
    return x.num


def parse_modulus(src, p):
    """Coefficients (low to high) of a polynomial in g over F_p."""
    from .gf import GF
    return parse_poly(src, GF(p), var='g', gen=None).coeffs


def parse_place(src, field):
    if src.strip() == 'inf':
        return Place.infinity(field)
    return place_validate(parse_poly(src, field))
