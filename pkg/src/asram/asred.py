"""Artin-Schreier coset reduction at a place.

Given a in E = F_q(t) and a place v, m_value finds an element b of the coset
a + E^p - E whose valuation is maximal, together with h such that
b = a + h^p - h.  The maximum is either a negative integer prime to p,
zero (residue digit outside the image of x -> x^p - x), or unbounded.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd

from .errors import InvariantViolation, PreconditionViolated
from .ratfunc import RatFunc, leading_digit, lift, valuation

NEGATIVE = 'negative'
ZERO = 'zero'
INFINITE = 'infinite'


@dataclass(frozen=True)
class ReductionStep:
    before_valuation: int
    digit: object        # residue element cleared at this step
    shift: RatFunc       # h with b_next = b - h^p + h


@dataclass(frozen=True)
class MValResult:
    kind: str
    m: int | None
    witness_b: RatFunc
    witness_h: RatFunc
    trace: tuple = field(default=(), compare=False)

    @property
    def is_negative(self):
        return self.kind == NEGATIVE


def reduce_once(b, v):
    """Clear the leading pole digit of b when its order is divisible by p.

    Returns (b', h) with b' = b - h^p + h and v(b') > v(b).
    """
    p = b.field.p
    val = valuation(b, v)
    if not val < 0 or val % p:
        raise PreconditionViolated(f'reduce_once needs a pole of order divisible by {p}, got valuation {val}')
    _, c = leading_digit(b, v)
    R = v.residue_field
    e = R.pth_root(c)
    b_loc = v.to_local(b)
    h_loc = RatFunc(e) / RatFunc(v.local_pi) ** (-val // p)
    b_next = v.from_local(b_loc - h_loc.frob() + h_loc)
    return b_next, v.from_local(h_loc)


def _constant_step(b, v, c):
    """Clear a valuation-0 digit c lying in the image of x -> x^p - x."""
    R = v.residue_field
    e = R.as_solve(c)
    # e^p - e = c, so subtracting lift(e)^p - lift(e) kills the residue
    h = lift(e, v)
    return b - h.frob() + h, h


def m_value(a, v):
    """Compute max{v(b) : b in a + E^p - E} with a witness."""
    F = a.field
    p = F.p
    zero = RatFunc.const(F, 0)
    if not a:
        return MValResult(INFINITE, None, a, zero)
    b, H = a, zero
    steps = []
    while True:
        val = valuation(b, v)
        if val >= 1:
            result = MValResult(INFINITE, None, b, H, tuple(steps))
            break
        if val < 0:
            if val % p:
                result = MValResult(NEGATIVE, val, b, H, tuple(steps))
                break
            _, c = leading_digit(b, v)
            b, h = reduce_once(b, v)
        else:
            _, c = leading_digit(b, v)
            if v.residue_field.trace_to_prime(c):
                result = MValResult(ZERO, None, b, H, tuple(steps))
                break
            b, h = _constant_step(b, v, c)
        steps.append(ReductionStep(val, c, h))
        H = H - h
    check_witness(a, result)
    return result


def check_witness(a, result):
    """witness_b - a must equal witness_h^p - witness_h exactly."""
    h = result.witness_h
    if result.witness_b - a != h.frob() - h:
        raise InvariantViolation(f'broken coset witness for {a}')


def p_degree_totally_ramified(a, v):
    """v totally ramifies in E(x), x^p - x = a, iff the coset maximum is negative."""
    return m_value(a, v).is_negative


def is_coprime_negative(val, p):
    return val < 0 and gcd(p, -val) == 1


def trace_records(result):
    return [{'before_valuation': s.before_valuation,
             'digit': s.digit.to_str(),
             'shift': str(s.shift)} for s in result.trace]


def trace_log(result):
    """Line-oriented rendering of the reduction steps."""
    lines = []
    for i, s in enumerate(result.trace):
        lines.append(f'step {i}: valuation {s.before_valuation}, digit {s.digit.to_str()}, shift h = {s.shift}')
    return '\n'.join(lines)


def trace_json(result):
    return json.dumps(trace_records(result))
