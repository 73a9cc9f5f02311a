"""Independent verification engines.

brute_force_m / coset_valuation_scan enumerate every shift
h = c_0 + sum_{j=1..B} c_j pi^(-j) (c_j over residue representatives) and
measure v(a + h^n - h) for n = p or q.  Because h -> h^n - h is additive,
the local expansion of a + h^n - h is the expansion of a plus one
precomputed table row per digit position; the scan is vectorized over
those sums with numpy.  Nothing here uses pth roots or reduction steps.

series_root solves y^p - y = b digit by digit in the completion.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

from .errors import PreconditionViolated, SearchSpaceTooLarge
from .ratfunc import RatFunc, lift, local_expand, valuation

MAX_SEARCH = 10**7
_BLOCK_ROWS = 1 << 18


@dataclass(frozen=True)
class SearchBound:
    B: int
    coset_power: str = 'p'   # 'p' or 'q'

    def __post_init__(self):
        if self.B < 1:
            raise ValueError('pole bound B must be >= 1')
        if self.coset_power not in ('p', 'q'):
            raise ValueError("coset_power must be 'p' or 'q'")

    def exponent(self, field):
        return field.p if self.coset_power == 'p' else field.q


@dataclass(frozen=True)
class ScanResult:
    best_val: float          # int, or INF when some shift gives exactly 0
    witness_h: RatFunc
    achieved: tuple          # sorted achieved valuations
    bound: SearchBound
    candidates: int


class _Window:
    """Flattened F_p coordinates of expansion digits at exponents lo .. hi-1."""

    def __init__(self, v, lo, hi):
        self.v = v
        self.R = v.residue_field
        self.lo, self.hi = lo, hi
        self.ndig = hi - lo
        self.dim = self.R.dim

    def vector(self, x):
        out = np.zeros((self.ndig, self.dim), dtype=np.int16)
        if x:
            exp = local_expand(x, self.v, self.hi)
            if exp.digits and exp.start < self.lo:
                raise AssertionError('expansion below the scan window')
            for n, d in exp:
                out[n - self.lo] = self.R.to_vector(d)
        return out.reshape(-1)


def _digit_tables(v, B, n, win):
    """tables[j][c] = expansion of (lift(c) pi^-j)^n - lift(c) pi^-j, for j = 0..B."""
    R = v.residue_field
    reps = list(R.elements())
    pi_inv = 1 / RatFunc(v.local_pi)
    tables = []
    shifts = []
    for j in range(B + 1):
        rows, hs = [], []
        for c in reps:
            h_loc = RatFunc(c) * pi_inv ** j
            h = v.from_local(h_loc)
            rows.append(win.vector(h ** n - h))
            hs.append(h)
        tables.append(np.array(rows, dtype=np.int16))
        shifts.append(hs)
    return tables, shifts


@functools.lru_cache(maxsize=8)
def _prepared(v, B, n):
    """Digit tables plus the vectorized sum over the inner digit positions."""
    Q = v.residue_field.size
    p = v.field.p
    win = _Window(v, -B * n, 1)
    tables, shifts = _digit_tables(v, B, n, win)
    # inner digits j = 0..k-1 are vectorized, outer digits are looped over
    k = 0
    size = 1
    while k <= B and size * Q <= _BLOCK_ROWS:
        size *= Q
        k += 1
    width = win.ndig * win.dim
    inner = np.zeros((1, width), dtype=np.int16)
    for j in range(k):
        inner = (inner[:, None, :] + tables[j][None, :, :]).reshape(-1, width) % p
    return win, tables, shifts, k, inner


def _scan(a, v, bound, keep_all=True):
    F = a.field
    R = v.residue_field
    Q = R.size
    B = bound.B
    n = bound.exponent(F)
    total = Q ** (B + 1)
    if total > MAX_SEARCH:
        raise SearchSpaceTooLarge(f'{Q}^{B + 1} = {total} candidates exceeds {MAX_SEARCH}')
    zero = RatFunc.const(F, 0)
    va = valuation(a, v)
    lo = -B * n
    if va < lo:
        # every shift in the family has poles of order <= B*n < -v(a)
        return ScanResult(va, zero, (va,), bound, total)

    win, tables, shifts, k, inner = _prepared(v, B, n)
    p = F.p
    avec = win.vector(a)

    best = None
    best_idx = None
    achieved = set()
    deferred = []
    for outer in itertools.product(range(Q), repeat=B + 1 - k):
        base = avec.copy()
        for j, c in zip(range(k, B + 1), outer):
            base += tables[j][c]
        block = (inner + base) % p
        nz = block.reshape(block.shape[0], win.ndig, win.dim).any(axis=2)
        has = nz.any(axis=1)
        vals = lo + nz.argmax(axis=1)
        if has.any():
            hv = vals[has]
            if keep_all:
                achieved.update(int(x) for x in np.unique(hv))
            i = int(np.flatnonzero(has)[hv.argmax()])
            if best is None or int(vals[i]) > best:
                best, best_idx = int(vals[i]), (i, outer)
        for i in np.flatnonzero(~has)[:64]:
            deferred.append((int(i), outer))

    def shift_of(idx):
        i, outer = idx
        digits = []
        for _ in range(k):
            digits.append(i % Q)
            i //= Q
        digits.reverse()    # the last inner position varies fastest
        digits.extend(outer)
        h = zero
        for j, c in enumerate(digits):
            h = h + shifts[j][c]
        return h

    # rows whose window is all zero have valuation >= 1; evaluate them exactly
    for idx in deferred:
        h = shift_of(idx)
        val = valuation(a + h ** n - h, v)
        achieved.add(val)
        if best is None or val > best:
            best, best_idx = val, idx
    return ScanResult(best, shift_of(best_idx), tuple(sorted(achieved)), bound, total)


def brute_force_m(a, v, bound):
    """Exhaustive lower bound for the coset maximum: (best valuation, witness h)."""
    res = _scan(a, v, bound, keep_all=False)
    return res.best_val, res.witness_h


def coset_valuation_scan(a, v, bound):
    """Full ScanResult, including the sorted set of achieved valuations."""
    return _scan(a, v, bound)


@dataclass(frozen=True)
class SeriesRoot:
    """Root y of y^p - y = b modulo pi^precision.

    digits[i] is the residue digit at exponent i; approx is y truncated, in E.
    """

    digits: tuple
    precision: int
    approx: RatFunc


@dataclass(frozen=True)
class NoRootInResidue:
    residue_digit: object   # constant digit of b with nonzero trace to F_p


def series_root(b, v, n):
    """Solve y^p - y = b in the completion at v to precision n, digit by digit."""
    val = valuation(b, v)
    if val < 0:
        raise PreconditionViolated(f'series_root needs v(b) >= 0, got {val}')
    F = b.field
    R = v.residue_field
    zero = RatFunc.const(F, 0)
    y = zero
    exp0 = local_expand(b, v, 1)
    if exp0.digits:
        c0 = exp0.digits[0]
        e = R.as_solve(c0)
        if e is None:
            return NoRootInResidue(c0)
        y = lift(e, v)
    pi = v.from_local(RatFunc(v.local_pi))
    for j in range(1, n):
        resid = b - (y.frob() - y)
        if valuation(resid, v) > j:
            continue
        d = local_expand(resid, v, j + 1).digit(j)
        # y -> y - d pi^j removes the digit; (d pi^j)^p only touches exponent >= pj > j
        y = y - lift(d, v) * pi ** j
    resid = b - (y.frob() - y)
    if valuation(resid, v) < n:
        raise AssertionError('series_root residual above precision')
    exp = local_expand(y, v, n) if y else None
    digits = [R.zero()] * n
    if exp is not None:
        for i, d in exp:
            digits[i] = d
    return SeriesRoot(tuple(digits), n, y)
