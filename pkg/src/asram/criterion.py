"""Total ramification of a place in F = E(x), x^q - x = a, over E = F_q(t).

The minimal subextensions of F/E are E(z_gamma) with z_gamma^p - z_gamma = gamma*a,
one per class gamma in F_q^x / F_p^x.  The place v totally ramifies in F iff it
ramifies in every one of them, i.e. iff m(gamma*a, v) < 0 for every class.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import linalg
from .asred import MValResult, is_coprime_negative, m_value
from .errors import GammaIsOne, GammaNotNormOne, InvalidD, InvariantViolation
from .gf import fp_functional, norm_to_prime
from .ratfunc import RatFunc, valuation

TOTALLY_RAMIFIED = 'TotallyRamified'
RAMIFIED_NOT_TOTALLY = 'RamifiedNotTotally'
UNRAMIFIED = 'Unramified'


@dataclass(frozen=True)
class GammaClassResult:
    gamma: object                  # FqElem, smallest code in its F_p^x class
    mval: MValResult
    subextension_generator: RatFunc


@dataclass(frozen=True)
class RamificationReport:
    per_gamma: tuple
    decision: str
    inertia_basis: tuple
    ramification_index: int


def class_representative(x):
    """Smallest-code element of x * F_p^x."""
    F = x.field
    return min((x * c for c in range(1, F.p)), key=lambda y: y.value)


def gamma_representatives(F):
    """One element per class of F_q^x / F_p^x, ascending by code."""
    seen = set()
    reps = []
    for code in range(1, F.q):
        if code in seen:
            continue
        reps.append(F.elem(code))
        seen.update(F.mul(code, c) for c in range(1, F.p))
    return reps


def minimal_subextension_generators(a):
    """Pairs (gamma, gamma*a); X^p - X - gamma*a cuts out one minimal subextension each."""
    return [(g, a * g) for g in gamma_representatives(a.field)]


def inertia_subgroup(report_or_classes, F=None):
    """F_p-basis of the inertia group, viewed inside Gal(F/E) = F_q.

    I = {beta : Tr(gamma*beta) = 0 for every class gamma that is unramified}.
    """
    classes = getattr(report_or_classes, 'per_gamma', report_or_classes)
    if F is None:
        F = classes[0].gamma.field
    rows = [fp_functional(F, lambda b, g=c.gamma.value: F.trace(F.mul(g, b)))
            for c in classes if not c.mval.is_negative]
    return [F(v) for v in linalg.nullspace(rows, F.r, F.p)]


def classify_ramification(a, v):
    F = a.field
    per_gamma = []
    for gamma, gen in minimal_subextension_generators(a):
        per_gamma.append(GammaClassResult(gamma, m_value(gen, v), gen))
    negatives = sum(c.mval.is_negative for c in per_gamma)
    if negatives == len(per_gamma):
        decision = TOTALLY_RAMIFIED
    elif negatives == 0:
        decision = UNRAMIFIED
    else:
        decision = RAMIFIED_NOT_TOTALLY
    basis = inertia_subgroup(per_gamma, F)
    report = RamificationReport(tuple(per_gamma), decision, tuple(basis), F.p ** len(basis))
    check_report(report, v)
    return report


def check_report(report, v):
    """Internal consistency of a report; raises InvariantViolation."""
    F = report.per_gamma[0].gamma.field
    p, q = F.p, F.q
    for c in report.per_gamma:
        val = valuation(c.mval.witness_b, v)
        # all-negative condition <=> witnesses with negative valuation prime to p
        if c.mval.is_negative != is_coprime_negative(val, p):
            raise InvariantViolation(f'class {c.gamma}: kind {c.mval.kind} but witness valuation {val}')
        if c.mval.is_negative and c.mval.m != val:
            raise InvariantViolation(f'class {c.gamma}: m {c.mval.m} != witness valuation {val}')
    e = report.ramification_index
    unram = sum(not c.mval.is_negative for c in report.per_gamma)
    # the unramified classes plus 0 form the annihilator of I, an F_p-subspace
    codim = len(F.modulus) - 1 - len(report.inertia_basis)
    if unram != (p**codim - 1) // (p - 1):
        raise InvariantViolation(f'{unram} unramified classes do not form a subspace of codimension {codim}')
    expected = {TOTALLY_RAMIFIED: e == q, UNRAMIFIED: e == 1, RAMIFIED_NOT_TOTALLY: 1 < e < q}
    if not expected[report.decision]:
        raise InvariantViolation(f'decision {report.decision} with ramification index {e}')


def _check_example_params(F, variant, d, gamma):
    if variant not in ('a', 'b'):
        raise ValueError(f'unknown variant {variant!r}')
    if d < 1 or gcd(d, F.p) != 1:
        raise InvalidD(f'd = {d} must be a positive integer prime to p = {F.p}')
    if variant == 'a' and d == 1:
        raise InvalidD('variant a needs d > 1')
    if gamma == 1:
        raise GammaIsOne('gamma must differ from 1')
    if not gamma or norm_to_prime(gamma) != 1:
        raise GammaNotNormOne(f'gamma = {gamma} does not have norm 1')


def example_f(F, variant):
    t = RatFunc.t(F)
    return 1 / t if variant == 'a' else t


def build_paper_example(variant, F, d, gamma):
    """a(t) = 1/t^(dp) - gamma/t^d + f(t), with f = 1/t (variant a) or t (variant b)."""
    _check_example_params(F, variant, d, gamma)
    t = RatFunc.t(F)
    return t ** (-d * F.p) - gamma * t ** (-d) + example_f(F, variant)


def b_delta_witness(F, d, gamma, delta, f):
    """(eps - delta*gamma)/t^d + delta*f with eps^p = delta.

    Equals delta*a - (eps/t^d)^p + eps/t^d for a = 1/t^(dp) - gamma/t^d + f.
    """
    if not delta:
        raise ValueError('delta must be nonzero')
    t = RatFunc.t(F)
    eps = delta.pth_root()
    b = (eps - delta * gamma) * t ** (-d) + f * delta
    a = t ** (-d * F.p) - gamma * t ** (-d) + f
    w = eps * t ** (-d)
    if b != a * delta - w.frob() + w:
        raise InvariantViolation('b_delta is not in the coset of delta*a')
    return b
