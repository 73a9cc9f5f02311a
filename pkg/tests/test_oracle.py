import math

import pytest

from asram import GF, SearchBound, brute_force_m, coset_valuation_scan, m_value, parse_expression, \
    series_root, valuation
from asram.errors import PreconditionViolated, SearchSpaceTooLarge
from asram.oracle import NoRootInResidue, SeriesRoot

from helpers import place_of, random_element, random_local, seeded

F2, F3, F4 = GF(2), GF(3), GF(2, 2)


def E(src, F=F2):
    return parse_expression(src, F)


def _achieves(a, v, h, n, val):
    return valuation(a + h ** n - h, v) == val


def test_brute_force_examples():
    t = place_of(F2, 't')
    best, h = brute_force_m(E('1/t^2'), t, SearchBound(3))
    assert best == -1 and h == E('1/t')
    best, h = brute_force_m(E('1/t^3'), t, SearchBound(3))
    assert best == -3 and h == E('0')


def test_witness_realizes_best():
    rng = seeded(21)
    for F, src in [(F2, 't'), (F2, 't^2+t+1'), (F3, 'inf'), (F4, 't+g')]:
        v = place_of(F, src)
        for _ in range(10):
            a = random_element(F, v, rng, max_pole=4)
            best, h = brute_force_m(a, v, SearchBound(3))
            assert _achieves(a, v, h, F.p, best)


def test_counterexample_a_no_coprime_valuation_in_q_coset():
    a = E('1/t^6 + g/t^3 + 1/t', F4)
    scan = coset_valuation_scan(a, place_of(F4, 't'), SearchBound(6, 'q'))
    assert scan.candidates == 4 ** 7
    assert all(x < 0 and x % 2 == 0 for x in scan.achieved)
    assert scan.best_val == -6     # bounded-scale evidence that p | M for this coset


def test_counterexample_b_scan_max_negative():
    a = E('1/t^6 + g/t^3 + t', F4)
    scan = coset_valuation_scan(a, place_of(F4, 't'), SearchBound(6, 'q'))
    assert scan.best_val < 0


def test_scan_examples():
    t = place_of(F2, 't')
    scan = coset_valuation_scan(E('1/t'), t, SearchBound(2))
    assert max(scan.achieved) == -1 == scan.best_val
    scan = coset_valuation_scan(E('0'), t, SearchBound(2))
    assert scan.best_val == math.inf and math.inf in scan.achieved


def test_search_space_cap():
    v = place_of(F4, 't^2+t+g')     # residue field of size 16
    with pytest.raises(SearchSpaceTooLarge):
        brute_force_m(E('1/t', F4), v, SearchBound(8))


def test_search_bound_validation():
    with pytest.raises(ValueError):
        SearchBound(0)
    with pytest.raises(ValueError):
        SearchBound(2, 'r')


def test_monotone_in_bound():
    rng = seeded(5)
    for F, src in [(F2, 't'), (F3, 't'), (F4, 'inf')]:
        v = place_of(F, src)
        for _ in range(10):
            a = random_element(F, v, rng)
            bests = [brute_force_m(a, v, SearchBound(B))[0] for B in range(1, 5)]
            assert bests == sorted(bests)


def test_positive_degree_parts_do_not_help():
    # adding a shift with positive valuation leaves v(b) unchanged whenever v(b) <= 0
    rng = seeded(9)
    for F, src in [(F2, 't'), (F3, 't+1'), (F4, 't')]:
        v = place_of(F, src)
        for _ in range(30):
            a = random_element(F, v, rng)
            best, h = brute_force_m(a, v, SearchBound(8 if F.q < 4 else 6))
            if best > 0:
                continue
            u = random_local(F, v.pi, rng, 0) * v.pi
            hu = h + u
            assert valuation(a + hu ** F.p - hu, v) == best


def test_agreement_small():
    rng = seeded(13)
    for F, src in [(F2, 't'), (F3, 't'), (F4, 't')]:
        v = place_of(F, src)
        for _ in range(15):
            a = random_element(F, v, rng)
            res = m_value(a, v)
            best, _ = brute_force_m(a, v, SearchBound(8 if F.q < 4 else 6))
            if res.kind == 'negative':
                assert best == res.m
            elif res.kind == 'zero':
                assert best == 0
            else:
                assert best >= 1


def test_series_root_examples():
    t = place_of(F2, 't')
    root = series_root(E('t'), t, 8)
    assert isinstance(root, SeriesRoot)
    # y = t + t^2 + t^4 + ..., up to the sign convention y^2 - y = t in char 2
    assert [d.coeffs for d in root.digits] == [(), (1,), (1,), (), (1,), (), (), ()]
    y = root.approx
    assert valuation(y ** 2 - y - E('t'), t) >= 8
    assert series_root(E('0'), t, 5).approx == E('0')
    assert series_root(E('1'), t, 5) == NoRootInResidue(E('1').num)
    with pytest.raises(PreconditionViolated):
        series_root(E('1/t'), t, 3)


@pytest.mark.parametrize('F,src', [(F2, 't'), (F2, 't^2+t+1'), (F3, 't'), (F3, 't^2+1'), (F4, 'inf'), (F4, 't+g')])
def test_series_root_solvability(F, src):
    v = place_of(F, src)
    rng = seeded(17)
    R = v.residue_field
    for _ in range(20):
        b = random_element(F, v, rng, max_pole=0)
        if valuation(b, v) < 0:
            continue
        root = series_root(b, v, 6)
        from asram.ratfunc import local_expand
        exp = local_expand(b, v, 1)
        c0 = exp.digits[0] if exp.digits else R.zero()
        solvable = R.trace_to_prime(c0) == 0
        assert isinstance(root, SeriesRoot) == solvable
        if valuation(b, v) >= 1:
            assert isinstance(root, SeriesRoot)
        if solvable:
            y = root.approx
            assert valuation(y.frob() - y - b, v) >= 6
