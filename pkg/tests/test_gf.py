import itertools

import pytest
from hypothesis import given, strategies as st

from asram import GF, Poly, hilbert90, modulus_select, norm_to_prime, pth_root, trace_kernel_basis, \
    trace_operator_apply, trace_to_prime
from asram.errors import DivisionByZero, InvalidPrime, NormNotOne, NotIrreducible, ZeroInput
from asram.gf import ResidueField

from helpers import naive_mul

SMALL = [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (2, 5), (3, 3), (2, 6)]


@pytest.fixture
def F4():
    return GF(2, 2)


def test_f4_products(F4):
    g = F4.gen
    assert g * g == g + 1
    assert g * (g + 1) == 1
    for x in F4.elements():
        assert x + 0 == x


@pytest.mark.parametrize('p,r', SMALL)
def test_mul_matches_schoolbook(p, r):
    F = GF(p, r)
    for a in range(F.q):
        for b in range(F.q):
            assert F.mul(a, b) == naive_mul(F, a, b)


@pytest.mark.parametrize('p,r', SMALL)
def test_field_axioms(p, r):
    F = GF(p, r)
    els = F.elements()
    for x in els:
        assert x - x == 0
        assert x + (-x) == 0
        if x:
            assert x * (1 / x) == 1
            assert x ** (F.q - 1) == 1
    with pytest.raises(DivisionByZero):
        els[1] / els[0]


@pytest.mark.parametrize('p,r', SMALL)
def test_frobenius_is_bijective_and_pth_root_inverts_it(p, r):
    F = GF(p, r)
    els = F.elements()
    assert len({x ** p for x in els}) == F.q
    for x in els:
        y = pth_root(x)
        assert y ** p == x
        assert [z for z in els if z ** p == x] == [y]   # exhaustive uniqueness
    for x, y in itertools.product(els[:9], repeat=2):
        assert (x + y) ** p == x ** p + y ** p
        assert (x * y) ** p == x ** p * y ** p
    for c in range(p):
        assert F(c) ** p == F(c)


def test_pth_root_examples(F4):
    g = F4.gen
    assert pth_root(g) == g + 1
    assert pth_root(F4(0)) == 0
    assert pth_root(F4(1)) == 1


def test_trace_examples(F4):
    g = F4.gen
    assert trace_to_prime(g) == 1
    assert trace_to_prime(F4(0)) == 0
    assert trace_to_prime(F4(1)) == 0


@pytest.mark.parametrize('p,r', SMALL)
def test_trace_linear_and_surjective(p, r):
    F = GF(p, r)
    els = F.elements()
    for x, y in itertools.product(els[:12], repeat=2):
        assert trace_to_prime(x + y) == (trace_to_prime(x) + trace_to_prime(y)) % p
    for x in els:
        for c in range(p):
            assert trace_to_prime(x * c) == trace_to_prime(x) * c % p
    assert {trace_to_prime(x) for x in els} == set(range(p))
    assert sum(trace_to_prime(x) == 0 for x in els) == p ** (r - 1)


def test_norm_examples(F4):
    assert norm_to_prime(F4.gen) == 1
    assert norm_to_prime(F4(1)) == 1
    F9 = GF(3, 2)
    assert sum(norm_to_prime(x) == 1 for x in F9.elements()) == 4


@pytest.mark.parametrize('p,r', SMALL)
def test_norm_multiplicative(p, r):
    F = GF(p, r)
    els = F.elements()
    assert norm_to_prime(els[0]) == 0
    for x, y in itertools.product(els[:10], repeat=2):
        assert norm_to_prime(x * y) == norm_to_prime(x) * norm_to_prime(y) % p


def test_trace_operator_identity_symbolic():
    # T(Y)^p - T(Y) = Y^q - Y in F_q[Y]
    for p, r in [(2, 1), (2, 2), (2, 3), (3, 2)]:
        F = GF(p, r)
        Y = Poly.var(F)
        T = trace_operator_apply(Y, r)
        assert T ** p - T == Y ** (p ** r) - Y
    F2 = GF(2)
    Y = Poly.var(F2)
    assert trace_operator_apply(Y, 1) == Y
    assert trace_operator_apply(Poly(F2), 1) == Poly(F2)


def test_hilbert90_examples(F4):
    g = F4.gen
    assert hilbert90(g) == g + 1
    assert hilbert90(F4(1)) == 1
    F9 = GF(3, 2)
    gen = next(x for x in F9.elements() if x and len({x ** k for k in range(8)}) == 8)
    with pytest.raises(NormNotOne):
        hilbert90(gen)
    with pytest.raises(ZeroInput):
        hilbert90(F4(0))


@pytest.mark.parametrize('p,r', [(2, 2), (2, 3), (3, 2), (5, 2), (3, 3)])
def test_hilbert90_exhaustive(p, r):
    F = GF(p, r)
    for x in F.elements():
        if x:
            assert norm_to_prime(x ** (1 - p)) == 1
        if x and norm_to_prime(x) == 1:
            d0 = hilbert90(x)
            assert d0 / d0 ** p == x


def test_trace_kernel_examples():
    F4 = GF(2, 2)
    assert trace_kernel_basis(F4).basis == [F4(1)]
    assert trace_kernel_basis(GF(2)).basis == []
    assert trace_kernel_basis(GF(2)).span() == [GF(2)(0)]
    F8 = GF(2, 3)
    k = trace_kernel_basis(F8)
    assert len(k.basis) == 2
    assert all(trace_to_prime(b) == 0 for b in k.basis)
    assert sorted(x.value for x in k.span()) == sorted(x.value for x in F8.elements() if trace_to_prime(x) == 0)


@pytest.mark.parametrize('p,r', SMALL)
def test_trace_kernel_size(p, r):
    k = trace_kernel_basis(GF(p, r))
    span = k.span()
    assert len(set(span)) == p ** (r - 1)
    assert all(trace_to_prime(x) == 0 for x in span)


def _quadratic_irreducible_by_roots(p, coeffs):
    return all((coeffs[0] + coeffs[1] * x + x * x) % p for x in range(p))


def test_modulus_select_examples():
    assert modulus_select(2, 2) == (1, 1, 1)
    assert modulus_select(2, 1) == (0, 1)
    # smallest base-3 encoding c0 + 3*c1 among root-free monic quadratics
    expected = next((n % 3, n // 3, 1) for n in range(9)
                    if _quadratic_irreducible_by_roots(3, (n % 3, n // 3)))
    assert modulus_select(3, 2) == expected == (1, 0, 1)
    assert modulus_select(2, 2, (1, 1, 1)) == (1, 1, 1)
    with pytest.raises(NotIrreducible):
        modulus_select(2, 2, (1, 0, 1))
    with pytest.raises(InvalidPrime):
        modulus_select(4, 1)
    with pytest.raises(InvalidPrime):
        GF(6)


def test_user_modulus_field():
    F = GF(3, 2, (2, 2, 1))   # g^2 + 2g + 2
    g = F.gen
    assert g * g == -(2 * g + 2)
    assert F != GF(3, 2)


def test_element_str():
    F8 = GF(2, 3)
    assert str(F8.gen ** 2 + F8.gen + 1) == 'g^2+g+1'
    F9 = GF(3, 2)
    assert str(F9.gen * 2 + 1) == '2*g+1'
    assert str(F9(0)) == '0'


def test_residue_field_pth_root():
    F2 = GF(2)
    R = ResidueField(Poly(F2, [1, 1, 1]))
    tcls = Poly(F2, [0, 1])
    root = R.pth_root(tcls)
    assert R.mul(root, root) == tcls
    F4 = GF(2, 2)
    # t^2+t+1 splits over F_4; t^2+t+g does not
    R4 = ResidueField(Poly(F4, [2, 1, 1]))
    x = Poly(F4, [0, 1])
    y = R4.pth_root(x)
    assert R4.mul(y, y) == x
    for e in R4.elements():
        assert R4.frob(R4.pth_root(e)) == e


@given(st.integers(0, 15), st.integers(0, 15))
def test_residue_trace_additive(a, b):
    F4 = GF(2, 2)
    R = ResidueField(Poly(F4, [2, 1, 1]))
    x = Poly(F4, [a % 4, a // 4])
    y = Poly(F4, [b % 4, b // 4])
    assert R.trace_to_prime(x + y) == R.trace_to_prime(x) ^ R.trace_to_prime(y)


def test_residue_as_solve():
    F3 = GF(3)
    R = ResidueField(Poly(F3, [1, 0, 1]))   # t^2+1 over F_3
    for c in R.elements():
        e = R.as_solve(c)
        image = {(R.frob(x) - x).coeffs for x in R.elements()}
        assert (e is not None) == (c.coeffs in image) == (R.trace_to_prime(c) == 0)
        if e is not None:
            assert R.frob(e) - e == c
