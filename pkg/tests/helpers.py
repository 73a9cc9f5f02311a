"""Shared test utilities: random elements and naive reference arithmetic."""

import random

from asram import GF, Place, Poly, RatFunc, infinity_substitute, parse_expression, place_validate


def place_of(F, src):
    if src == 'inf':
        return Place.infinity(F)
    return place_validate(parse_expression(src, F).num)


def random_poly(F, rng, max_deg, monic=False):
    deg = rng.randint(0, max_deg)
    coeffs = [rng.randrange(F.q) for _ in range(deg)]
    coeffs.append(1 if monic else rng.randrange(1, F.q))
    return Poly(F, coeffs)


def random_local(F, pi, rng, max_pole=6, max_deg=4):
    """Random a with v_pi(a) >= -max_pole at the finite place pi."""
    k = rng.randint(0, max_pole)
    num = random_poly(F, rng, max_deg)
    if rng.random() < 0.1:
        num = Poly(F)
    while True:
        den = random_poly(F, rng, 2, monic=True)
        if den % pi:
            break
    return RatFunc(num, den * pi ** k)


def random_element(F, v, rng, max_pole=6, max_deg=4):
    """Random element with pole order <= max_pole at v, biased toward reducible cosets."""
    pi = v.local_pi
    a = random_local(F, pi, rng, max_pole, max_deg)
    if rng.random() < 0.4:
        a0 = random_local(F, pi, rng, max_pole // 2, max_deg)
        h = random_local(F, pi, rng, max_pole // F.p, 2)
        a = a0 + h.frob() - h
    return infinity_substitute(a) if v.is_infinite else a


def naive_mul(F, a, b):
    """Schoolbook product of two codes, reduced by the modulus (independent of FieldSpec tables)."""
    p, r = F.p, F.r
    x = [(a // p**i) % p for i in range(r)]
    y = [(b // p**i) % p for i in range(r)]
    prod = [0] * (2 * r)
    for i in range(r):
        for j in range(r):
            prod[i + j] += x[i] * y[j]
    m = F.modulus
    for k in range(2 * r - 1, r - 1, -1):
        c = prod[k] % p
        prod[k] = 0
        for j in range(r + 1):
            prod[k - r + j] -= c * m[j]
    return sum((prod[i] % p) * p**i for i in range(r))


def seeded(seed):
    return random.Random(seed)


FIELDS = {'F2': (2, 1), 'F4': (2, 2), 'F3': (3, 1), 'F8': (2, 3), 'F9': (3, 2)}


def field(name):
    return GF(*FIELDS[name])
