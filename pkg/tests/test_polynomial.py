import random

import pytest

from artinhomology.polynomial import Poly, cyclotomic, q_bracket


def test_cyclotomic_product_identity():
    # prod_{d | m} phi_d(q) = q^m - 1, the defining property
    for m in range(1, 41):
        prod = Poly.one()
        for d in range(1, m + 1):
            if m % d == 0:
                prod = prod * cyclotomic(d)
        assert prod == Poly.monomial(m) - Poly.one(), m


def test_cyclotomic_small_values():
    assert str(cyclotomic(1)) == "q - 1"
    assert str(cyclotomic(2)) == "q + 1"
    assert cyclotomic(6) == Poly((1, -1, 1))
    assert cyclotomic(2).constant_term() == 1


def test_q_bracket():
    for m in range(1, 20):
        assert q_bracket(m) * Poly((-1, 1)) == Poly.monomial(m) - Poly.one()
    with pytest.raises(ValueError):
        q_bracket(0)


def test_divmod_and_gcd_random():
    rng = random.Random(7)
    for _ in range(200):
        a = Poly([rng.randint(-4, 4) for _ in range(rng.randint(0, 6))])
        b = Poly([rng.randint(-4, 4) for _ in range(rng.randint(1, 5))])
        if b.is_zero():
            continue
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.is_zero() or r.degree < b.degree
        g = Poly([rng.randint(-3, 3) for _ in range(rng.randint(1, 4))])
        if g.is_zero():
            continue
        common = (a * g).gcd(b * g)
        assert g.monic().divides(common)


def test_exact_div_raises_on_remainder():
    with pytest.raises(ValueError):
        Poly((1, 1, 1)).exact_div(Poly((0, 1)))


def test_monic_and_pow():
    p = Poly((2, 0, 4))
    assert p.monic().leading() == 1
    assert (Poly((0, 1)) ** 5) == Poly.monomial(5)
    assert str(Poly((1, 0, -2))) == "-2*q^2 + 1"
