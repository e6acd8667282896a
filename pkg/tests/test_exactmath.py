from __future__ import annotations

import random
from fractions import Fraction

import pytest

from ceresa_kit.errors import DomainError, NotRationalError
from ceresa_kit.exactmath import (
    CycNum,
    UPoly,
    cyc_to_rational,
    cyclotomic_polynomial,
    euler_phi,
    poly_discriminant,
    rat,
    rat_str,
    rational_nth_root,
    resultant,
    root_of_unity,
)
from oracles import random_rational


def quartic_poly(a, b, c) -> UPoly:
    return UPoly([c, b, a, 0, 1])


def closed_form_disc(a, b, c) -> Fraction:
    a, b, c = rat(a), rat(b), rat(c)
    return (
        -4 * a**3 * b**2
        - 27 * b**4
        + 16 * a**4 * c
        + 144 * a * b**2 * c
        - 128 * a**2 * c**2
        + 256 * c**3
    )


def test_rat_parsing_and_serialization():
    assert rat("3/4") == Fraction(3, 4)
    assert rat("-12") == -12
    assert rat("2/4") == Fraction(1, 2)
    assert rat_str(Fraction(5, 2)) == "5/2"
    assert rat_str(Fraction(-7)) == "-7"
    assert rat_str(Fraction(3, -6)) == "-1/2"
    with pytest.raises(DomainError):
        rat("1/-2")
    with pytest.raises(DomainError):
        rat("abc")
    with pytest.raises(DomainError):
        rat(1.5)


def test_rational_nth_root():
    assert rational_nth_root(Fraction(4, 9), 2) == Fraction(2, 3)
    assert rational_nth_root(Fraction(-8, 27), 3) == Fraction(-2, 3)
    assert rational_nth_root(Fraction(16, 81), 4) == Fraction(2, 3)
    assert rational_nth_root(Fraction(2), 2) is None
    assert rational_nth_root(Fraction(-1), 2) is None
    big = Fraction(10**60 + 1) ** 3
    assert rational_nth_root(big, 3) == 10**60 + 1


def test_upoly_divmod_roundtrip():
    rng = random.Random(7)
    for _ in range(100):
        p = UPoly([random_rational(rng) for _ in range(rng.randint(0, 6))])
        q = UPoly([random_rational(rng) for _ in range(rng.randint(1, 4))])
        if q.is_zero():
            continue
        quot, rem = divmod(p, q)
        assert quot * q + rem == p
        assert rem.is_zero() or rem.degree() < q.degree()


def test_discriminant_examples():
    assert poly_discriminant(UPoly([-1, 0, 1])) == 4
    assert poly_discriminant(quartic_poly(1, 0, 1)) == 144
    assert poly_discriminant(quartic_poly(0, 1, 0)) == -27
    with pytest.raises(DomainError):
        poly_discriminant(UPoly.zero())
    with pytest.raises(DomainError):
        poly_discriminant(UPoly.const(5))


def test_discriminant_matches_closed_form_on_random_quartics():
    rng = random.Random(2024)
    for _ in range(1000):
        a, b, c = (random_rational(rng) for _ in range(3))
        assert poly_discriminant(quartic_poly(a, b, c)) == closed_form_disc(a, b, c)


def test_resultant_basics():
    # Res(p, q) multiplicativity on a split example: p = (x-1)(x-2)
    p = UPoly([2, -3, 1])
    q = UPoly([1, 1])  # x + 1
    assert resultant(p, q) == q.evaluate(1) * q.evaluate(2)
    assert resultant(q, p) == resultant(p, q)  # deg p * deg q is even


def test_cyclotomic_examples():
    assert cyclotomic_polynomial(1) == UPoly([-1, 1])
    assert cyclotomic_polynomial(3) == UPoly([1, 1, 1])
    # division oracle: x^9 - 1 = Phi_1 Phi_3 Phi_9, so Phi_9 = (x^9-1)/(x^3-1)
    x9 = UPoly.x_pow(9) - UPoly.one()
    x3 = UPoly.x_pow(3) - UPoly.one()
    quot, rem = divmod(x9, x3)
    assert rem.is_zero()
    assert cyclotomic_polynomial(9) == quot == UPoly([1, 0, 0, 1, 0, 0, 1])
    for level in range(1, 31):
        assert cyclotomic_polynomial(level).degree() == euler_phi(level)


def test_root_of_unity_examples():
    assert root_of_unity(3, 0) == 1
    assert root_of_unity(3, 2).rep == UPoly([-1, -1])
    assert root_of_unity(4, 3).rep == UPoly([0, -1])


def test_cyc_to_rational():
    assert cyc_to_rational(CycNum.from_rational(Fraction(5, 2), 3)) == Fraction(5, 2)
    with pytest.raises(NotRationalError):
        cyc_to_rational(root_of_unity(3, 1))
    total = root_of_unity(3, 0) + root_of_unity(3, 1) + root_of_unity(3, 2)
    assert cyc_to_rational(total) == 0


def test_cycnum_ring_axioms():
    rng = random.Random(5)
    for level in (3, 5, 7, 9, 12, 15):
        for _ in range(20):
            a, b, c = (
                sum(
                    (random_rational(rng, 5, 3) * root_of_unity(level, rng.randrange(level))
                     for _ in range(3)),
                    CycNum.from_rational(0, level),
                )
                for _ in range(3)
            )
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a + b == b + a
            assert a * b == b * a


def test_roots_of_unity_have_exact_order():
    for level in range(1, 25):
        for e in range(level):
            assert root_of_unity(level, e) ** level == 1


def test_vanishing_geometric_sums():
    for level in range(2, 25):
        total = CycNum.from_rational(0, level)
        for e in range(level):
            total = total + root_of_unity(level, e)
        assert cyc_to_rational(total) == 0


def test_mixed_level_arithmetic():
    z3 = root_of_unity(3, 1)
    z2 = root_of_unity(2, 1)
    assert z2 == -1
    assert z2 * z3 == root_of_unity(6, 5)
    assert z3 == z3._lift(12)
    assert z3 + root_of_unity(4, 1) == root_of_unity(12, 4) + root_of_unity(12, 3)
