from __future__ import annotations

import random
from fractions import Fraction

import pytest

from ceresa_kit.elliptic import (
    ECPoint,
    INFINITY,
    WeierstrassCurve,
    add,
    affine,
    from_doubled_model,
    negate,
    rational_torsion_j0,
    scalar_mul,
    torsion_order_q,
    velu_3isogeny,
)
from ceresa_kit.errors import DomainError
from oracles import random_rational, torsion_points_bruteforce


def curve_through(p1: ECPoint, p2: ECPoint) -> WeierstrassCurve:
    """The y^2 = x^3 + Ax + B through two affine points with distinct x."""
    u1 = p1.y**2 - p1.x**3
    u2 = p2.y**2 - p2.x**3
    a = (u1 - u2) / (p2.x - p1.x)
    return WeierstrassCurve(-a, u1 + a * p1.x)


def test_curve_construction_rejects_singular():
    with pytest.raises(DomainError):
        WeierstrassCurve(0, 0)
    with pytest.raises(DomainError):
        WeierstrassCurve(-3, 2)  # 4*(-27) + 27*4 = 0


def test_from_doubled_model_examples():
    short, mp = from_doubled_model(-27)
    assert short == WeierstrassCurve(0, -432)
    assert mp.apply(affine(3, 9)) == affine(12, 36)
    assert short.contains(affine(12, 36))

    short2, mp2 = from_doubled_model(-27 * 144)
    assert short2 == WeierstrassCurve(0, -62208)
    assert mp2.apply(affine(13, 70)) == affine(52, 280)
    assert mp2.unapply(affine(52, 280)) == affine(13, 70)

    with pytest.raises(DomainError):
        from_doubled_model(0)
    with pytest.raises(DomainError):
        mp.apply(affine(1, 1))  # not on y^2 = 4x^3 - 27


def test_add_examples():
    e = WeierstrassCurve(0, -432)
    p = affine(12, 36)
    assert add(e, p, INFINITY) == p
    assert add(e, INFINITY, p) == p
    assert add(e, p, p) == affine(12, -36)

    for m in (1, 2, Fraction(7, 3)):
        em = WeierstrassCurve(0, m * m)
        q = affine(0, m)
        assert add(em, q, q) == affine(0, -m)
        assert scalar_mul(em, 3, q) == INFINITY

    with pytest.raises(DomainError):
        add(e, affine(1, 1), p)


def test_scalar_mul_examples():
    e = WeierstrassCurve(0, -432)
    assert scalar_mul(e, 0, affine(12, 36)) == INFINITY
    assert scalar_mul(e, 3, affine(12, 36)) == INFINITY
    assert scalar_mul(e, -1, affine(12, 36)) == affine(12, -36)
    e1 = WeierstrassCurve(0, 1)
    assert scalar_mul(e1, 6, affine(2, 3)) == INFINITY
    assert scalar_mul(e1, 2, affine(2, 3)) == affine(0, 1)
    assert scalar_mul(e1, 3, affine(2, 3)) == affine(-1, 0)


def test_torsion_order_examples():
    e = WeierstrassCurve(0, -432)
    assert torsion_order_q(e, INFINITY) == 1
    assert torsion_order_q(e, affine(12, 36)) == 3
    e2 = WeierstrassCurve(0, -62208)
    assert torsion_order_q(e2, affine(52, 280)) is None
    for n in range(1, 13):
        assert not scalar_mul(e2, n, affine(52, 280)).is_infinity


def test_torsion_order_divisor_structure():
    e1 = WeierstrassCurve(0, 1)
    p = affine(2, 3)
    assert torsion_order_q(e1, p) == 6
    for d in (1, 2, 3):
        assert not scalar_mul(e1, d, p).is_infinity
    # order n means n*P = O and d*P != O for every proper divisor d
    for d_curve in (1, -432, 4, 9, -27):
        curve = WeierstrassCurve(0, d_curve)
        for point in rational_torsion_j0(d_curve):
            n = torsion_order_q(curve, point)
            assert scalar_mul(curve, n, point) == INFINITY
            for d in range(1, n):
                if n % d == 0:
                    assert not scalar_mul(curve, d, point).is_infinity


def test_rational_torsion_j0_examples():
    assert rational_torsion_j0(-432) == [INFINITY, affine(12, -36), affine(12, 36)]
    assert rational_torsion_j0(1) == [
        INFINITY,
        affine(-1, 0),
        affine(0, -1),
        affine(0, 1),
        affine(2, -3),
        affine(2, 3),
    ]
    assert rational_torsion_j0(2) == [INFINITY]
    with pytest.raises(DomainError):
        rational_torsion_j0(0)


def test_rational_torsion_j0_matches_division_polynomial_oracle():
    rng = random.Random(3)
    ds = [Fraction(-432), Fraction(1), Fraction(2), Fraction(16), Fraction(-27)]
    ds += [Fraction(rng.randint(-30, 30)) for _ in range(10)]
    ds += [Fraction(1, 64), Fraction(-27, 8)]
    for d in ds:
        if d == 0:
            continue
        assert rational_torsion_j0(d) == torsion_points_bruteforce(0, d)


def test_rational_torsion_j0_is_a_subgroup():
    rng = random.Random(29)
    sizes = set()
    for _ in range(60):
        d = random_rational(rng, 80, 6)
        if d == 0:
            continue
        pts = rational_torsion_j0(d)
        curve = WeierstrassCurve(0, d)
        sizes.add(len(pts))
        group = set(pts)
        for p in group:
            assert negate(p) in group
            for q in group:
                assert add(curve, p, q) in group
    assert sizes <= {1, 2, 3, 6}
    assert len(sizes) > 1


def test_velu_3isogeny_examples():
    iso = velu_3isogeny(1)
    assert iso.apply(INFINITY) == INFINITY
    assert iso.apply(affine(0, 1)) == INFINITY  # kernel
    assert iso.apply(affine(2, 3)) == affine(3, 0)
    assert 3**3 - 27 == 0

    iso36 = velu_3isogeny(36)
    assert iso36.apply(affine(-3, -3)) == affine(13, -35)
    assert 13**3 - 972 == 35**2

    with pytest.raises(DomainError):
        velu_3isogeny(0)


def test_velu_3isogeny_is_a_homomorphism():
    rng = random.Random(31)
    checked = 0
    while checked < 50:
        x = random_rational(rng, 9, 4)
        y = random_rational(rng, 9, 4)
        d = y * y - x**3
        if d == 0 or x == 0:
            continue
        curve = WeierstrassCurve(0, d)
        iso = velu_3isogeny(d)
        p = affine(x, y)
        points = {n: scalar_mul(curve, n, p) for n in range(1, 4)}
        images = {n: iso.apply(q) for n, q in points.items()}
        target = iso.target
        assert images[2] == add(target, images[1], images[1])
        assert images[3] == add(target, images[1], images[2])
        checked += 1


def test_velu_3isogeny_composed_with_dual_is_tripling():
    # Push through D -> -27D -> 729D, then undo the trivial sextic twist by 3.
    for d, p in [(Fraction(1), affine(2, 3)), (Fraction(36), affine(-3, -3))]:
        curve = WeierstrassCurve(0, d)
        iso = velu_3isogeny(d)
        dual = velu_3isogeny(-27 * d)
        image = dual.apply(iso.apply(p))
        if image.is_infinity:
            assert scalar_mul(curve, 3, p) == INFINITY
        else:
            assert scalar_mul(curve, 3, p) == affine(image.x / 9, image.y / 27)


def test_velu_3isogeny_kills_exactly_the_3_part():
    iso = velu_3isogeny(1)
    curve = WeierstrassCurve(0, 1)
    target = iso.target
    for p in rational_torsion_j0(1):
        order = torsion_order_q(curve, p)
        image_order = torsion_order_q(target, iso.apply(p))
        expected = order // 3 if order % 3 == 0 else order
        assert image_order == expected
    assert torsion_order_q(target, iso.apply(affine(2, 3))) == 2


def test_group_law_axioms_on_random_curves():
    rng = random.Random(37)
    done = 0
    while done < 200:
        x1, y1 = random_rational(rng, 8, 3), random_rational(rng, 8, 3)
        x2, y2 = random_rational(rng, 8, 3), random_rational(rng, 8, 3)
        if x1 == x2:
            continue
        try:
            curve = curve_through(affine(x1, y1), affine(x2, y2))
        except DomainError:
            continue
        p1, p2 = affine(x1, y1), affine(x2, y2)
        assert add(curve, p1, p2) == add(curve, p2, p1)
        assert add(curve, p1, negate(p1)) == INFINITY
        p3 = add(curve, scalar_mul(curve, rng.randint(-2, 2), p1),
                 scalar_mul(curve, rng.randint(-2, 2), p2))
        left = add(curve, add(curve, p1, p2), p3)
        right = add(curve, p1, add(curve, p2, p3))
        assert left == right
        done += 1
