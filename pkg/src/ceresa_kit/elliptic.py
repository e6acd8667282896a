"""Exact elliptic curve arithmetic over the rationals in short Weierstrass form.

Curves are y^2 = x^3 + A x + B with rational A, B and nonzero discriminant.
Points are either the point at infinity (the group identity) or exact
affine rational pairs; the chord-tangent group law is evaluated with
Fraction arithmetic, so there are no tolerances anywhere.

Beyond the group law, this module provides:

  * conversion from the classical y^2 = 4x^3 + D model via (x, y) -> (4x, 4y),
  * the torsion-order decision over Q (exhaustive multiplication up to the
    Mazur bound of 12),
  * full rational torsion enumeration for j = 0 curves y^2 = x^3 + D,
  * the 3-isogeny y^2 = x^3 + D  ->  y^2 = x^3 - 27D with kernel {x = 0}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .exactmath import RatLike, rat, rational_nth_root, rational_sqrt

MAZUR_BOUND = 12


@dataclass(frozen=True)
class ECPoint:
    """A rational point: affine (x, y) or the point at infinity (x = y = None)."""

    x: Fraction | None
    y: Fraction | None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def to_json(self):
        if self.is_infinity:
            return "infinity"
        return {"x": str(self.x), "y": str(self.y)}

    def __str__(self) -> str:
        return "infinity" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY = ECPoint(None, None)


def affine(x: RatLike, y: RatLike) -> ECPoint:
    return ECPoint(rat(x), rat(y))


def point_sort_key(p: ECPoint):
    """Deterministic ordering with infinity first, then by (x, y)."""
    return (0, Fraction(0), Fraction(0)) if p.is_infinity else (1, p.x, p.y)


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 = x^3 + A x + B; construction rejects singular models."""

    A: Fraction
    B: Fraction

    def __init__(self, A: RatLike, B: RatLike):
        A, B = rat(A), rat(B)
        if 4 * A**3 + 27 * B**2 == 0:
            raise DomainError("singular curve: 4A^3 + 27B^2 = 0")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)

    def contains(self, p: ECPoint) -> bool:
        if p.is_infinity:
            return True
        return p.y * p.y == p.x**3 + self.A * p.x + self.B

    def to_json(self) -> dict:
        return {"A": str(self.A), "B": str(self.B)}

    def __str__(self) -> str:
        return f"y^2 = x^3 + ({self.A})*x + ({self.B})"


def _require_on_curve(e: WeierstrassCurve, p: ECPoint) -> None:
    if not e.contains(p):
        raise DomainError(f"point {p} is not on {e}")


def negate(p: ECPoint) -> ECPoint:
    return p if p.is_infinity else ECPoint(p.x, -p.y)


def add(e: WeierstrassCurve, p: ECPoint, q: ECPoint) -> ECPoint:
    """Chord-tangent addition with infinity as the identity."""
    _require_on_curve(e, p)
    _require_on_curve(e, q)
    if p.is_infinity:
        return q
    if q.is_infinity:
        return p
    if p.x == q.x:
        if p.y == -q.y:
            return INFINITY
        lam = (3 * p.x * p.x + e.A) / (2 * p.y)
    else:
        lam = (q.y - p.y) / (q.x - p.x)
    x3 = lam * lam - p.x - q.x
    y3 = lam * (p.x - x3) - p.y
    return ECPoint(x3, y3)


def scalar_mul(e: WeierstrassCurve, n: int, p: ECPoint) -> ECPoint:
    """n*P by double-and-add; negative n via (x, y) -> (x, -y)."""
    _require_on_curve(e, p)
    if n < 0:
        n, p = -n, negate(p)
    result = INFINITY
    addend = p
    while n:
        if n & 1:
            result = add(e, result, addend)
        if n > 1:
            addend = add(e, addend, addend)
        n >>= 1
    return result


def torsion_order_q(e: WeierstrassCurve, p: ECPoint) -> int | None:
    """Exact order of P in E(Q) if torsion, else None (infinite order).

    Correct by Mazur's theorem: a rational torsion point has order at most
    12, so exhaustively checking n*P for n <= 12 decides.
    """
    _require_on_curve(e, p)
    acc = p
    for n in range(1, MAZUR_BOUND + 1):
        if acc.is_infinity:
            return n
        acc = add(e, acc, p)
    return None


@dataclass(frozen=True)
class DoubledModelMap:
    """Point correspondence between y^2 = 4x^3 + D and its short model.

    ``apply`` sends a point of the source model to y^2 = x^3 + 16D via
    (x, y) -> (4x, 4y); ``unapply`` inverts.
    """

    D: Fraction
    short: WeierstrassCurve

    def source_contains(self, p: ECPoint) -> bool:
        if p.is_infinity:
            return True
        return p.y * p.y == 4 * p.x**3 + self.D

    def apply(self, p: ECPoint) -> ECPoint:
        if not self.source_contains(p):
            raise DomainError(f"point {p} is not on y^2 = 4x^3 + ({self.D})")
        if p.is_infinity:
            return INFINITY
        return ECPoint(4 * p.x, 4 * p.y)

    def unapply(self, p: ECPoint) -> ECPoint:
        _require_on_curve(self.short, p)
        if p.is_infinity:
            return INFINITY
        return ECPoint(p.x / 4, p.y / 4)


def from_doubled_model(d: RatLike) -> tuple[WeierstrassCurve, DoubledModelMap]:
    """Short model of y^2 = 4x^3 + D together with the point map (4x, 4y)."""
    d = rat(d)
    if d == 0:
        raise DomainError("y^2 = 4x^3 is singular")
    short = WeierstrassCurve(0, 16 * d)
    return short, DoubledModelMap(d, short)


def rational_torsion_j0(d: RatLike) -> list[ECPoint]:
    """Full rational torsion subgroup of y^2 = x^3 + D, sorted, infinity first.

    2-torsion comes from the rational root of x^3 + D (at most one); the
    3-division polynomial 3x^4 + 12Dx = 3x(x^3 + 4D) contributes x = 0 when
    D is a square and x = cbrt(-4D) when -3D is a square.  The group is
    then closed under addition.
    """
    d = rat(d)
    if d == 0:
        raise DomainError("y^2 = x^3 is singular")
    curve = WeierstrassCurve(0, d)
    found: set[ECPoint] = {INFINITY}
    r = rational_nth_root(-d, 3)
    if r is not None:
        found.add(ECPoint(r, Fraction(0)))
    s = rational_sqrt(d) if d > 0 else None
    if s is not None:
        found.add(ECPoint(Fraction(0), s))
        found.add(ECPoint(Fraction(0), -s))
    x1 = rational_nth_root(-4 * d, 3)
    if x1 is not None:
        t = rational_sqrt(-3 * d) if -3 * d > 0 else None
        if t is not None:
            found.add(ECPoint(x1, t))
            found.add(ECPoint(x1, -t))
    while True:
        extra = {add(curve, p, q) for p in found for q in found} - found
        if not extra:
            break
        found |= extra
    return sorted(found, key=point_sort_key)


@dataclass(frozen=True)
class Isogeny3:
    """Degree-3 isogeny y^2 = x^3 + D -> y^2 = x^3 - 27D, kernel {x = 0}.

    phi(x, y) = ((x^3 + 4D)/x^2, y(x^3 - 8D)/x^3); infinity and the kernel
    map to infinity.
    """

    D: Fraction
    source: WeierstrassCurve
    target: WeierstrassCurve

    @property
    def degree(self) -> int:
        return 3

    def apply(self, p: ECPoint) -> ECPoint:
        _require_on_curve(self.source, p)
        if p.is_infinity or p.x == 0:
            return INFINITY
        x, y, d = p.x, p.y, self.D
        image = ECPoint((x**3 + 4 * d) / x**2, y * (x**3 - 8 * d) / x**3)
        assert self.target.contains(image)
        return image


def velu_3isogeny(d: RatLike) -> Isogeny3:
    """The 3-isogeny with kernel {x = 0} out of y^2 = x^3 + D."""
    d = rat(d)
    if d == 0:
        raise DomainError("y^2 = x^3 is singular")
    return Isogeny3(d, WeierstrassCurve(0, d), WeierstrassCurve(0, -27 * d))
