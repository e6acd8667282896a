"""Torsion decisions for Ceresa classes of Picard curves y^3 = x^4 + ax^2 + bx + c.

The decision runs through the invariant point: the invariants (I, J) of the
quartic satisfy J^2 = 4I^3 - 27*disc, so P = (I, J) is a rational point on
y^2 = 4x^3 - 27*disc.  The Ceresa class of the curve is torsion in the Chow
group exactly when P is a torsion point, and the verdict reports the exact
order of P over Q.  Modulo algebraic equivalence (the Griffiths group) the
class is torsion for every Picard curve, so that verdict is a constant.

The same point also organizes the explicit torsion families: for (I, J) on
the discriminant-1 fiber E0: y^2 = 4x^3 - 27 and a parameter t with
g(t) = t^3 - It/3 - J/27 nonzero, ``family_generate`` produces a quartic
whose invariant point is the sextic twist (g^2 I, g^3 J) of (I, J) by the
square g, hence of the same order over Q.  Every rational point of E0 of
finite order therefore yields a one-parameter family of curves with the
same torsion verdict.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from . import elliptic
from .elliptic import ECPoint, WeierstrassCurve
from .errors import DomainError
from .exactmath import RatLike, rat
from .quartic import DepressedQuartic, QuarticInvariants, invariants

E0_DOUBLED_D = Fraction(-27)  # y^2 = 4x^3 - 27, the disc = 1 fiber


@dataclass(frozen=True)
class PicardCurve:
    """A quartic with nonzero discriminant, i.e. a smooth curve y^3 = f(x)."""

    quartic: DepressedQuartic

    def __post_init__(self):
        if invariants(self.quartic).disc == 0:
            raise DomainError(f"singular quartic (disc = 0): {self.quartic}")

    @classmethod
    def from_coefficients(cls, a: RatLike, b: RatLike, c: RatLike) -> PicardCurve:
        return cls(DepressedQuartic(a, b, c))


@dataclass(frozen=True)
class ChowVerdict:
    """Torsion with the exact order of the invariant point, or non-torsion."""

    torsion: bool
    point_order: int | None

    def __post_init__(self):
        assert self.torsion == (self.point_order is not None)

    def to_json(self) -> dict:
        out: dict = {"torsion": self.torsion}
        if self.torsion:
            out["point_order"] = self.point_order
        return out


GRIFFITHS_TORSION = "torsion"


@dataclass(frozen=True)
class CeresaVerdict:
    """Decision record for one Picard curve.

    ``chow.point_order`` is the order of the invariant point, which matches
    the torsion order of the Ceresa class only up to a bounded multiple; the
    verdict deliberately reports the point order, not the class order.
    ``griffiths`` is constant: every Picard curve is torsion there.
    """

    chow: ChowVerdict
    griffiths: str
    invariants: QuarticInvariants
    point: ECPoint  # invariant point on the short model y^2 = x^3 - 432*disc


@dataclass(frozen=True)
class PicardPoint:
    """The invariant point of a Picard curve in both curve models."""

    invariants: QuarticInvariants
    doubled_d: Fraction  # the D of y^2 = 4x^3 + D, namely -27*disc
    short_curve: WeierstrassCurve  # y^2 = x^3 - 432*disc
    point_doubled: ECPoint  # (I, J)
    point_short: ECPoint  # (4I, 4J)


def picard_invariant_point(curve: PicardCurve) -> PicardPoint:
    """Build (I, J) on y^2 = 4x^3 - 27*disc and its short-model image."""
    inv = invariants(curve.quartic)
    d = -27 * inv.disc
    short, model_map = elliptic.from_doubled_model(d)
    p_doubled = elliptic.affine(inv.I, inv.J)
    p_short = model_map.apply(p_doubled)
    return PicardPoint(inv, d, short, p_doubled, p_short)


def decide(curve: PicardCurve) -> CeresaVerdict:
    """Chow verdict from the order of the invariant point over Q."""
    data = picard_invariant_point(curve)
    order = elliptic.torsion_order_q(data.short_curve, data.point_short)
    chow = ChowVerdict(order is not None, order)
    return CeresaVerdict(chow, GRIFFITHS_TORSION, data.invariants, data.point_short)


def verdict_to_json(curve: PicardCurve, verdict: CeresaVerdict) -> dict:
    inv = verdict.invariants
    return {
        "curve": curve.quartic.to_json(),
        "I": str(inv.I),
        "J": str(inv.J),
        "disc": str(inv.disc),
        "P": verdict.point.to_json(),
        "chow": verdict.chow.to_json(),
        "griffiths": verdict.griffiths,
    }


def bielliptic_consistency(a: RatLike, c: RatLike) -> bool:
    """Check the bielliptic route against the invariant point for b = 0.

    The curve y^3 = x^4 + ax^2 + c carries the auxiliary point
    Q = (a^2 - 4c, a(a^2 - 4c)) on y^2 = x^3 + D' with D' = 4c(a^2 - 4c)^2,
    the unique j = 0 curve through Q.  Pushing Q through the 3-isogeny onto
    y^2 = x^3 - 27D' and rescaling by (4x, 8y) lands on the short model
    y^2 = x^3 - 432*disc, where the image must agree with the invariant
    point up to sign (the isogeny's sign is not pinned down).
    """
    a, c = rat(a), rat(c)
    u = a * a - 4 * c
    if u == 0:
        raise DomainError("a^2 - 4c = 0: the auxiliary point degenerates")
    curve = PicardCurve.from_coefficients(a, 0, c)  # rejects disc = 0
    data = picard_invariant_point(curve)

    q = elliptic.affine(u, a * u)
    d_prime = 4 * c * u * u
    iso = elliptic.velu_3isogeny(d_prime)
    image = iso.apply(q)
    if image.is_infinity:
        return data.point_short.is_infinity
    scaled = elliptic.affine(4 * image.x, 8 * image.y)
    if not data.short_curve.contains(scaled):
        return False
    return scaled in (data.point_short, elliptic.negate(data.point_short))


def family_generate(inv_i: RatLike, inv_j: RatLike, t: RatLike) -> PicardCurve:
    """Member at parameter t of the torsion family attached to (I, J) on E0.

    Requires J^2 = 4I^3 - 27 (the disc = 1 normalization) and
    g(t) = t^3 - It/3 - J/27 nonzero.  With alpha = t*g(t) and beta = g(t)^2
    the member is

        x^4 - (3*alpha/2) x^2 + beta x + (g(t)^2 I/12 - 3*alpha^2/16),

    whose invariants are exactly (g^2 I, g^3 J) with discriminant g^6: the
    weighted rescaling of the fiber quartic by g(t)^(1/2) forces the g^2
    factor on the I/12 term.  The discriminant g^6 is nonzero whenever
    g(t) is, so the member is always a valid curve.
    """
    inv_i, inv_j, t = rat(inv_i), rat(inv_j), rat(t)
    if inv_j**2 != 4 * inv_i**3 - 27:
        raise DomainError("(I, J) is not on y^2 = 4x^3 - 27")
    g = t**3 - inv_i * t / 3 - inv_j / 27
    if g == 0:
        raise DomainError(f"degenerate parameter: g({t}) = 0")
    alpha = t * g
    member = DepressedQuartic(
        -3 * alpha / 2,
        g * g,
        g * g * inv_i / 12 - 3 * alpha**2 / 16,
    )
    return PicardCurve(member)


def e0_rational_torsion() -> list[ECPoint]:
    """Rational torsion of y^2 = 4x^3 - 27, in that model's coordinates."""
    short, model_map = elliptic.from_doubled_model(E0_DOUBLED_D)
    pts = elliptic.rational_torsion_j0(short.B)
    return [model_map.unapply(p) for p in pts]


VERDICT_TORSION = "torsion"
VERDICT_NON_TORSION = "non_torsion"
VERDICT_SKIPPED = "skipped"

SCAN_CSV_HEADER = "a,b,c,I,J,disc,verdict,point_order"

THREADS_ENV_VAR = "CERESA_KIT_THREADS"


@dataclass(frozen=True)
class ScanRecord:
    a: Fraction
    b: Fraction
    c: Fraction
    I: Fraction
    J: Fraction
    disc: Fraction
    verdict: str
    point_order: int | None

    def csv_row(self) -> str:
        order = "" if self.point_order is None else str(self.point_order)
        return f"{self.a},{self.b},{self.c},{self.I},{self.J},{self.disc},{self.verdict},{order}"


def _scan_one(coeffs: tuple[Fraction, Fraction, Fraction]) -> ScanRecord:
    a, b, c = coeffs
    inv = invariants(DepressedQuartic(a, b, c))
    if inv.disc == 0:
        return ScanRecord(a, b, c, inv.I, inv.J, inv.disc, VERDICT_SKIPPED, None)
    short, model_map = elliptic.from_doubled_model(-27 * inv.disc)
    point = model_map.apply(elliptic.affine(inv.I, inv.J))
    order = elliptic.torsion_order_q(short, point)
    verdict = VERDICT_TORSION if order is not None else VERDICT_NON_TORSION
    return ScanRecord(a, b, c, inv.I, inv.J, inv.disc, verdict, order)


def effective_thread_count(requested: int | None = None) -> int:
    """Requested worker count capped by the CERESA_KIT_THREADS variable."""
    cap = os.environ.get(THREADS_ENV_VAR)
    threads = requested if requested is not None else 1
    if cap is not None:
        try:
            threads = min(threads, max(1, int(cap)))
        except ValueError:
            raise DomainError(f"{THREADS_ENV_VAR} must be an integer, got {cap!r}")
    return max(1, threads)


def scan(
    a_values: Sequence[RatLike],
    b_values: Sequence[RatLike],
    c_values: Sequence[RatLike],
    threads: int | None = None,
) -> list[ScanRecord]:
    """Decide every grid point, in lexicographic (a, b, c) grid order.

    Points with vanishing discriminant are recorded as skipped.  Grid points
    may be evaluated by a worker pool, but the output order is always the
    deterministic grid order, independent of the thread count.
    """
    grid_a = [rat(v) for v in a_values]
    grid_b = [rat(v) for v in b_values]
    grid_c = [rat(v) for v in c_values]
    if not (grid_a and grid_b and grid_c):
        raise DomainError("empty scan grid")
    points = list(product(grid_a, grid_b, grid_c))
    threads = effective_thread_count(threads)
    if threads == 1:
        return [_scan_one(p) for p in points]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(_scan_one, points))


def scan_csv_lines(records: Iterable[ScanRecord]) -> list[str]:
    return [SCAN_CSV_HEADER] + [r.csv_row() for r in records]
