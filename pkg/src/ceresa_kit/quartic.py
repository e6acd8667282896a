"""Invariant theory of depressed quartics f = x^4 + a x^2 + b x + c.

The two classical invariants and the discriminant of the associated binary
quartic form are

    I    = a^2 + 12c
    J    = 72ac - 2a^3 - 27b^2
    disc = -4a^3 b^2 - 27b^4 + 16a^4 c + 144a b^2 c - 128a^2 c^2 + 256c^3

linked by the syzygy J^2 = 4I^3 - 27*disc.  The weighted scaling action
lam . (a, b, c) = (lam^2 a, lam^3 b, lam^4 c) makes I, J, disc homogeneous
of degree 4, 6, 12; orbits of nonzero triples are points of the weighted
projective space P(2,3,4), and moduli equality tests decide orbit equality
over an algebraic closure or over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .exactmath import RatLike, rat, rational_nth_root, rational_sqrt


@dataclass(frozen=True)
class DepressedQuartic:
    """Coefficient triple (a, b, c) of x^4 + a x^2 + b x + c.

    A vanishing discriminant is allowed here; only curve-level constructors
    reject it.
    """

    a: Fraction
    b: Fraction
    c: Fraction

    def __init__(self, a: RatLike, b: RatLike, c: RatLike):
        object.__setattr__(self, "a", rat(a))
        object.__setattr__(self, "b", rat(b))
        object.__setattr__(self, "c", rat(c))

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c)

    def is_zero_triple(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b), "c": str(self.c)}

    def __str__(self) -> str:
        return f"x^4 + ({self.a})*x^2 + ({self.b})*x + ({self.c})"


@dataclass(frozen=True)
class QuarticInvariants:
    I: Fraction
    J: Fraction
    disc: Fraction

    def to_json(self) -> dict:
        return {"I": str(self.I), "J": str(self.J), "disc": str(self.disc)}


def invariants(q: DepressedQuartic) -> QuarticInvariants:
    """Evaluate (I, J, disc) and assert the syzygy before returning."""
    a, b, c = q.a, q.b, q.c
    inv_i = a * a + 12 * c
    inv_j = 72 * a * c - 2 * a**3 - 27 * b * b
    disc = (
        -4 * a**3 * b**2
        - 27 * b**4
        + 16 * a**4 * c
        + 144 * a * b**2 * c
        - 128 * a**2 * c**2
        + 256 * c**3
    )
    # A violation here is an implementation fault, never an input error.
    assert inv_j * inv_j == 4 * inv_i**3 - 27 * disc, q
    return QuarticInvariants(inv_i, inv_j, disc)


def gm_scale(lam: RatLike, q: DepressedQuartic) -> DepressedQuartic:
    """Apply the weighted scaling (a, b, c) -> (lam^2 a, lam^3 b, lam^4 c)."""
    lam = rat(lam)
    if lam == 0:
        raise DomainError("scaling parameter must be nonzero")
    return DepressedQuartic(lam**2 * q.a, lam**3 * q.b, lam**4 * q.c)


def _check_moduli_inputs(q1: DepressedQuartic, q2: DepressedQuartic) -> None:
    if q1.is_zero_triple() or q2.is_zero_triple():
        raise DomainError("the zero triple is not a point of P(2,3,4)")


def moduli_equal_geometric(q1: DepressedQuartic, q2: DepressedQuartic) -> bool:
    """Orbit equality under the weighted scaling over an algebraic closure.

    Zero patterns must agree; then the weighted cross-relations of equal
    degree decide the existence of a scaling factor.  With a single nonzero
    coordinate any value is reachable, since roots of every order exist in
    the closure.
    """
    _check_moduli_inputs(q1, q2)
    a1, b1, c1 = q1.coefficients()
    a2, b2, c2 = q2.coefficients()
    if ((a1 == 0) != (a2 == 0)) or ((b1 == 0) != (b2 == 0)) or ((c1 == 0) != (c2 == 0)):
        return False
    if a1 != 0 and b1 != 0 and a1**3 * b2**2 != a2**3 * b1**2:
        return False
    if a1 != 0 and c1 != 0 and a1**2 * c2 != a2**2 * c1:
        return False
    if b1 != 0 and c1 != 0 and b1**4 * c2**3 != b2**4 * c1**3:
        return False
    return True


def moduli_equal_rational(q1: DepressedQuartic, q2: DepressedQuartic) -> Fraction | None:
    """Rational scaling factor lam with gm_scale(lam, q1) == q2, if one exists.

    The lowest-weight nonzero coordinate pins lam up to finitely many
    rational candidates (a root extraction); each candidate is verified on
    all three coordinates.
    """
    _check_moduli_inputs(q1, q2)
    a1, b1, c1 = q1.coefficients()
    if ((a1 == 0) != (q2.a == 0)) or ((b1 == 0) != (q2.b == 0)) or ((c1 == 0) != (q2.c == 0)):
        return None
    candidates: list[Fraction] = []
    if a1 != 0:
        r = rational_sqrt(q2.a / a1)
        if r is not None:
            candidates = [r, -r] if r != 0 else [r]
    elif b1 != 0:
        r = rational_nth_root(q2.b / b1, 3)
        if r is not None:
            candidates = [r]
    else:
        r = rational_nth_root(q2.c / c1, 4)
        if r is not None:
            candidates = [r, -r] if r != 0 else [r]
    for lam in candidates:
        if lam != 0 and gm_scale(lam, q1) == q2:
            return lam
    return None


def from_invariant_point(
    inv_i: RatLike, inv_j: RatLike, alpha: RatLike, beta: RatLike
) -> DepressedQuartic:
    """Quartic with invariants (I, J) through a point of y^2 = x^3 - Ix/3 - J/27.

    This is the inverse of the fibration f -> (-2a/3, b) over a fixed
    invariant pair: the quartic x^4 - 3*alpha*x^2/2 + beta*x + (I/12 -
    3*alpha^2/16).  Its discriminant is forced by the syzygy to be
    (4I^3 - J^2)/27.
    """
    inv_i, inv_j, alpha, beta = rat(inv_i), rat(inv_j), rat(alpha), rat(beta)
    if beta * beta != alpha**3 - inv_i * alpha / 3 - inv_j / 27:
        raise DomainError("(alpha, beta) is not on the invariant-pair curve")
    return DepressedQuartic(
        -3 * alpha / 2,
        beta,
        inv_i / 12 - 3 * alpha**2 / 16,
    )
