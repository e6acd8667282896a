"""Quartic invariants, the syzygy, and moduli of the weighted scaling action.

Run with:  python demos/01_invariants_and_moduli.py
"""

from fractions import Fraction

from ceresa_kit import (
    DepressedQuartic,
    gm_scale,
    invariants,
    moduli_equal_geometric,
    moduli_equal_rational,
)

# A depressed quartic x^4 + a x^2 + b x + c carries two classical invariants
# I = a^2 + 12c and J = 72ac - 2a^3 - 27b^2, tied to its discriminant by the
# syzygy J^2 = 4I^3 - 27*disc.
q = DepressedQuartic(1, 0, 1)
inv = invariants(q)
print(f"f = {q}")
print(f"I = {inv.I}, J = {inv.J}, disc = {inv.disc}")
print(f"syzygy: {inv.J}^2 = 4*{inv.I}^3 - 27*{inv.disc} ->",
      inv.J**2 == 4 * inv.I**3 - 27 * inv.disc)
print()

# The scaling lam.(a, b, c) = (lam^2 a, lam^3 b, lam^4 c) leaves the curve
# class unchanged; the invariants pick up weights 4, 6, 12.
lam = Fraction(3, 2)
scaled = gm_scale(lam, q)
sinv = invariants(scaled)
print(f"scaled by {lam}: {scaled}")
print(f"I scales by lam^4: {sinv.I == lam**4 * inv.I}")
print(f"J scales by lam^6: {sinv.J == lam**6 * inv.J}")
print(f"disc scales by lam^12: {sinv.disc == lam**12 * inv.disc}")
print()

# Orbit equality in the weighted projective space P(2,3,4):
pairs = [
    (DepressedQuartic(1, 1, 1), DepressedQuartic(4, 8, 16)),
    (DepressedQuartic(1, 0, 1), DepressedQuartic(1, 1, 1)),
    (DepressedQuartic(1, 0, 0), DepressedQuartic(-1, 0, 0)),
]
for q1, q2 in pairs:
    geo = moduli_equal_geometric(q1, q2)
    rat_lam = moduli_equal_rational(q1, q2)
    print(f"({q1.a},{q1.b},{q1.c}) ~ ({q2.a},{q2.b},{q2.c}):"
          f" geometric={geo}, rational scaling={rat_lam}")
