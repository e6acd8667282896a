"""One-parameter families of Picard curves with torsion Ceresa class.

Every rational torsion point (I, J) of E0: y^2 = 4x^3 - 27 spawns a family
f_t whose invariant point is the twist (g^2 I, g^3 J) by the square of
g(t) = t^3 - It/3 - J/27, hence of the same order for every parameter t.
Run with:  python demos/03_torsion_families.py
"""

from fractions import Fraction

from ceresa_kit import decide, e0_rational_torsion, family_generate, invariants

print("rational torsion of E0: y^2 = 4x^3 - 27:")
points = e0_rational_torsion()
for p in points:
    print(f"  {p}")
print()

for base in points:
    if base.is_infinity:
        continue
    print(f"family attached to (I, J) = ({base.x}, {base.y}):")
    for t in (Fraction(0), Fraction(1), Fraction(-2), Fraction(1, 3)):
        member = family_generate(base.x, base.y, t)
        inv = invariants(member.quartic)
        verdict = decide(member)
        print(f"  t = {t}: y^3 = {member.quartic}")
        print(f"    invariants ({inv.I}, {inv.J}), disc = {inv.disc},"
              f" verdict: torsion({verdict.chow.point_order})")
        # the twist-normalized moduli are constant along the family
        assert inv.I**3 / inv.disc == base.x**3
        assert inv.J**2 / inv.disc == base.y**2
    print()

print("the classical family x^4 - 12x^2 + tx - 12 (I = 0, three-torsion):")
from ceresa_kit import PicardCurve

for t in (1, 2, 5, 17):
    verdict = decide(PicardCurve.from_coefficients(-12, t, -12))
    print(f"  t = {t:2d}: torsion({verdict.chow.point_order})")
