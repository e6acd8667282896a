"""Character-theoretic vanishing criteria from eigenvalue data of group actions.

A finite group acting on the g-dimensional space V of differentials of a
curve is described by an :class:`ActionProfile`: one entry per conjugacy
class, carrying the class size and the eigenvalue exponents of a class
representative (all eigenvalues are roots of unity of a common level L).
This is enough to evaluate characters of any power of a class element,
since the eigenvalues of h^k are the k-th powers of those of h.

Two vanishing criteria are evaluated from a profile:

  * the Griffiths-level criterion: the invariants of the exterior cube of V
    vanish, in which case the Ceresa class is torsion modulo algebraic
    equivalence (conditional on the Hodge conjecture in general);
  * the Chow-level criterion: the invariants of the primitive part of the
    degree-3 cohomology of the Jacobian vanish, computed as
    dim (wedge^3 H^1)^G - dim (H^1)^G with H^1 = V + conjugate(V), in which
    case the Ceresa class is torsion modulo rational equivalence.

The exterior-cube character is the classical Newton formula
chi_w3(h) = (chi(h)^3 - 3 chi(h) chi(h^2) + 2 chi(h^3)) / 6, evaluated in
exact cyclotomic arithmetic.  Invariant dimensions are the usual averages
over the group; a non-integral or negative average proves the input was
not a genuine group action and raises :class:`ProfileError`.

The module also ships the one-parameter dihedral covers
y^m = ((x+1)/(x-1))^a ((x+t)/(x-t))^b with 0 < a < b < m/2 and
gcd(m, a, b) = 1: their genus, the eigencharacter profile of the rotation
subgroup, and the triple-sum test deciding whether the exterior cube of V
has invariants under the full dihedral action.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, NotRationalError, ProfileError
from .exactmath import CycNum, UPoly, cyc_to_rational, root_of_unity


@dataclass(frozen=True)
class ConjClass:
    """One conjugacy class: its size and a representative's eigenvalue exponents."""

    size: int
    exps: tuple[int, ...]


@dataclass(frozen=True)
class ActionProfile:
    """Eigenvalue data of a finite group acting on a space of dimension g."""

    group_order: int
    level: int
    classes: tuple[ConjClass, ...]

    def __post_init__(self):
        if self.group_order < 1 or self.level < 1:
            raise ProfileError("group order and level must be positive")
        if not self.classes:
            raise ProfileError("profile has no conjugacy classes")
        dims = {len(cls.exps) for cls in self.classes}
        if len(dims) != 1:
            raise ProfileError("conjugacy classes disagree on dim V")
        if any(cls.size < 1 for cls in self.classes):
            raise ProfileError("class sizes must be positive")
        if sum(cls.size for cls in self.classes) != self.group_order:
            raise ProfileError("class sizes do not sum to the group order")
        if not any(all(e % self.level == 0 for e in cls.exps) for cls in self.classes):
            raise ProfileError("identity class (all exponents 0) is missing")
        normalized = tuple(
            ConjClass(cls.size, tuple(e % self.level for e in cls.exps))
            for cls in self.classes
        )
        object.__setattr__(self, "classes", normalized)

    @property
    def dim(self) -> int:
        return len(self.classes[0].exps)

    def to_json(self) -> dict:
        return {
            "group_order": self.group_order,
            "level": self.level,
            "classes": [
                {"size": cls.size, "exps": list(cls.exps)} for cls in self.classes
            ],
        }


def profile_from_json(data: dict) -> ActionProfile:
    try:
        classes = tuple(
            ConjClass(int(cls["size"]), tuple(int(e) for e in cls["exps"]))
            for cls in data["classes"]
        )
        return ActionProfile(int(data["group_order"]), int(data["level"]), classes)
    except (KeyError, TypeError, ValueError) as exc:
        raise ProfileError(f"malformed profile JSON: {exc}") from exc


def char_power(cls: ConjClass, k: int, level: int) -> CycNum:
    """Character value on the k-th power of a class representative.

    Equals the sum of the k-th powers of the representative's eigenvalues.
    """
    total = CycNum.from_rational(0, level)
    for e in cls.exps:
        total = total + root_of_unity(level, k * e)
    return total


def _count_vector(exps, level: int) -> list[int]:
    # integer vector v with sum v[i] * zeta^i equal to sum of zeta^e
    v = [0] * level
    for e in exps:
        v[e % level] += 1
    return v


def _cyclic_mul(u: list[int], v: list[int], level: int) -> list[int]:
    # product in Z[zeta], unreduced: convolution of exponent vectors mod level
    out = [0] * level
    for i, ui in enumerate(u):
        if ui:
            for j, vj in enumerate(v):
                if vj:
                    k = i + j
                    if k >= level:
                        k -= level
                    out[k] += ui * vj
    return out


def _wedge3_char_six(exps: tuple[int, ...], level: int) -> list[int]:
    # 6 * chi_wedge3 = chi1^3 - 3*chi1*chi2 + 2*chi3, as an integer vector;
    # the eigenvalues of h^k are the k-th powers of those of h
    c1 = _count_vector(exps, level)
    c2 = _count_vector((2 * e for e in exps), level)
    c3 = _count_vector((3 * e for e in exps), level)
    cube = _cyclic_mul(_cyclic_mul(c1, c1, level), c1, level)
    cross = _cyclic_mul(c1, c2, level)
    return [a - 3 * b + 2 * c for a, b, c in zip(cube, cross, c3)]


def _h1_exps(exps: tuple[int, ...], level: int) -> tuple[int, ...]:
    # H^1 carries each eigenvalue together with its conjugate.
    return exps + tuple((-e) % level for e in exps)


def _vector_to_dim(profile: ActionProfile, total: list[int], scale: int) -> int:
    # exact division by the group-average denominator happens in the
    # rational coefficients of the cyclotomic number
    value = CycNum(profile.level, UPoly(total)) * Fraction(1, scale)
    try:
        dim = cyc_to_rational(value)
    except NotRationalError as exc:
        raise ProfileError("invariant average is irrational; not a group action") from exc
    if dim.denominator != 1 or dim < 0:
        raise ProfileError(f"invariant average {dim} is not a nonnegative integer")
    return int(dim)


def _space_exps(cls: ConjClass, space: str, level: int) -> tuple[int, ...]:
    if space not in ("V", "H1"):
        raise DomainError(f"unknown space {space!r}; expected 'V' or 'H1'")
    return cls.exps if space == "V" else _h1_exps(cls.exps, level)


@lru_cache(maxsize=4096)
def dim_inv_wedge3(profile: ActionProfile, space: str = "V") -> int:
    """Dimension of the group invariants of the exterior cube of V or of H^1."""
    if profile.dim < 3:
        raise DomainError("exterior cube needs dim V >= 3")
    total = [0] * profile.level
    for cls in profile.classes:
        exps = _space_exps(cls, space, profile.level)
        for i, w in enumerate(_wedge3_char_six(exps, profile.level)):
            total[i] += cls.size * w
    return _vector_to_dim(profile, total, 6 * profile.group_order)


def invariant_dim(profile: ActionProfile, space: str = "V") -> int:
    """Dimension of the group invariants of V or of H^1 = V + conjugate(V)."""
    total = [0] * profile.level
    for cls in profile.classes:
        exps = _space_exps(cls, space, profile.level)
        for i, w in enumerate(_count_vector(exps, profile.level)):
            total[i] += cls.size * w
    return _vector_to_dim(profile, total, profile.group_order)


def griffiths_criterion_applies(profile: ActionProfile) -> bool:
    """True when the invariants of the exterior cube of V vanish.

    A true result means the Ceresa class of any curve realizing the profile
    is torsion modulo algebraic equivalence, conditional on the Hodge
    conjecture for the relevant abelian varieties.
    """
    return dim_inv_wedge3(profile, "V") == 0


def chow_criterion_applies(profile: ActionProfile) -> bool:
    """True when the invariants of the primitive degree-3 cohomology vanish.

    Computed as dim (wedge^3 H^1)^G - dim (H^1)^G; the difference is exact
    because taking invariants of a finite group is exact in characteristic
    zero, and the embedding of H^1 twists by a Tate twist that does not
    change the group action.
    """
    d3 = dim_inv_wedge3(profile, "H1")
    d1 = invariant_dim(profile, "H1")
    if d3 < d1:
        raise ProfileError(
            f"dim (wedge^3 H1)^G = {d3} < dim (H1)^G = {d1}; not a group action"
        )
    return d3 == d1


def cyclic_profile(order: int, generator_exps: tuple[int, ...], level: int | None = None) -> ActionProfile:
    """Profile of a cyclic group from its generator's eigenvalue exponents."""
    if order < 1:
        raise DomainError("cyclic group order must be positive")
    level = order if level is None else level
    classes = tuple(
        ConjClass(1, tuple((k * e) % level for e in generator_exps))
        for k in range(order)
    )
    return ActionProfile(order, level, classes)


def _check_dihedral_params(m: int, a: int, b: int) -> None:
    if not (0 < a < b and 2 * b < m):
        raise DomainError(f"need 0 < a < b < m/2, got (m, a, b) = ({m}, {a}, {b})")
    if math.gcd(m, math.gcd(a, b)) != 1:
        raise DomainError(f"need gcd(m, a, b) = 1, got ({m}, {a}, {b})")


def dihedral_genus(m: int, a: int, b: int) -> int:
    """Genus m + 1 - gcd(a, m) - gcd(b, m) of the smooth cover member."""
    _check_dihedral_params(m, a, b)
    return m + 1 - math.gcd(a, m) - math.gcd(b, m)


def _epsilon_spectrum(m: int, a: int, b: int) -> list[int]:
    # n contributes an eigencharacter iff m divides neither n*a nor n*b.
    return [n for n in range(1, m) if (n * a) % m != 0 and (n * b) % m != 0]


def dihedral_profile(m: int, a: int, b: int) -> ActionProfile:
    """Eigencharacter profile of the rotation subgroup of order m.

    The k-th power of the rotation acts with exponent multiset
    {k*n mod m : n in the eigencharacter spectrum}; the spectrum size must
    reproduce the genus formula.
    """
    genus = dihedral_genus(m, a, b)
    spectrum = tuple(_epsilon_spectrum(m, a, b))
    assert len(spectrum) == genus, (m, a, b)
    return cyclic_profile(m, spectrum)


def dihedral_witness_triple(m: int, a: int, b: int) -> tuple[int, int, int] | None:
    """First triple n1 < n2 < n3 of spectrum members with n1 + n2 + n3 = m."""
    spectrum = _epsilon_spectrum(m, a, b)
    members = set(spectrum)
    for i, n1 in enumerate(spectrum):
        for n2 in spectrum[i + 1:]:
            n3 = m - n1 - n2
            if n3 > n2 and n3 in members:
                return (n1, n2, n3)
    return None


def dihedral_vanishing(m: int, a: int, b: int) -> bool:
    """True when the exterior cube of V has no dihedral invariants.

    Equivalent to the absence of a spectrum triple summing to m: a triple
    summing to 2m reflects to one summing to m, and invariants under the
    full dihedral group exist exactly when they exist under the rotation
    subgroup.
    """
    if dihedral_genus(m, a, b) < 3:
        raise DomainError("criterion needs genus >= 3")
    return dihedral_witness_triple(m, a, b) is None


#: Order-3 cover automorphism of y^3 = quartic acting on the three
#: differentials with eigenvalue exponents (1, 1, 2) at level 3.
PRESET_PICARD_C3 = "picard_c3"
#: Order-9 automorphism (x, y) -> (zeta^3 x, zeta y) of y^3 = x^4 + x acting
#: on the basis dx/y^2, x dx/y^2, dx/y with exponents (1, 4, 2) at level 9.
PRESET_C9 = "c9_x4px"
#: Order-7 symmetry of the Klein quartic, exponents (1, 2, 4) at level 7.
PRESET_KLEIN_C7 = "klein_c7"

PRESET_NAMES = (PRESET_PICARD_C3, PRESET_C9, PRESET_KLEIN_C7)


def preset_profile(name: str) -> ActionProfile:
    """Built-in profiles, plus "dihedral:m,a,b" for the cover families."""
    if name == PRESET_PICARD_C3:
        return cyclic_profile(3, (1, 1, 2))
    if name == PRESET_C9:
        return cyclic_profile(9, (1, 4, 2))
    if name == PRESET_KLEIN_C7:
        return cyclic_profile(7, (1, 2, 4))
    if name.startswith("dihedral:"):
        try:
            m, a, b = (int(part) for part in name.split(":", 1)[1].split(","))
        except ValueError as exc:
            raise DomainError(f"expected dihedral:m,a,b, got {name!r}") from exc
        return dihedral_profile(m, a, b)
    raise DomainError(f"unknown profile preset {name!r}")
