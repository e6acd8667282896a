"""Exact scalar arithmetic: rationals, univariate polynomials, cyclotomic numbers.

Conventions used throughout the package:

  * Every scalar is a ``fractions.Fraction``: arbitrary precision, always
    stored fully reduced with a positive denominator.  ``rat`` and
    ``rat_str`` convert to and from the "p/q" wire format ("p" when the
    denominator is 1, optional leading minus on the numerator only).
  * A polynomial is a dense tuple of Fraction coefficients, index =
    degree, trailing zeros trimmed.  The zero polynomial has an empty
    coefficient tuple and degree -1.
  * A cyclotomic number of level L is a residue modulo the L-th
    cyclotomic polynomial: a polynomial of degree < phi(L) in a fixed
    primitive L-th root of unity.  Equality at a common level is
    coefficientwise; operands at different levels are lifted to level
    lcm(L1, L2) before combining.

All values are immutable and every operation is a pure function, so they
can be shared freely between threads.  There are no floats anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from .errors import DomainError, NotRationalError

Rat = Fraction

RatLike = Union[Fraction, int, str]


def rat(value: RatLike) -> Fraction:
    """Coerce an int, Fraction, or "p/q" string to an exact rational.

    Floats are rejected: this package never rounds.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"invalid rational literal {value!r}") from exc
    raise DomainError(f"cannot interpret {value!r} as an exact rational")


def rat_str(value: Fraction) -> str:
    """Serialize a rational as "p/q", or "p" when the denominator is 1."""
    return str(value)


def _int_nth_root(k: int, n: int) -> int:
    """Floor of the n-th root of a nonnegative integer, by Newton iteration."""
    if k < 0:
        raise ValueError("negative radicand")
    if k in (0, 1) or n == 1:
        return k
    if n == 2:
        return math.isqrt(k)
    x = 1 << ((k.bit_length() + n - 1) // n)
    while True:
        y = ((n - 1) * x + k // x ** (n - 1)) // n
        if y >= x:
            break
        x = y
    while x ** n > k:
        x -= 1
    return x


def rational_nth_root(q: Fraction, n: int) -> Fraction | None:
    """Exact n-th root of a rational, or None when no rational root exists.

    For even n the input must be >= 0 and the nonnegative root is returned;
    for odd n the sign is carried through.
    """
    if n < 1:
        raise ValueError("root index must be positive")
    if q < 0:
        if n % 2 == 0:
            return None
        r = rational_nth_root(-q, n)
        return None if r is None else -r
    np_, dp = q.numerator, q.denominator
    rn = _int_nth_root(np_, n)
    if rn ** n != np_:
        return None
    rd = _int_nth_root(dp, n)
    if rd ** n != dp:
        return None
    return Fraction(rn, rd)


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact nonnegative square root of a rational, or None."""
    return rational_nth_root(q, 2)


@dataclass(frozen=True)
class UPoly:
    """Dense univariate polynomial over the rationals.

    ``coeffs[i]`` is the coefficient of x^i; trailing zeros are trimmed on
    construction so the leading coefficient is nonzero unless the
    polynomial is zero (empty tuple).
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RatLike] = ()):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def zero(cls) -> UPoly:
        return cls(())

    @classmethod
    def one(cls) -> UPoly:
        return cls((1,))

    @classmethod
    def const(cls, c: RatLike) -> UPoly:
        return cls((rat(c),))

    @classmethod
    def x(cls) -> UPoly:
        return cls((0, 1))

    @classmethod
    def x_pow(cls, k: int) -> UPoly:
        return cls((0,) * k + (1,))

    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> Fraction:
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def evaluate(self, x: RatLike) -> Fraction:
        x = rat(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> UPoly:
        return UPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def compose_xpow(self, k: int) -> UPoly:
        """Substitute x -> x^k."""
        if k < 1:
            raise ValueError("power must be positive")
        out = [Fraction(0)] * (k * self.degree() + 1 if self.coeffs else 0)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return UPoly(out)

    def __add__(self, other: UPoly) -> UPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UPoly(out)

    def __sub__(self, other: UPoly) -> UPoly:
        return self + (-other)

    def __neg__(self) -> UPoly:
        return UPoly(-c for c in self.coeffs)

    def __mul__(self, other: UPoly | RatLike) -> UPoly:
        if not isinstance(other, UPoly):
            s = rat(other)
            return UPoly(c * s for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return UPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, d in enumerate(other.coeffs):
                    out[i + j] += c * d
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> UPoly:
        if n < 0:
            raise ValueError("negative power")
        result = UPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: UPoly) -> tuple[UPoly, UPoly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UPoly.zero(), self
        quot = [Fraction(0)] * (dq + 1)
        inv_lc = 1 / other.lc()
        for i in range(dq, -1, -1):
            q = rem[i + other.degree()] * inv_lc
            quot[i] = q
            if q:
                for j, d in enumerate(other.coeffs):
                    rem[i + j] -= q * d
        return UPoly(quot), UPoly(rem)

    def __floordiv__(self, other: UPoly) -> UPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: UPoly) -> UPoly:
        return divmod(self, other)[1]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree(), -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            term = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            body = str(mag) if (i == 0 or mag != 1) else ""
            glue = "*" if body and term else ""
            if not parts:
                sign = "-" if c < 0 else ""
            else:
                sign = " - " if c < 0 else " + "
            parts.append(f"{sign}{body}{glue}{term}")
        return "".join(parts)


def resultant(p: UPoly, q: UPoly) -> Fraction:
    """Resultant of two polynomials by the Euclidean remainder sequence.

    Uses Res(A, B) = lc(A)^(deg B - deg R) * Res(A, R) for R = B mod A and
    the swap rule Res(A, B) = (-1)^(deg A * deg B) * Res(B, A).
    """
    if p.is_zero() or q.is_zero():
        return Fraction(0)
    dp, dq = p.degree(), q.degree()
    if dq == 0:
        return q.lc() ** dp
    if dp == 0:
        return p.lc() ** dq
    if dp < dq:
        sign = -1 if (dp * dq) % 2 else 1
        return sign * resultant(q, p)
    r = p % q
    if r.is_zero():
        return Fraction(0)
    sign = -1 if (dp * dq) % 2 else 1
    return sign * q.lc() ** (dp - r.degree()) * resultant(q, r)


def poly_discriminant(p: UPoly) -> Fraction:
    """Discriminant via disc(p) = (-1)^(d(d-1)/2) * Res(p, p') / lc(p)."""
    d = p.degree()
    if d < 1:
        raise DomainError("discriminant requires degree >= 1")
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(p, p.derivative()) / p.lc()


def _divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def euler_phi(n: int) -> int:
    """Euler's totient, by trial-division factorization."""
    if n < 1:
        raise DomainError("totient requires a positive integer")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(level: int) -> UPoly:
    """The cyclotomic polynomial of the given level.

    Computed by dividing x^L - 1 by the product of the lower-level
    cyclotomic polynomials at the proper divisors of L.
    """
    if level < 1:
        raise DomainError("cyclotomic level must be positive")
    num = UPoly.x_pow(level) - UPoly.one()
    for d in _divisors(level):
        if d == level:
            continue
        num, rem = divmod(num, cyclotomic_polynomial(d))
        assert rem.is_zero()
    return num


@dataclass(frozen=True, eq=False)
class CycNum:
    """An element of the cyclotomic field of the given level.

    ``rep`` is the unique representative of degree < phi(level) modulo the
    level's cyclotomic polynomial; the constructor reduces whatever it is
    given.  Supports +, -, *, ** and scalar mixing with rationals.
    """

    level: int
    rep: UPoly

    def __post_init__(self):
        if self.level < 1:
            raise DomainError("cyclotomic level must be positive")
        object.__setattr__(self, "rep", self.rep % cyclotomic_polynomial(self.level))

    @classmethod
    def from_rational(cls, value: RatLike, level: int = 1) -> CycNum:
        return cls(level, UPoly.const(rat(value)))

    def _lift(self, level: int) -> CycNum:
        if level == self.level:
            return self
        assert level % self.level == 0
        return CycNum(level, self.rep.compose_xpow(level // self.level))

    def _pair(self, other: CycNum | RatLike) -> tuple[CycNum, CycNum]:
        if not isinstance(other, CycNum):
            other = CycNum.from_rational(rat(other), self.level)
        m = math.lcm(self.level, other.level)
        return self._lift(m), other._lift(m)

    def __add__(self, other: CycNum | RatLike) -> CycNum:
        a, b = self._pair(other)
        return CycNum(a.level, a.rep + b.rep)

    __radd__ = __add__

    def __sub__(self, other: CycNum | RatLike) -> CycNum:
        a, b = self._pair(other)
        return CycNum(a.level, a.rep - b.rep)

    def __rsub__(self, other: CycNum | RatLike) -> CycNum:
        a, b = self._pair(other)
        return CycNum(a.level, b.rep - a.rep)

    def __neg__(self) -> CycNum:
        return CycNum(self.level, -self.rep)

    def __mul__(self, other: CycNum | RatLike) -> CycNum:
        a, b = self._pair(other)
        return CycNum(a.level, a.rep * b.rep)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> CycNum:
        if n < 0:
            raise ValueError("negative power not supported")
        result = CycNum.from_rational(1, self.level)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (Fraction, int)):
            other = CycNum.from_rational(other, self.level)
        if not isinstance(other, CycNum):
            return NotImplemented
        a, b = self._pair(other)
        return a.rep == b.rep

    def is_rational(self) -> bool:
        return self.rep.degree() <= 0

    def __str__(self) -> str:
        return f"CycNum(level={self.level}, {self.rep})"

    __repr__ = __str__


def root_of_unity(level: int, exponent: int) -> CycNum:
    """The primitive level-th root of unity raised to the given exponent."""
    if level < 1:
        raise DomainError("cyclotomic level must be positive")
    return CycNum(level, UPoly.x_pow(exponent % level))


def cyc_to_rational(z: CycNum) -> Fraction:
    """Extract the rational value of a degree-0 cyclotomic number.

    Correct because powers of the root of unity below phi(level) form a
    basis, so a reduced representative of positive degree is irrational.
    """
    if not z.is_rational():
        raise NotRationalError(f"not rational: {z}")
    return z.rep.coeff(0)
