"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored lowest degree first, as ``fractions.Fraction``; the
zero polynomial is the empty tuple (degree -1).  Construction strips trailing
zeros, so equal polynomials compare equal structurally.  Instances are
immutable and safe to share between tasks.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .numtheory import binomial

__all__ = ["Poly", "legendre_coeffs", "integrate_poly_01"]

RationalLike = int | Fraction


class Poly:
    """Polynomial sum(c[l] * x**l) with exact rational coefficients."""

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- basic structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def int_coeffs(self) -> list[int]:
        """Coefficients as ints; raises if any coefficient is non-integer."""
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError(f"coefficient {c} is not an integer")
            out.append(c.numerator)
        return out

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(other))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def scale(self, c: RationalLike) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return Poly()
        return Poly([c * a for a in self.coeffs])

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: RationalLike) -> Fraction:
        """Exact evaluation by Horner's rule."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, a: RationalLike) -> "Poly":
        """Taylor shift: the polynomial q with q(t) = p(t + a)."""
        a = Fraction(a)
        out = list(self.coeffs)
        n = len(out)
        # synthetic division by (t - a) repeated; O(n^2) exact
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                out[j] += a * out[j + 1]
        return Poly(out)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Polynomial division with remainder over the rationals."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quo = [Fraction(0)] * (dq + 1)
        lead = other.leading
        dcs = other.coeffs
        for i in range(dq, -1, -1):
            c = rem[i + len(dcs) - 1] / lead
            quo[i] = c
            if c:
                for j, d in enumerate(dcs):
                    rem[i + j] -= c * d
        return Poly(quo), Poly(rem)

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ValueError("polynomial division is not exact")
        return q

    def abs_coeffs(self) -> "Poly":
        """Polynomial with the absolute values of the coefficients."""
        return Poly([abs(c) for c in self.coeffs])

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(1 / self.leading)

    # -- integer-polynomial helpers -------------------------------------------

    def clear_denominators(self) -> tuple[list[int], int]:
        """Return (integer coefficient list, d) with self == intpoly / d."""
        d = 1
        for c in self.coeffs:
            d = d * c.denominator // math.gcd(d, c.denominator)
        return [int(c * d) for c in self.coeffs], d


def legendre_coeffs(n: int) -> Poly:
    """Shifted Legendre polynomial on [0, 1], integer coefficients.

    Closed form a(n, l) = (-1)**l * C(n, l) * C(n+l, l); equals the n-th
    Rodrigues derivative (1/n!) d^n/dx^n [x^n (1-x)^n].
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    return Poly([(-1) ** l * binomial(n, l) * binomial(n + l, l) for l in range(n + 1)])


def integrate_poly_01(p: Poly | Sequence[RationalLike]) -> Fraction:
    """Exact integral of p over [0, 1]: sum of c[l] / (l + 1)."""
    coeffs = p.coeffs if isinstance(p, Poly) else [Fraction(c) for c in p]
    return sum((c / (l + 1) for l, c in enumerate(coeffs)), Fraction(0))
