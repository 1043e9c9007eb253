"""Wire formats: rationals as "p/q" strings, polynomials as JSON arrays.

Rationals serialize in lowest terms with positive denominator; the
denominator is omitted when it equals 1.  Polynomials serialize lowest
degree first.
"""

from __future__ import annotations

from fractions import Fraction

from .polys import Poly

__all__ = ["format_fraction", "parse_fraction", "poly_to_strings", "poly_from_strings"]


def format_fraction(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(s: str) -> Fraction:
    return Fraction(s.strip())


def poly_to_strings(p: Poly) -> list[str]:
    return [format_fraction(c) for c in p.coeffs]


def poly_from_strings(items: list[str]) -> Poly:
    return Poly([parse_fraction(s) for s in items])
