from fractions import Fraction

from zetalab.polys import Poly
from zetalab.serialize import (
    format_fraction,
    parse_fraction,
    poly_from_strings,
    poly_to_strings,
)


def test_format_lowest_terms_positive_denominator():
    assert format_fraction(Fraction(-3, 6)) == "-1/2"
    assert format_fraction(Fraction(4, -6)) == "-2/3"
    assert format_fraction(Fraction(7)) == "7"
    assert format_fraction(Fraction(0)) == "0"
    assert format_fraction(5) == "5"


def test_parse_roundtrip():
    for s in ("-1/2", "7", "0", "355/113", "-12"):
        assert format_fraction(parse_fraction(s)) == s


def test_poly_strings_lowest_degree_first():
    p = Poly([1, Fraction(-1, 2), 0, 3])
    ss = poly_to_strings(p)
    assert ss == ["1", "-1/2", "0", "3"]
    assert poly_from_strings(ss) == p
