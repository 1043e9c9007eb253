import random
from fractions import Fraction

import pytest

from zetalab.fastsum import CertifiedSumError, certified_range_sum


def exact_sum(num, den, k0, k1):
    total = Fraction(0)
    for k in range(k0, k1):
        nv = sum(c * Fraction(k) ** i for i, c in enumerate(num))
        dv = sum(c * Fraction(k) ** i for i, c in enumerate(den))
        total += nv / dv
    return total


def test_certified_bound_holds_on_random_cases():
    rng = random.Random(13)
    for _ in range(20):
        deg_d = rng.randint(1, 4)
        # denominator with all-positive coefficients and +1 shift keeps k
        # away from the roots
        den = [Fraction(rng.randint(1, 9)) for _ in range(deg_d)] + [Fraction(1)]
        num = [Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(deg_d)]
        if all(c == 0 for c in num):
            continue
        k0, k1 = rng.randint(0, 4), rng.randint(256, 3000)
        val, bound = certified_range_sum(num, den, k0, k1)
        truth = exact_sum(num, den, k0, k1)
        assert abs(Fraction(val) - truth) <= bound


def test_certified_bound_tightness_simple_case():
    # sum 1/(k+1)^2 over a long range: bound should be tiny but valid
    num = [Fraction(1)]
    den = [Fraction(1), Fraction(2), Fraction(1)]
    val, bound = certified_range_sum(num, den, 0, 200_000)
    truth = exact_sum([Fraction(1)], den, 0, 64)  # head only, for sanity
    assert bound < Fraction(1, 10**10)
    assert Fraction(val) > truth  # longer sum strictly larger


def test_empty_range():
    val, bound = certified_range_sum([Fraction(1)], [Fraction(1), Fraction(1)], 5, 5)
    assert val == 0.0 and bound == 0


def test_denominator_near_zero_rejected():
    # D(k) = k^2 - 9 + 1e-20 is ~1e-20 at k = 3: cannot certify
    den = [Fraction(-9) + Fraction(1, 10**20), Fraction(0), Fraction(1)]
    with pytest.raises(CertifiedSumError):
        certified_range_sum([Fraction(1)], den, 0, 10)


def test_coefficient_overflow_rejected():
    with pytest.raises(CertifiedSumError):
        certified_range_sum([Fraction(10) ** 400], [Fraction(1), Fraction(1)], 0, 10)


def test_value_overflow_rejected():
    # k^8 * 1e300 overflows float64 well before k = 10**4
    num = [Fraction(10) ** 300] + [Fraction(0)] * 7 + [Fraction(10) ** 300]
    den = [Fraction(1)] + [Fraction(0)] * 8 + [Fraction(1)]
    with pytest.raises(CertifiedSumError):
        certified_range_sum(num, den, 0, 10**4)
