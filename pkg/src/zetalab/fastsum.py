"""Certified float64 summation of N(k)/D(k) over long integer ranges.

Used when a direct series sum needs more terms than high-precision
arithmetic can afford (slow 1/k**2-type decay).  Every float64 operation is
covered by a running error bound in the standard model fl(a op b) =
(a op b)(1 + delta), |delta| <= u = 2**-53:

* Horner evaluation of a degree-m polynomial, including the initial
  rounding of exact rational coefficients to float64, is off by at most
  gamma * Ptilde(k), where Ptilde takes absolute coefficients and
  gamma = (2m + 3) * u * (1 + small slack);
* the quotient error combines numerator and denominator bounds through
  |N/D| <= (|Nhat| + E_N) / (|Dhat| - E_D), which requires the computed
  denominator to dominate its own error (checked; violation aborts);
* chunk sums use numpy's pairwise reduction, bounded by
  (130 + log2(chunk)) * u * sum|q| (numpy unrolls blocks of 128);
  chunk totals are combined exactly with math.fsum.

The returned bound is a Fraction built from exact float64-to-rational
conversions, inflated by 1 % to absorb the (positive, well-conditioned)
rounding of the bound computation itself.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

__all__ = ["CertifiedSumError", "certified_range_sum"]

_U = 2.0**-53
_CHUNK = 1 << 16


class CertifiedSumError(RuntimeError):
    """float64 evaluation cannot certify the requested summation."""


def _horner_pair(coeffs: np.ndarray, abscoeffs: np.ndarray, x: np.ndarray):
    """Evaluate p(x) and the absolute-coefficient majorant ptilde(x)."""
    acc = np.full_like(x, coeffs[-1])
    mag = np.full_like(x, abscoeffs[-1])
    for c, a in zip(coeffs[-2::-1], abscoeffs[-2::-1]):
        acc = acc * x + c
        mag = mag * x + a
    return acc, mag


def certified_range_sum(
    num_coeffs: list[Fraction],
    den_coeffs: list[Fraction],
    k_start: int,
    k_end: int,
) -> tuple[float, Fraction]:
    """Sum of num(k)/den(k) for k in [k_start, k_end) with certified error.

    Returns (float64 sum, rigorous bound on |float sum - exact sum|).
    Raises CertifiedSumError when float64 cannot be certified (coefficient
    overflow, denominator too close to zero, non-finite intermediates).
    """
    if k_end <= k_start:
        return 0.0, Fraction(0)
    try:
        nc = np.array([float(c) for c in num_coeffs], dtype=np.float64)
        dc = np.array([float(c) for c in den_coeffs], dtype=np.float64)
    except OverflowError as exc:
        raise CertifiedSumError("coefficients overflow float64") from exc
    if not (np.isfinite(nc).all() and np.isfinite(dc).all()):
        raise CertifiedSumError("coefficients overflow float64")
    nabs = np.abs(nc)
    dabs = np.abs(dc)
    gn = (2 * (len(nc) - 1) + 3) * _U * 1.0001
    gd = (2 * (len(dc) - 1) + 3) * _U * 1.0001
    chunk_vals: list[float] = []
    err_total = 0.0
    log2_chunk = max(1, math.ceil(math.log2(_CHUNK)))
    sum_gamma = (130.0 + log2_chunk) * _U
    k = k_start
    while k < k_end:
        hi = min(k + _CHUNK, k_end)
        kk = np.arange(k, hi, dtype=np.float64)
        with np.errstate(over="ignore", invalid="ignore"):
            nh, nt = _horner_pair(nc, nabs, kk)
            dh, dt = _horner_pair(dc, dabs, kk)
        if not (np.isfinite(nt).all() and np.isfinite(dt).all()):
            raise CertifiedSumError("polynomial values overflow float64")
        e_n = gn * nt
        e_d = gd * dt
        dh_abs = np.abs(dh)
        if not (dh_abs > 2.0 * e_d).all():
            raise CertifiedSumError("denominator too close to zero to certify")
        q = nh / dh
        e_q = (e_n + e_d * (np.abs(nh) + e_n) / (dh_abs - e_d)) / dh_abs + _U * np.abs(q)
        chunk_sum = float(np.sum(q))
        abs_sum = float(np.sum(np.abs(q)))
        err_total += float(np.sum(e_q)) + sum_gamma * abs_sum
        chunk_vals.append(chunk_sum)
        k = hi
    total = math.fsum(chunk_vals)
    if not math.isfinite(total) or not math.isfinite(err_total):
        raise CertifiedSumError("summation overflowed float64")
    # fsum is correctly rounded; cover its final rounding plus the (benign)
    # float accumulation of the bound itself
    err_total += _U * abs(total)
    bound = Fraction(err_total) * Fraction(101, 100)
    return total, bound
