"""Collapse the summed series into exact zeta-value combinations.

``decompose`` turns sum_{k>=0} G(k) into  sum_j q_j * zeta(j) + q_0  with
exact rational q's, via partial fractions of G:

* a term b/(s+m)**j with j >= 2 sums to b * (zeta(j) - sum_{t<m} t**-j);
* the order-1 coefficients satisfy sum_m b_m = 0 (the summand decays at
  least like s**-2), so their individually divergent pieces telescope to
  the exact rational  -sum_m b_m * H_{m-1}.

The combination reported is c_v = (-1)**v * sum_k G(k): expanding the
series over k of M(z+k)**r around z = 0 as sum_v c_v (-z)**v / v! forces
the (-1)**v, and the choice makes c_1 for (r=2, n=0) equal +2*zeta(3),
matching the manifestly positive integrand it represents.  Confirmed
against the Monte Carlo oracle, not assumed.

The internal basis is zeta(j) only; pi-power conversions (pi^4 = 90*zeta(4))
happen at the report boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .moments import build_summand
from .numtheory import generalized_harmonic, harmonic, lcm_upto
from .polys import Poly, legendre_coeffs
from .ratfunc import partial_fractions
from .serialize import format_fraction, parse_fraction

__all__ = [
    "ZetaCombination",
    "decompose",
    "DecompositionReport",
    "decomposition_report",
    "apery_report",
    "CriterionRecord",
    "rationality_criterion",
]


@dataclass(frozen=True)
class ZetaCombination:
    """Exact value sum_j q_j * zeta(j) + constant, rational q's, j >= 2.

    Canonical form stores only nonzero coefficients, sorted by index, so
    equality is plain structural equality.
    """

    zeta: tuple[tuple[int, Fraction], ...]
    constant: Fraction

    @classmethod
    def make(cls, zeta: Mapping[int, Fraction], constant=0) -> "ZetaCombination":
        items = []
        for j in sorted(zeta):
            q = Fraction(zeta[j])
            if q == 0:
                continue
            if j < 2:
                raise ValueError("zeta indices must be >= 2")
            items.append((j, q))
        return cls(zeta=tuple(items), constant=Fraction(constant))

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.zeta)

    def coeff(self, j: int) -> Fraction:
        return self.as_dict().get(j, Fraction(0))

    @property
    def max_index(self) -> int:
        """Largest zeta index with nonzero coefficient (0 if none)."""
        return self.zeta[-1][0] if self.zeta else 0

    def scaled(self, c) -> "ZetaCombination":
        c = Fraction(c)
        return ZetaCombination.make({j: c * q for j, q in self.zeta}, c * self.constant)

    def common_denominator(self) -> int:
        """Smallest positive D clearing every coefficient to an integer."""
        d = self.constant.denominator
        for _, q in self.zeta:
            d = d * q.denominator // math.gcd(d, q.denominator)
        return d

    def to_json_dict(self) -> dict:
        return {
            "zeta": {str(j): format_fraction(q) for j, q in self.zeta},
            "constant": format_fraction(self.constant),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ZetaCombination":
        zeta = {int(j): parse_fraction(q) for j, q in data["zeta"].items()}
        return cls.make(zeta, parse_fraction(data["constant"]))


def decompose(poly: Poly, r: int, v: int) -> ZetaCombination:
    """Exact zeta-combination equal to (-1)**v * sum_{k>=0} G(k)."""
    spec = build_summand(poly, r, v)
    pf = partial_fractions(spec.summand)
    residues = pf.residue_sum()
    if residues != 0:
        # decay >= 2 forces the order-1 coefficients to cancel; if they do
        # not, the arithmetic upstream is broken, so abort loudly
        raise RuntimeError(
            f"internal invariant violation: order-1 residues sum to {residues}, not 0"
        )
    sign = -1 if v % 2 else 1
    zeta: dict[int, Fraction] = {}
    constant = Fraction(0)
    for t in pf.terms:
        if t.order == 1:
            constant -= t.coeff * harmonic(t.pole - 1)
        else:
            zeta[t.order] = zeta.get(t.order, Fraction(0)) + t.coeff
            constant -= t.coeff * generalized_harmonic(t.pole - 1, t.order)
    return ZetaCombination.make(
        {j: sign * q for j, q in zeta.items()}, sign * constant
    )


@dataclass(frozen=True)
class DecompositionReport:
    """Cleared-denominator view of one decomposition.

    D is the smallest positive integer clearing every zeta coefficient and
    the constant; it is the denominator of the classical display
    (A*pi^4 + B*zeta(5) + G) / D for the r=3, v=2 family.  A is the pi^4
    coefficient D*q_4/90 (an exact rational; the 90 from pi^4 = 90*zeta(4)
    does not always cancel, e.g. at n = 1 and n = 3), B = D*q_5 and
    G = D*q_0 are integers.  A, B, G are populated only for the
    (r, v) = (3, 2) shape.  structure_mismatch flags any coefficient
    outside {zeta(4), zeta(5), constant} for that shape instead of
    discarding it.
    """

    n: int
    r: int
    v: int
    combo: ZetaCombination
    D: int
    A: Fraction | None
    B: int | None
    G: int | None
    divides_lcm_n: bool
    divides_lcm_n1: bool
    structure_mismatch: bool

    def to_json_dict(self) -> dict:
        d = self.combo.to_json_dict()
        return {
            "n": self.n,
            "r": self.r,
            "v": self.v,
            "zeta": d["zeta"],
            "constant": d["constant"],
            "A": format_fraction(self.A) if self.A is not None else None,
            "B": str(self.B) if self.B is not None else None,
            "G": str(self.G) if self.G is not None else None,
            "D": str(self.D),
            "div_lcm_n": self.divides_lcm_n,
            "div_lcm_n1": self.divides_lcm_n1,
            "structure_mismatch": self.structure_mismatch,
        }


def decomposition_report(
    poly: Poly,
    r: int,
    v: int,
    n: int | None = None,
    combo: ZetaCombination | None = None,
) -> DecompositionReport:
    """Report for an arbitrary polynomial; n defaults to its degree.

    Pass a precomputed (e.g. cached) combination via `combo` to skip the
    decomposition.
    """
    if not isinstance(poly, Poly):
        poly = Poly(poly)
    if n is None:
        n = max(poly.degree, 0)
    if combo is None:
        combo = decompose(poly, r, v)
    d = combo.common_denominator()
    cleared = [q * d for _, q in combo.zeta] + [combo.constant * d]
    g = 0
    for x in cleared:
        g = math.gcd(g, x.numerator)
    assert math.gcd(g, d) == 1 or all(x == 0 for x in cleared), (
        "cleared coefficients share a factor with the minimal denominator"
    )
    pole_power = r + v
    a = b = gg = None
    mismatch = False
    if (r, v) == (3, 2):
        a = combo.coeff(4) * d / 90
        b_frac = combo.coeff(5) * d
        g_frac = combo.constant * d
        assert b_frac.denominator == 1 and g_frac.denominator == 1
        b, gg = b_frac.numerator, g_frac.numerator
        mismatch = any(j not in (4, 5) for j, _ in combo.zeta)
    return DecompositionReport(
        n=n,
        r=r,
        v=v,
        combo=combo,
        D=d,
        A=a,
        B=b,
        G=gg,
        divides_lcm_n=lcm_upto(n) ** pole_power % d == 0,
        divides_lcm_n1=lcm_upto(n + 1) ** pole_power % d == 0,
        structure_mismatch=mismatch,
    )


def apery_report(n: int, r: int, v: int) -> DecompositionReport:
    """Report for the shifted-Legendre family member of degree n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return decomposition_report(legendre_coeffs(n), r, v, n=n)


@dataclass(frozen=True)
class CriterionRecord:
    """Smallness data for one n: the quantities the criterion scans watch.

    abs_c is |c_v(n)| to the requested precision; lcm_scaled multiplies by
    lcm(1..n)**(r+v) (the exact integer is kept in lcm_pow); exp_scaled
    multiplies by e**((r+v)n).  ratio_to_prev is |c(n)/c(n-1)|, absent for
    the first record.
    """

    n: int
    abs_c: object  # mpmath.mpf
    lcm_pow: int
    lcm_scaled: object
    exp_scaled: object
    ratio_to_prev: object | None


def rationality_criterion(
    poly_family: Callable[[int], Poly] | None,
    r: int,
    v: int,
    n_max: int,
    precision: int = 30,
    progress: Callable[[int], None] | None = None,
    decomposer: Callable[[Poly, int, int], ZetaCombination] | None = None,
) -> list[CriterionRecord]:
    """Criterion records for n = 0..n_max, exact pipeline + certified zeta.

    |c_v(n)| comes from the exact decomposition evaluated with certified
    high-precision zeta values (never raw series summation).  The working
    precision is raised internally to absorb the size of the cleared
    coefficients, so cancellation between huge q_j's does not eat the
    requested digits.  Output is deterministic and ordered by n.

    `decomposer` lets callers route through a cache; it must be
    extensionally equal to `decompose`.
    """
    from .verify import eval_combination  # late import; verify builds on decomp

    import mpmath

    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if precision < 10:
        raise ValueError("precision must be >= 10")
    if poly_family is None:
        poly_family = legendre_coeffs
    if decomposer is None:
        decomposer = decompose
    records: list[CriterionRecord] = []
    prev_abs = None
    pole_power = r + v
    for n in range(n_max + 1):
        combo = decomposer(poly_family(n), r, v)
        value = eval_combination(combo, precision)
        with mpmath.workdps(precision + 10):
            abs_c = abs(value.value)
            lcm_pow = lcm_upto(n) ** pole_power
            lcm_scaled = mpmath.mpf(lcm_pow) * abs_c
            exp_scaled = mpmath.exp(pole_power * n) * abs_c
            ratio = None
            if prev_abs is not None and prev_abs > 0:
                ratio = abs_c / prev_abs
        records.append(
            CriterionRecord(
                n=n,
                abs_c=abs_c,
                lcm_pow=lcm_pow,
                lcm_scaled=lcm_scaled,
                exp_scaled=exp_scaled,
                ratio_to_prev=ratio,
            )
        )
        prev_abs = abs_c
        if progress is not None:
            progress(n)
    return records


def legendre_family(n: int) -> Poly:
    """Default polynomial family for criterion scans."""
    return legendre_coeffs(n)
