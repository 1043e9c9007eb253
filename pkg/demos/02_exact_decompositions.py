#!/usr/bin/env python3
"""From r-fold integrals to exact zeta combinations.

The r-fold unit-cube integral of (-log(x1..xr))**v / (1 - x1..xr) times a
product of copies of P_n collapses, via partial fractions of the moment
power's derivative, into an exact rational combination of zeta values.
The case r=3, v=2 produces the classical shape (A pi^4 + B zeta(5) + G)/D.
"""

from zetalab import apery_report, decompose, legendre_coeffs

print("The n=0 cases recover familiar series:")
for r, v, label in [
    (2, 0, "zeta(2)"),
    (3, 0, "zeta(3)"),
    (2, 1, "2 zeta(3)   (the log-weighted double integral)"),
    (3, 2, "12 zeta(5)"),
]:
    combo = decompose(legendre_coeffs(0), r, v)
    terms = " + ".join(f"{q} zeta({j})" for j, q in combo.zeta)
    const = f" + {combo.constant}" if combo.constant else ""
    print(f"  r={r} v={v}:  {terms}{const}   [{label}]")

print()
print("r=3, v=2 over the polynomial family: cleared-denominator reports.")
print("D is the smallest integer clearing the zeta-basis coefficients; the")
print("pi^4 coefficient A = D*q_4/90 can be a non-integer rational, because")
print("the 90 from pi^4 = 90 zeta(4) need not cancel (watch n=1 and n=3).")
print()
print(f"{'n':>2} {'A':>22} {'B':>24} {'G':>28} {'D':>10}  D|lcm(n)^5  D|lcm(n+1)^5")
for n in range(7):
    rep = apery_report(n, 3, 2)
    print(
        f"{n:>2} {str(rep.A):>22} {rep.B:>24} {rep.G:>28} {rep.D:>10}"
        f"  {str(rep.divides_lcm_n):>10}  {str(rep.divides_lcm_n1):>11}"
    )

print()
print("Structure check: only zeta(4), zeta(5) and a rational constant appear")
print("(q_2 = q_3 = 0 exactly).  This is the shape that would, with strong")
print("enough smallness, force irrationality among pi^4 and zeta(5).")
for n in range(7):
    combo = apery_report(n, 3, 2).combo
    assert combo.coeff(2) == 0 and combo.coeff(3) == 0
print("  confirmed for n <= 6")
