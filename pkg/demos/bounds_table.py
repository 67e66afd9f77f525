"""Complexity and return-time lower bounds as functions of the irrationality exponent.

The bounds are informative only while mu is below the root of
2 mu (mu - 1)(mu - 2) = 1, near 2.1915.  Everything here is exact rational
arithmetic; decimals are only for display.
"""
from fractions import Fraction

from wordcomplexity import diophantine as dio
from wordcomplexity.analysis import fmt_decimal

lo, hi = dio.critical_mu()
print(f"critical mu in [{fmt_decimal(lo)}, {fmt_decimal(hi)}] (width {float(hi - lo):.1e})\n")

print("   mu     F_liminf   F_limsup   G_rep      vacuous")
for mu in [Fraction(2), Fraction(41, 20), Fraction(21, 10), Fraction(43, 20), Fraction(219, 100), Fraction(11, 5), Fraction(5, 2), Fraction(3)]:
    t = dio.bound_table(mu)
    flags = ",".join(k for k, v in t.vacuous.items() if v) or "-"
    print(f"  {float(mu):5.3f}  {fmt_decimal(t.F_liminf)}  {fmt_decimal(t.F_limsup)}  {fmt_decimal(t.G_rep)}  {flags}")

print("\nBounds from a measured lower return exponent rho:")
print("   rho    h_Rep      P_low      mu >=")
for rho in [Fraction(1), Fraction(3, 2), Fraction(8, 5), Fraction(2), Fraction(5, 2)]:
    side = dio.rep_side_bounds(rho)
    mu = dio.mu_lower_from_rep(rho)
    mu_text = "inf" if mu == dio.INFINITE else fmt_decimal(mu)
    note = "  (below the floor Rep >= 2)" if side.below_floor else ""
    print(f"  {float(rho):4.2f}  {fmt_decimal(side.h_Rep)}  {fmt_decimal(side.P_low)}  {mu_text}{note}")

print("\nlog(1 + s/t) example bound 9/8 - 4 ln s / ln t:")
for s, t in [(2, 2**32), (2, 2**40), (3, 10**6), (10, 10**30), (7, 7)]:
    b = dio.log_example_bound(s, t)
    print(f"  s={s}, t={t}: {fmt_decimal(b.value)}{'  vacuous' if b.vacuous else ''}")
