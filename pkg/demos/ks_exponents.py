"""The binary constant sum 2^(-2^k) and how slowly its profiles settle.

Its complexity ratio p(n)/n tends to 3/2 and its return ratio r(n)/n has
limsup 5/2, but the finite profile overshoots at n = 2^k - 1, where
r(n) = 5 * 2^(k-1) - 1.  This prints the ratios near powers of two and the
window estimates for a few windows.
"""
from wordcomplexity import analysis
from wordcomplexity.expansions import ConstantSpec, generate_digits

DIGITS = 2**14
N_MAX = 2048

cd = generate_digits(ConstantSpec.kmosek_shallit(), 2, DIGITS)
cp, rp = analysis.profiles(cd.digits, N_MAX)
print(f"{DIGITS} certified digits ({cd.certificate}), first 32: {cd.text()[:32]}")
print("     n    p(n)/n    r(n)/n")
for k in range(4, 12):
    for n in (2**k - 1, 2**k):
        print(f"  {n:4d}  {analysis.fmt_decimal(cp.ratio(n))}  {analysis.fmt_decimal(rp.ratio(n))}")

print("\nwindow         min p/n    rep_hat    Rep_hat   argmax")
for window in [(64, 2048), (128, 2048), (256, 2048), (1024, 2048)]:
    est = analysis.exponent_estimate(rp, *window)
    p_min, _ = analysis.complexity_ratio_extremes(cp, *window)
    print(
        f"{str(window):13s} {analysis.fmt_decimal(p_min)}  {analysis.fmt_decimal(est.rep_hat)}"
        f"  {analysis.fmt_decimal(est.Rep_hat)}  {est.argmax:6d}"
    )
