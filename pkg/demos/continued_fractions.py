"""Certified continued fractions and irrationality-exponent estimates.

Each constant is enclosed in an exact rational interval; only the partial
quotients shared by both ends (minus one) are kept.  The estimate
1 + max ln q_{k+1} / ln q_k is an estimate and nothing more.
"""
from fractions import Fraction

from wordcomplexity import diophantine as dio
from wordcomplexity.analysis import fmt_decimal
from wordcomplexity.expansions import ConstantSpec, generate_digits

cases = [
    ("e", ConstantSpec.e(), 10, 300),
    ("sqrt 2", ConstantSpec.sqrt(2), 10, 300),
    ("log 2", ConstantSpec.log1p(1, 1), 10, 300),
    ("sum 2^-2^k", ConstantSpec.kmosek_shallit(), 2, 4096),
    ("sum 2^-3^k", ConstantSpec.lacunary(3), 2, 10**4),
    ("sum 2^-floor(2.5^k)", ConstantSpec.lacunary(Fraction(5, 2)), 2, 10**4),
    ("Fibonacci word", ConstantSpec.fibonacci_word(), 2, 4000),
]

for name, spec, base, count in cases:
    cf = dio.continued_fraction(generate_digits(spec, base, count))
    shown = ", ".join(str(a) if a < 10**6 else f"~2^{a.bit_length() - 1}" for a in cf.partial_quotients[:12])
    try:
        est = dio.mu_estimate(cf)
        mu = f"mu_hat = {fmt_decimal(est.mu_hat)} (step {est.argmax})"
    except dio.TooFewTerms:
        mu = "mu_hat: too few large denominators"
    print(f"{name}: {len(cf)} certified terms, [{cf.a0}; {shown}, ...]")
    print(f"  {mu}")
