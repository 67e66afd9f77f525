"""Complexity and return profiles of Sturmian words.

A Sturmian word has exactly n + 1 factors of each length n, and its first
repetitions come no later than 2n + 1.  We check both on the Fibonacci word
and on a mechanical word with a different slope, then print a short table.
"""
from fractions import Fraction

from wordcomplexity import analysis
from wordcomplexity.expansions import ConstantSpec, QuadraticSurd, generate_word
from wordcomplexity.words import word_to_text

LENGTH = 20000
N_MAX = 500

specs = {
    "fibonacci": ConstantSpec.fibonacci_word(),
    "slope sqrt(2)-1": ConstantSpec.sturmian(QuadraticSurd(-1, 1, 2, 1), Fraction(1, 3)),
}

for name, spec in specs.items():
    word = generate_word(spec, LENGTH)
    cp, rp = analysis.profiles(word, N_MAX)
    r = rp.defined()
    print(f"{name}: {word_to_text(word.prefix(32))}...")
    print(f"  p(n) = n + 1 for all n <= {N_MAX}: {all(cp[n] == n + 1 for n in range(1, N_MAX + 1))}")
    print(f"  max r(n) - 2n over n <= {len(r)}: {max(x - 2 * n for n, x in enumerate(r, start=1))}")
    print("     n   p(n)   r(n)   r(n)/n")
    for n in (1, 2, 5, 13, 34, 89, 233):
        print(f"  {n:4d} {cp[n]:6d} {rp[n]:6d}   {analysis.fmt_decimal(rp.ratio(n))}")
    est = analysis.exponent_estimate(rp)
    print(f"  window {est.window}: rep_hat = {float(est.rep_hat):.4f}, Rep_hat = {float(est.Rep_hat):.4f}\n")
