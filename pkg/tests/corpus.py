"""Every word the suite analyses, so the pointwise lemmas can be checked over all of them."""
import itertools
import random

from wordcomplexity.expansions import ConstantSpec, QuadraticSurd, generate_digits, generate_word
from wordcomplexity.words import SymbolWord, word_from_text

NAMED = {
    "zeros10": "0" * 10,
    "0110": "0110",
    "alt8": "01010101",
    "fib7": "0100101",
    "fib10": "0100101001",
    "aabaabaa": "aabaabaa",
    "010101": "010101",
    "thue_morse32": "01101001100101101001011001101001",
}


def named_words():
    out = {}
    for key, text in NAMED.items():
        base = 36 if any(c.isalpha() for c in text) else 2
        out[key] = word_from_text(text, base)
    return out


def exhaustive_binary(max_len=12):
    for length in range(2, max_len + 1):
        for bits in itertools.product((0, 1), repeat=length):
            yield SymbolWord(bits, 2)


def random_ternary(count=500, max_len=64, seed=20261015):
    rng = random.Random(seed)
    for _ in range(count):
        length = rng.randint(2, max_len)
        yield SymbolWord([rng.randrange(3) for _ in range(length)], 3)


def generated_prefixes():
    """Long prefixes used by acceptance and verify tests."""
    golden = QuadraticSurd.golden_conjugate()
    return {
        "fibonacci_1e5": generate_word(ConstantSpec.fibonacci_word(), 10**5),
        "ks_2p14": generate_digits(ConstantSpec.kmosek_shallit(), 2, 2**14).digits,
        "golden_mechanical_1e4": generate_word(ConstantSpec.sturmian(golden), 10**4),
        "champernowne_1e4": generate_digits(ConstantSpec.champernowne(10), 10, 10**4).digits,
        "e_base10_2000": generate_digits(ConstantSpec.e(), 10, 2000).digits,
        "log2_base2_4000": generate_digits(ConstantSpec.log1p(1, 1), 2, 4000).digits,
        "xi3_1e4": generate_digits(ConstantSpec.lacunary(3), 2, 10**4).digits,
        "zeros_2000": SymbolWord(bytes(2000), 2),
    }
