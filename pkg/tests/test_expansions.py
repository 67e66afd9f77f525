from fractions import Fraction

import mpmath
import pytest

import frozen
import oracles
from wordcomplexity import analysis
from wordcomplexity.expansions import (
    ConstantSpec,
    ExpansionError,
    InvalidSpec,
    PrecisionExhausted,
    QuadraticSurd,
    cache_path,
    dumps_digits,
    enclose,
    generate_digits,
    generate_word,
    integer_part,
    lacunary_positions,
    loads_digits,
    mechanical_symbols,
    parse_spec,
)
from wordcomplexity.words import word_to_text


def digits(spec, base, count, **kw):
    return generate_digits(spec, base, count, **kw).text()


def test_spec_examples():
    assert digits(ConstantSpec.kmosek_shallit(), 2, 16) == "0101000100000001"
    assert digits(ConstantSpec.e(), 10, 10) == "7182818284"
    assert digits(ConstantSpec.champernowne(10), 10, 10) == "1234567891"
    assert digits(ConstantSpec.log1p(1, 1), 10, 6) == "693147"
    assert digits(ConstantSpec.fibonacci_word(), 2, 8) == "01001010"
    assert word_to_text(generate_word(ConstantSpec.fibonacci_word(), 2)) == "01"


def test_integer_parts():
    assert generate_digits(ConstantSpec.e(), 10, 5).integer_part == 2
    assert generate_digits(ConstantSpec.sqrt(2), 10, 5).integer_part == 1
    assert integer_part(ConstantSpec.kmosek_shallit()) == 0


def _mp_decimal_digits(func, count):
    with mpmath.workdps(count + 50):
        x = func()
        n = int(mpmath.floor((x - mpmath.floor(x)) * mpmath.mpf(10) ** count))
    return str(n).zfill(count)


@pytest.mark.parametrize(
    "spec, func",
    [
        (ConstantSpec.sqrt(2), lambda: mpmath.sqrt(2)),
        (ConstantSpec.sqrt(7), lambda: mpmath.sqrt(7)),
        (ConstantSpec.arcsin_form(1, 3), lambda: mpmath.sqrt(8) * mpmath.asin(mpmath.mpf(1) / 3)),
        (ConstantSpec.arcsin_form(2, 5), lambda: mpmath.sqrt(21) * mpmath.asin(mpmath.mpf(2) / 5)),
        (ConstantSpec.log1p(2, 7), lambda: mpmath.log(mpmath.mpf(9) / 7)),
        (ConstantSpec.log1p(5, 1), lambda: mpmath.log(6)),
    ],
)
def test_analytic_constants_against_mpmath(spec, func):
    assert digits(spec, 10, 200) == _mp_decimal_digits(func, 200)


def test_e_and_log2_against_series_oracles():
    assert list(generate_digits(ConstantSpec.e(), 10, 120).digits) == oracles.e_digits_oracle(120)
    assert list(generate_digits(ConstantSpec.e(), 7, 80).digits) == oracles.e_digits_oracle(80, 7)
    assert list(generate_digits(ConstantSpec.log1p(1, 1), 10, 60).digits) == oracles.log2_digits_oracle(60)


def test_ks_matches_direct_oracle():
    cd = generate_digits(ConstantSpec.kmosek_shallit(), 2, frozen.KS_DIGITS)
    assert cd.digits.symbols == oracles.ks_digits_direct(frozen.KS_DIGITS)


def test_base_consistency():
    b2 = digits(ConstantSpec.kmosek_shallit(), 2, 64)
    b4 = digits(ConstantSpec.kmosek_shallit(), 4, 32)
    assert "".join(format(int(c), "02b") for c in b4) == b2
    e16 = digits(ConstantSpec.e(), 16, 50)
    e2 = digits(ConstantSpec.e(), 2, 200)
    assert "".join(format(int(c, 16), "04b") for c in e16) == e2


def test_lacunary_positions():
    assert lacunary_positions(2, 4) == [2, 4, 8, 16]
    assert lacunary_positions(Fraction(5, 2), 4) == [2, 6, 15, 39]
    assert lacunary_positions(3, 3) == [3, 9, 27]
    mu = QuadraticSurd(1, 1, 5, 1)  # 1 + sqrt 5
    with mpmath.workdps(80):
        expected = [int(mpmath.floor((1 + mpmath.sqrt(5)) ** k)) for k in range(1, 25)]
    assert lacunary_positions(mu, 24) == expected


def test_lacunary_digits_have_ones_at_positions():
    cd = generate_digits(ConstantSpec.lacunary(Fraction(5, 2)), 2, 300)
    ones = [i + 1 for i, d in enumerate(cd.digits) if d]
    assert ones == [p for p in lacunary_positions(Fraction(5, 2), 10) if p <= 300]


def test_golden_mechanical_word():
    w = mechanical_symbols(QuadraticSurd.golden_conjugate(), Fraction(0), 8)
    assert list(w) == frozen.GOLDEN_MECHANICAL_8
    with mpmath.workdps(60):
        theta = (mpmath.sqrt(5) - 1) / 2
        rho = mpmath.mpf(1) / 3
        expected = [int(mpmath.floor((k + 1) * theta + rho) - mpmath.floor(k * theta + rho)) for k in range(2000)]
    got = mechanical_symbols(QuadraticSurd.golden_conjugate(), Fraction(1, 3), 2000)
    assert list(got) == expected


def test_sturmian_complexity():
    w = generate_word(ConstantSpec.sturmian(QuadraticSurd(-2, 1, 7, 3), Fraction(2, 5)), 10**4)
    cp = analysis.complexity_profile(w, 1000)
    assert all(cp[n] == n + 1 for n in range(1, 1001))


def test_generate_word_rejects_numeric_kinds():
    with pytest.raises(InvalidSpec):
        generate_word(ConstantSpec.e(), 10)


@pytest.mark.parametrize(
    "make",
    [
        lambda: ConstantSpec.log1p(0, 1),
        lambda: ConstantSpec.arcsin_form(3, 3),
        lambda: ConstantSpec.sqrt(4),
        lambda: ConstantSpec.lacunary(1),
        lambda: ConstantSpec.champernowne(1),
        lambda: ConstantSpec.sturmian(QuadraticSurd(1, 1, 4, 2), 0),
        lambda: ConstantSpec("pi", ()),
        lambda: parse_spec("nonsense(("),
    ],
)
def test_invalid_specs(make):
    with pytest.raises(InvalidSpec):
        make()


@pytest.mark.parametrize(
    "text",
    ["e", "log1p(2,7)", "arcsin_form(1,3)", "sqrt(2)", "lacunary(5/2)", "lacunary(surd(1,1,5,1))",
     "kmosek_shallit", "champernowne(10)", "fibonacci_word", "sturmian(surd(-1,1,5,2),1/3)"],
)
def test_parse_round_trip(text):
    spec = parse_spec(text)
    assert spec.canonical == text
    assert parse_spec(spec.canonical) == spec


def test_aliases():
    assert parse_spec("ks") == ConstantSpec.kmosek_shallit()
    assert parse_spec("fibonacci") == ConstantSpec.fibonacci_word()
    assert parse_spec("log(1,1)") == ConstantSpec.log1p(1, 1)


def test_enclosures_tighten_with_precision():
    for spec in (ConstantSpec.e(), ConstantSpec.log1p(1, 1), ConstantSpec.arcsin_form(1, 3)):
        a, b = enclose(spec, 200), enclose(spec, 400)
        assert a.lo <= b.lo <= b.hi <= a.hi
        assert b.hi - b.lo < Fraction(1, 2**390)


def test_precision_exhausted():
    with pytest.raises(PrecisionExhausted):
        generate_digits(ConstantSpec.e(), 10, 500, max_precision=256)


def test_count_must_be_positive():
    with pytest.raises(ExpansionError):
        generate_digits(ConstantSpec.e(), 10, 0)


def test_digit_file_round_trip():
    cd = generate_digits(ConstantSpec.e(), 10, 200)
    text = dumps_digits(cd)
    lines = text.splitlines()
    assert lines[:3] == ["DIGITS v1", "id=e base=10 count=200", f"cert=factorial-tail prec={cd.precision}"]
    assert all(len(line) <= 80 for line in lines[3:])
    assert loads_digits(text) == cd


def test_cache_reuse_and_truncation(tmp_path):
    spec = ConstantSpec.log1p(2, 7)
    long = generate_digits(spec, 10, 300, cache_dir=tmp_path)
    path = cache_path(tmp_path, spec, 10)
    assert path.exists()
    assert list(tmp_path.iterdir()) == [path]  # no temp files left behind
    short = generate_digits(spec, 10, 100, cache_dir=tmp_path)
    assert short.digits == long.digits.prefix(100)
    assert short.precision == long.precision  # served from the cache


def test_corrupt_digit_file():
    with pytest.raises(ExpansionError):
        loads_digits("DIGITS v1\nid=e base=10 count=5\ncert=factorial-tail prec=64\n718\n")
