from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wordcomplexity.structure import (
    AlphabetMismatch,
    InvalidExponent,
    NotOccurrences,
    border_array,
    build_power,
    commuting_roots,
    is_primitive,
    overlap_period,
    power_decompose,
    primitive_root,
    smallest_period,
)
from wordcomplexity.words import SymbolWord, word_from_text, word_to_text


def w2(text):
    return word_from_text(text, 2)


def test_smallest_period_examples():
    assert smallest_period(w2("0000")) == 1
    assert smallest_period(w2("010010")) == 3
    assert smallest_period(w2("01")) == 2
    assert border_array(w2("010010")) == [0, 0, 1, 1, 2, 3]


def test_primitivity():
    assert is_primitive(w2("0110"))
    assert not is_primitive(w2("0101"))
    assert word_to_text(primitive_root(w2("010010"))) == "010"
    assert word_to_text(primitive_root(w2("01001"))) == "01001"


def test_power_decompose_examples():
    d = power_decompose(w2("01010"))
    assert (word_to_text(d.root), d.exponent) == ("01", Fraction(5, 2))
    d = power_decompose(w2("0110"))
    assert (word_to_text(d.root), d.exponent) == ("0110", 1)
    d = power_decompose(word_from_text("aaa", 36))
    assert (word_to_text(d.root), d.exponent) == ("a", 3)


def test_build_power_examples():
    ab = word_from_text("ab", 36)
    assert word_to_text(build_power(ab, Fraction(7, 4))) == "abab"
    assert word_to_text(build_power(ab, 1)) == "ab"
    assert word_to_text(build_power(ab, Fraction(5, 2))) == "ababa"
    with pytest.raises(InvalidExponent):
        build_power(ab, Fraction(1, 2))


def test_overlap_examples():
    w = w2("0101010")
    assert overlap_period(w, 1, 3, 5) == 2
    assert overlap_period(w, 1, 5, 3) is None  # disjoint
    with pytest.raises(NotOccurrences):
        overlap_period(w, 1, 2, 3)


@given(st.lists(st.integers(0, 1), min_size=2, max_size=40), st.data())
def test_overlap_soundness(symbols, data):
    w = SymbolWord(symbols, 2)
    n = len(w)
    length = data.draw(st.integers(2, n))
    i = data.draw(st.integers(1, n - length + 1))
    j = data.draw(st.integers(i, n - length + 1))
    s = w.symbols
    if s[i - 1 : i - 1 + length] != s[j - 1 : j - 1 + length]:
        return
    d = overlap_period(w, i, j, length)
    if j - i >= length or j == i:
        assert d is None
    else:
        assert d == j - i
        span = s[i - 1 : j - 1 + length]
        assert all(span[x] == span[x + d] for x in range(len(span) - d))


def test_commuting_examples():
    root, k, l = commuting_roots(w2("0101"), w2("01"))
    assert (word_to_text(root), k, l) == ("01", 2, 1)
    assert commuting_roots(w2("01"), w2("10")) is None
    root, k, l = commuting_roots(w2("000"), w2("00"))
    assert (word_to_text(root), k, l) == ("0", 3, 2)
    with pytest.raises(AlphabetMismatch):
        commuting_roots(w2("01"), word_from_text("01", 3))


@given(st.lists(st.integers(0, 2), min_size=1, max_size=12), st.integers(1, 5))
def test_power_round_trip(symbols, k):
    w = SymbolWord(symbols, 3)
    if not is_primitive(w):
        return
    for e in (Fraction(k), Fraction(2 * k + 1, 2), Fraction(4 * k + 3, 4)):
        built = build_power(w, e)
        d = power_decompose(built)
        assert d.rebuild() == built
        assert is_primitive(d.root)
