"""Periodicity toolkit: borders, fractional powers, overlaps and commuting words."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .words import Factor, SymbolWord, WordError, factor_equal


class InvalidExponent(WordError):
    pass


class NotOccurrences(WordError):
    pass


class AlphabetMismatch(WordError):
    pass


def border_array(w: SymbolWord) -> list[int]:
    """``b[i]`` = length of the longest proper border of ``w[:i+1]``."""
    s = w.symbols
    b = [0] * len(s)
    k = 0
    for i in range(1, len(s)):
        while k and s[i] != s[k]:
            k = b[k - 1]
        if s[i] == s[k]:
            k += 1
        b[i] = k
    return b


def smallest_period(w: SymbolWord) -> int:
    if len(w) == 0:
        raise WordError("empty word has no period")
    return len(w) - border_array(w)[-1]


def is_primitive(w: SymbolWord) -> bool:
    """True unless ``w = u^k`` for some shorter ``u`` and integer ``k >= 2``."""
    n = len(w)
    p = smallest_period(w)
    return not (p < n and n % p == 0)


def primitive_root(w: SymbolWord) -> SymbolWord:
    p = smallest_period(w)
    return w.prefix(p) if len(w) % p == 0 else w


def build_power(w: SymbolWord, t) -> SymbolWord:
    """``floor(t)`` copies of ``w`` then its prefix of length ``ceil((t - floor(t)) * |w|)``."""
    t = Fraction(t)
    if t < 1:
        raise InvalidExponent(f"exponent must be >= 1, got {t}")
    whole = math.floor(t)
    tail = math.ceil((t - whole) * len(w))
    return w * whole + w.prefix(tail)


@dataclass(frozen=True)
class PowerDecomposition:
    root: SymbolWord
    exponent: Fraction
    total_length: int

    def rebuild(self) -> SymbolWord:
        return build_power(self.root, self.exponent)


def power_decompose(w: SymbolWord) -> PowerDecomposition:
    """Write ``w`` as ``(root)^t`` with ``t >= 2``, or as ``w^1`` when no such root exists."""
    n = len(w)
    p = smallest_period(w)
    if n >= 2 * p:
        return PowerDecomposition(w.prefix(p), Fraction(n, p), n)
    return PowerDecomposition(w, Fraction(1), n)


def overlap_period(w: SymbolWord, i: int, j: int, length: int) -> int | None:
    """Period ``j - i`` forced by two overlapping occurrences at ``i < j`` (1-based).

    Returns None when the occurrences do not overlap.  The period is checked
    symbol by symbol over ``x_i .. x_{j+length-1}`` before it is returned.
    """
    if not factor_equal(w, Factor(i, length), Factor(j, length)):
        raise NotOccurrences(f"factors at {i} and {j} of length {length} differ")
    d = j - i
    if d <= 0 or d >= length:
        return None
    s = w.symbols
    lo, hi = i - 1, j - 1 + length
    if any(s[x] != s[x + d] for x in range(lo, hi - d)):
        return None
    return d


def commuting_roots(z1: SymbolWord, z2: SymbolWord) -> tuple[SymbolWord, int, int] | None:
    """If ``z1 z2 = z2 z1``, the primitive ``T`` and ``k, l`` with ``z1 = T^k``, ``z2 = T^l``."""
    if z1.alphabet != z2.alphabet:
        raise AlphabetMismatch("words are over different alphabets")
    if not len(z1) or not len(z2):
        raise WordError("commuting_roots needs nonempty words")
    if z1 + z2 != z2 + z1:
        return None
    root = primitive_root(z1.prefix(math.gcd(len(z1), len(z2))))
    k, l = len(z1) // len(root), len(z2) // len(root)
    assert root * k == z1 and root * l == z2
    return root, k, l
