"""Subword complexity p(n), smallest-return function r(n) and repetition exponents.

Both profiles come from one online suffix automaton over the prefix:

* every state ``v`` stands for the factors of lengths
  ``(len(link(v)), len(v)]``, so a difference array over the states gives
  the number of distinct factors of each length;
* right after appending ``x_m``, ``len(link(last))`` is ``L(m)``, the
  length of the longest suffix of ``x_1..x_m`` that also ends at some
  earlier position.  Then ``r(n) = min{m : L(m) >= n}``.

Construction is amortised O(1) per symbol for a fixed alphabet.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .words import SymbolWord, atomic_write_text


class AnalysisError(ValueError):
    pass


class WordTooShort(AnalysisError):
    pass


class EmptyWindow(AnalysisError):
    pass


class Undefined(AnalysisError, LookupError):
    """r(n) has no witness inside the available prefix."""


class SuffixAutomaton:
    """Online suffix automaton that also records ``L(m)`` for every prefix length m."""

    def __init__(self):
        self.length = [0]
        self.link = [-1]
        self.trans: list[dict[int, int]] = [{}]
        self.last = 0
        self.repeat_lengths: list[int] = []  # L(1), L(2), ...

    def __len__(self) -> int:
        return len(self.repeat_lengths)

    def extend(self, c: int) -> int:
        length, link, trans = self.length, self.link, self.trans
        cur = len(length)
        length.append(length[self.last] + 1)
        link.append(0)
        trans.append({})
        p = self.last
        while p != -1 and c not in trans[p]:
            trans[p][c] = cur
            p = link[p]
        if p != -1:
            q = trans[p][c]
            if length[p] + 1 == length[q]:
                link[cur] = q
            else:
                clone = len(length)
                length.append(length[p] + 1)
                link.append(link[q])
                trans.append(dict(trans[q]))
                while p != -1 and trans[p].get(c) == q:
                    trans[p][c] = clone
                    p = link[p]
                link[q] = clone
                link[cur] = clone
        self.last = cur
        rep = length[link[cur]]
        self.repeat_lengths.append(rep)
        return rep

    def feed(self, data: bytes) -> None:
        for c in data:
            self.extend(c)

    def distinct_factor_counts(self, n_max: int) -> np.ndarray:
        """Array ``a`` with ``a[n]`` = number of distinct length-n factors, n = 0..n_max."""
        lengths = np.asarray(self.length, dtype=np.int64)
        links = np.asarray(self.link, dtype=np.int64)
        lo = lengths[links[1:]] + 1
        hi = lengths[1:] + 1
        diff = np.zeros(len(self) + 2, dtype=np.int64)
        np.add.at(diff, lo, 1)
        np.add.at(diff, hi, -1)
        counts = np.cumsum(diff)
        counts[0] = 1
        return counts[: n_max + 1]


def longest_previous_suffixes(w: SymbolWord) -> list[int]:
    """``[L(1), ..., L(len(w))]``."""
    sam = SuffixAutomaton()
    sam.feed(w.symbols)
    return sam.repeat_lengths


@dataclass(frozen=True)
class ComplexityProfile:
    n_max: int
    p: tuple[int, ...]  # p[0] is p(1)
    prefix_length: int
    base: int

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.n_max:
            raise IndexError(f"n={n} outside 1..{self.n_max}")
        return self.p[n - 1]

    def ratio(self, n: int) -> Fraction:
        return Fraction(self[n], n)


@dataclass(frozen=True)
class ReturnProfile:
    n_max: int
    r: tuple[int | None, ...]  # r[0] is r(1); None beyond defined_up_to
    defined_up_to: int
    prefix_length: int

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.n_max:
            raise IndexError(f"n={n} outside 1..{self.n_max}")
        if n > self.defined_up_to:
            raise Undefined(f"r({n}) not witnessed in a prefix of length {self.prefix_length}")
        return self.r[n - 1]

    def get(self, n: int) -> int | None:
        return self.r[n - 1] if 1 <= n <= self.defined_up_to else None

    def defined(self) -> list[int]:
        return list(self.r[: self.defined_up_to])

    def ratio(self, n: int) -> Fraction:
        return Fraction(self[n], n)


@dataclass(frozen=True)
class ExponentEstimate:
    rep_hat: Fraction
    Rep_hat: Fraction
    window: tuple[int, int]
    argmin: int = field(default=0, compare=False)
    argmax: int = field(default=0, compare=False)


def _check_nmax(w: SymbolWord, n_max: int) -> None:
    if n_max < 1:
        raise AnalysisError(f"n_max must be >= 1, got {n_max}")
    if n_max >= len(w):
        raise WordTooShort(f"n_max={n_max} needs a prefix longer than {len(w)} symbols")


def _return_from_repeats(repeats: Sequence[int], n_max: int) -> tuple[list[int | None], int]:
    r: list[int | None] = [None] * n_max
    best = 0
    for m, rep in enumerate(repeats, start=1):
        if rep > best:
            for n in range(best + 1, min(rep, n_max) + 1):
                r[n - 1] = m
            best = rep
            if best >= n_max:
                break
    return r, min(best, n_max)


def profiles(w: SymbolWord, n_max: int) -> tuple[ComplexityProfile, ReturnProfile]:
    """Both profiles from a single automaton pass."""
    _check_nmax(w, n_max)
    sam = SuffixAutomaton()
    sam.feed(w.symbols)
    counts = sam.distinct_factor_counts(n_max)
    cp = ComplexityProfile(n_max, tuple(int(c) for c in counts[1:]), len(w), w.base)
    r, upto = _return_from_repeats(sam.repeat_lengths, n_max)
    return cp, ReturnProfile(n_max, tuple(r), upto, len(w))


def complexity_profile(w: SymbolWord, n_max: int) -> ComplexityProfile:
    return profiles(w, n_max)[0]


def return_profile(w: SymbolWord, n_max: int) -> ReturnProfile:
    _check_nmax(w, n_max)
    sam = SuffixAutomaton()
    # r(n_max) <= len(w) is all we can witness; stop early once reached
    for c in w.symbols:
        if sam.extend(c) >= n_max:
            break
    r, upto = _return_from_repeats(sam.repeat_lengths, n_max)
    return ReturnProfile(n_max, tuple(r), upto, len(w))


def default_window(n_max: int) -> tuple[int, int]:
    return max(1, math.ceil(n_max / 8)), n_max


def exponent_estimate(rp: ReturnProfile, n_lo: int | None = None, n_hi: int | None = None) -> ExponentEstimate:
    """Windowed min/max of r(n)/n as proxies for rep and Rep."""
    if n_lo is None or n_hi is None:
        d_lo, d_hi = default_window(rp.n_max)
        n_lo = d_lo if n_lo is None else n_lo
        n_hi = min(d_hi, rp.defined_up_to) if n_hi is None else n_hi
    if not 1 <= n_lo <= n_hi or n_hi > rp.defined_up_to:
        raise EmptyWindow(f"window [{n_lo}, {n_hi}] not inside [1, {rp.defined_up_to}]")
    ratios = [(Fraction(rp.r[n - 1], n), n) for n in range(n_lo, n_hi + 1)]
    lo = min(ratios)
    hi = max(ratios)
    return ExponentEstimate(lo[0], hi[0], (n_lo, n_hi), argmin=lo[1], argmax=hi[1])


def complexity_ratio_extremes(cp: ComplexityProfile, n_lo: int, n_hi: int) -> tuple[Fraction, Fraction]:
    """(min, max) of p(n)/n over the window."""
    if not 1 <= n_lo <= n_hi <= cp.n_max:
        raise EmptyWindow(f"window [{n_lo}, {n_hi}] not inside [1, {cp.n_max}]")
    ratios = [Fraction(cp.p[n - 1], n) for n in range(n_lo, n_hi + 1)]
    return min(ratios), max(ratios)


def jump_indices(rp: ReturnProfile) -> list[int]:
    r = rp.r
    return [n for n in range(1, rp.defined_up_to) if r[n] >= r[n - 1] + 2]


def complexity_lower_from_return(rp: ReturnProfile, n: int) -> int:
    """The lower bound p(n) >= r(n) - n."""
    return rp[n] - n


def fmt_decimal(x: Fraction | int, places: int = 6) -> str:
    """Round-half-even decimal rendering of an exact rational."""
    x = Fraction(x)
    scaled = round(x * 10**places)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    whole, frac = divmod(scaled, 10**places)
    return f"{sign}{whole}.{frac:0{places}d}"


PROFILE_CSV_HEADER = ("n", "p", "r", "p_over_n", "r_over_n")


def profile_csv(cp: ComplexityProfile, rp: ReturnProfile) -> str:
    if cp.n_max != rp.n_max:
        raise AnalysisError("profiles were computed with different n_max")
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(PROFILE_CSV_HEADER)
    for n in range(1, cp.n_max + 1):
        p = cp.p[n - 1]
        r = rp.get(n)
        out.writerow([
            n,
            p,
            "" if r is None else r,
            fmt_decimal(Fraction(p, n)),
            "" if r is None else fmt_decimal(Fraction(r, n)),
        ])
    return buf.getvalue()


def write_profile_csv(path, cp: ComplexityProfile, rp: ReturnProfile) -> None:
    atomic_write_text(path, profile_csv(cp, rp))
