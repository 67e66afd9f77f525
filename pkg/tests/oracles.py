"""Brute-force reference implementations, independent of the library code paths."""
from fractions import Fraction
from math import factorial


def brute_p(s, n):
    """Distinct length-n factors by direct enumeration."""
    return len({bytes(s[i : i + n]) for i in range(len(s) - n + 1)})


def brute_r(s, n):
    """Smallest m such that x_{m-n+1..m} occurs at some i <= m-n (1-based); None if no witness."""
    s = bytes(s)
    for m in range(n + 1, len(s) + 1):
        tail = s[m - n : m]
        for i in range(0, m - n):
            if s[i : i + n] == tail:
                return m
    return None


def hashed_r(s, n):
    """Same quantity as brute_r, by a first-repeat scan with a set; fast enough for n in the thousands."""
    s = bytes(s)
    seen = set()
    for m in range(n, len(s) + 1):
        f = s[m - n : m]
        if f in seen:
            return m
        seen.add(f)
    return None


def ks_digits_direct(count):
    """Binary digits of sum 2^(-2^k), k >= 1: ones exactly at positions 2, 4, 8, ..."""
    d = bytearray(count)
    k = 1
    while 2**k <= count:
        d[2**k - 1] = 1
        k += 1
    return bytes(d)


def e_digits_oracle(count, base=10):
    """Fractional digits of e from the factorial series with the tail bound 2/(K+1)!."""
    K = 10
    while True:
        K += 10
        s = sum(Fraction(1, factorial(k)) for k in range(K + 1))
        lo, hi = s, s + Fraction(2, factorial(K + 1))
        a = (lo * base**count).__floor__()
        b = (hi * base**count).__floor__()
        if a == b:
            frac = a % base**count
            out = []
            for _ in range(count):
                frac, d = divmod(frac, base)
                out.append(d)
            return out[::-1]


def log_digits_oracle(x_num, x_den, count):
    """Fractional decimal digits of log(1 + x), 0 < x < 1, from the alternating series.

    Partial sums of sum (-1)^(k+1) x^k / k alternate around the limit, so two
    consecutive partial sums bracket it.
    """
    x = Fraction(x_num, x_den)
    s, k = Fraction(0), 0
    while True:
        k += 1
        prev = s
        s += (-1) ** (k + 1) * x**k / k
        lo, hi = min(prev, s), max(prev, s)
        a = (lo * 10**count).__floor__()
        if k > 2 and a == (hi * 10**count).__floor__():
            return lo, hi


def log2_digits_oracle(count):
    """log 2 = log(1 + 1/2) + log(1 + 1/3), each enclosed by its alternating series."""
    lo1, hi1 = log_digits_oracle(1, 2, count + 2)
    lo2, hi2 = log_digits_oracle(1, 3, count + 2)
    lo, hi = lo1 + lo2, hi1 + hi2
    a = (lo * 10**count).__floor__()
    assert a == (hi * 10**count).__floor__()
    return [int(c) for c in str(a).zfill(count)]


def e_cf_terms(count):
    """e = [2; 1, 2, 1, 1, 4, 1, 1, 6, ...] generated from its known pattern."""
    out = [2]
    k = 1
    while len(out) < count:
        out += [1, 2 * k, 1]
        k += 1
    return out[:count]
