"""Certified b-ary digits of classical constants and symbolic word families.

Every constant is enclosed in an exact rational interval ``[lo, hi]``
(integer numerators over a common denominator).  ``count`` fractional digits
are emitted only when ``floor(lo * b**count) == floor(hi * b**count)``,
which forces agreement at every shorter length too.  Otherwise the working
precision doubles, up to a configurable cap.

Quadratic surds are handled exactly: ``floor((A + B*sqrt(d)) / C)`` is
computed with integer square roots, so mechanical words and lacunary
positions with surd parameters never rely on floating point.
"""
from __future__ import annotations

import hashlib
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import gmpy2

from .words import Alphabet, SymbolWord, atomic_write_text, word_from_text, word_to_text, wrap_digits

DEFAULT_MAX_PRECISION = 2**20


class ExpansionError(ValueError):
    pass


class InvalidSpec(ExpansionError):
    pass


class PrecisionExhausted(ExpansionError, ArithmeticError):
    pass


# ---------------------------------------------------------------- surds


def _floor_sqrt_times(B: int, d: int) -> tuple[int, bool]:
    """floor(B*sqrt(d)) and whether B*sqrt(d) is an integer."""
    r = math.isqrt(B * B * d)
    exact = r * r == B * B * d
    if B >= 0:
        return r, exact
    return (-r if exact else -r - 1), exact


@dataclass(frozen=True)
class QuadraticSurd:
    """The real number ``(a + b*sqrt(d)) / c`` with ``c > 0``, ``d`` not a perfect square."""

    a: int
    b: int
    d: int
    c: int = 1

    def __post_init__(self):
        if self.c <= 0:
            raise InvalidSpec("surd denominator must be positive")
        if self.d < 2 or math.isqrt(self.d) ** 2 == self.d:
            raise InvalidSpec(f"surd radicand must be a positive non-square, got {self.d}")
        g = math.gcd(math.gcd(self.a, self.b), self.c)
        if g > 1:
            object.__setattr__(self, "a", self.a // g)
            object.__setattr__(self, "b", self.b // g)
            object.__setattr__(self, "c", self.c // g)

    @classmethod
    def golden_conjugate(cls) -> "QuadraticSurd":
        """(sqrt(5) - 1) / 2."""
        return cls(-1, 1, 5, 2)

    @property
    def is_irrational(self) -> bool:
        return self.b != 0

    def floor(self) -> int:
        s, _ = _floor_sqrt_times(self.b, self.d)
        return (self.a + s) // self.c

    def _pair(self) -> tuple[Fraction, Fraction]:
        return Fraction(self.a, self.c), Fraction(self.b, self.c)

    @classmethod
    def _from_pair(cls, x: Fraction, y: Fraction, d: int) -> "QuadraticSurd | Fraction":
        if y == 0:
            return x
        c = x.denominator * y.denominator // math.gcd(x.denominator, y.denominator)
        return cls(int(x * c), int(y * c), d, c)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            x, y = self._pair()
            return self._from_pair(x + other, y, self.d)
        return NotImplemented

    __radd__ = __add__

    def __mul__(self, other):
        x, y = self._pair()
        if isinstance(other, (int, Fraction)):
            return self._from_pair(x * other, y * other, self.d)
        if isinstance(other, QuadraticSurd) and other.d == self.d:
            u, v = other._pair()
            return self._from_pair(x * u + y * v * self.d, x * v + y * u, self.d)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out: QuadraticSurd | Fraction = Fraction(1)
        for _ in range(k):
            out = self * out
        return out

    def compare(self, q: Fraction | int) -> int:
        """Sign of ``self - q``, exactly."""
        x, y = self._pair()
        lhs = x - Fraction(q)  # sign of lhs + y*sqrt(d)
        if y == 0:
            return (lhs > 0) - (lhs < 0)
        if lhs >= 0 and y > 0:
            return 1
        if lhs <= 0 and y < 0:
            return -1
        diff = y * y * self.d - lhs * lhs
        s = (diff > 0) - (diff < 0)
        return s if y > 0 else -s

    def __float__(self) -> float:
        return (self.a + self.b * math.sqrt(self.d)) / self.c

    def canonical(self) -> str:
        return f"surd({self.a},{self.b},{self.d},{self.c})"


def _floor(x: Fraction | int | QuadraticSurd) -> int:
    if isinstance(x, QuadraticSurd):
        return x.floor()
    return math.floor(x)


def _fmt_number(x: Fraction | int | QuadraticSurd) -> str:
    if isinstance(x, QuadraticSurd):
        return x.canonical()
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------- specs

KINDS = (
    "e", "log1p", "arcsin_form", "sqrt", "lacunary",
    "kmosek_shallit", "champernowne", "fibonacci_word", "sturmian",
)
WORD_KINDS = ("fibonacci_word", "sturmian")


@dataclass(frozen=True)
class ConstantSpec:
    kind: str
    params: tuple = ()

    def __post_init__(self):
        k, p = self.kind, self.params
        if k not in KINDS:
            raise InvalidSpec(f"unknown constant kind {k!r}")
        try:
            if k == "log1p":
                s, t = p
                ok = isinstance(s, int) and isinstance(t, int) and s >= 1 and t >= 1
            elif k == "arcsin_form":
                s, t = p
                ok = isinstance(s, int) and isinstance(t, int) and 0 < s < t
            elif k == "sqrt":
                (d,) = p
                ok = isinstance(d, int) and d >= 2 and math.isqrt(d) ** 2 != d
            elif k == "lacunary":
                (mu,) = p
                ok = isinstance(mu, (int, Fraction, QuadraticSurd)) and (
                    mu.compare(2) >= 0 if isinstance(mu, QuadraticSurd) else mu >= 2
                )
            elif k == "champernowne":
                (b,) = p
                ok = isinstance(b, int) and 2 <= b <= 36
            elif k == "sturmian":
                theta, rho = p
                ok = (
                    isinstance(theta, QuadraticSurd)
                    and theta.compare(0) > 0
                    and theta.compare(1) < 0
                    and isinstance(rho, (int, Fraction))
                    and 0 <= rho < 1
                )
            else:
                ok = p == ()
        except (TypeError, ValueError):
            ok = False
        if not ok:
            raise InvalidSpec(f"invalid parameters {p!r} for {k}")

    # convenience constructors
    @classmethod
    def e(cls):
        return cls("e")

    @classmethod
    def log1p(cls, s: int, t: int):
        """log(1 + s/t)."""
        return cls("log1p", (s, t))

    @classmethod
    def arcsin_form(cls, s: int, t: int):
        """sqrt(t^2 - s^2) * arcsin(s/t)."""
        return cls("arcsin_form", (s, t))

    @classmethod
    def sqrt(cls, d: int):
        return cls("sqrt", (d,))

    @classmethod
    def lacunary(cls, mu):
        if isinstance(mu, (int, str)):
            mu = Fraction(mu)
        return cls("lacunary", (mu,))

    @classmethod
    def kmosek_shallit(cls):
        return cls("kmosek_shallit")

    @classmethod
    def champernowne(cls, base: int = 10):
        return cls("champernowne", (base,))

    @classmethod
    def fibonacci_word(cls):
        return cls("fibonacci_word")

    @classmethod
    def sturmian(cls, theta: QuadraticSurd, rho=Fraction(0)):
        return cls("sturmian", (theta, Fraction(rho)))

    @property
    def canonical(self) -> str:
        if not self.params:
            return self.kind
        return f"{self.kind}({','.join(_fmt_number(x) for x in self.params)})"

    def __str__(self) -> str:
        return self.canonical


_ALIASES = {"ks": "kmosek_shallit", "fibonacci": "fibonacci_word", "log": "log1p"}


def _split_args(body: str) -> list[str]:
    out, depth, cur = [], 0, ""
    for ch in body:
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
            continue
        depth += (ch == "(") - (ch == ")")
        cur += ch
    if cur or out:
        out.append(cur)
    return [a.strip() for a in out]


def _parse_number(text: str):
    m = re.fullmatch(r"surd\((.*)\)", text)
    if m:
        nums = [int(v) for v in _split_args(m.group(1))]
        return QuadraticSurd(*nums)
    v = Fraction(text)
    return v.numerator if v.denominator == 1 else v


def parse_spec(text: str) -> ConstantSpec:
    """Inverse of :attr:`ConstantSpec.canonical` (also accepts ``ks``, ``fibonacci``)."""
    text = text.strip().replace(" ", "")
    m = re.fullmatch(r"([a-z_0-9]+)(?:\((.*)\))?", text)
    if not m:
        raise InvalidSpec(f"cannot parse constant spec {text!r}")
    kind = _ALIASES.get(m.group(1), m.group(1))
    try:
        args = tuple(_parse_number(a) for a in _split_args(m.group(2))) if m.group(2) else ()
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidSpec(f"bad parameters in {text!r}: {exc}") from None
    if kind == "lacunary" and args and isinstance(args[0], int):
        args = (Fraction(args[0]),)
    if kind == "sturmian" and len(args) == 2 and isinstance(args[1], int):
        args = (args[0], Fraction(args[1]))
    return ConstantSpec(kind, args)


# ---------------------------------------------------------------- words


def fibonacci_symbols(length: int) -> bytes:
    """Prefix of the fixed point of 0 -> 01, 1 -> 0."""
    a, b = b"\x00", b"\x00\x01"
    while len(b) < length:
        a, b = b, b + a
    return b[:length] if length > 1 else a[:length]


def mechanical_symbols(theta: QuadraticSurd, rho: Fraction, length: int) -> bytes:
    """``s_k = floor((k+1)*theta + rho) - floor(k*theta + rho)`` for ``k = 0..length-1``."""
    rho = Fraction(rho)
    # k*theta + rho = (k*a*q + p*c + k*b*q*sqrt(d)) / (c*q)
    a, b, d, c = theta.a, theta.b, theta.d, theta.c
    p, q = rho.numerator, rho.denominator
    C = c * q
    isqrt = math.isqrt

    def fl(k: int) -> int:
        B = k * b * q
        r = isqrt(B * B * d)
        if B < 0:
            r = -r if r * r == B * B * d else -r - 1
        return (k * a * q + p * c + r) // C

    out = bytearray(length)
    prev = fl(0)
    for k in range(length):
        nxt = fl(k + 1)
        out[k] = nxt - prev
        prev = nxt
    return bytes(out)


def generate_word(spec: ConstantSpec, length: int) -> SymbolWord:
    if length < 1:
        raise ExpansionError("length must be >= 1")
    if spec.kind == "fibonacci_word":
        return SymbolWord(fibonacci_symbols(length), 2)
    if spec.kind == "sturmian":
        theta, rho = spec.params
        return SymbolWord(mechanical_symbols(theta, rho, length), 2)
    raise InvalidSpec(f"{spec.kind} is not a symbolic word family")


def lacunary_positions(mu, count: int) -> list[int]:
    """``floor(mu**k)`` for ``k = 1..count``, exactly."""
    if isinstance(mu, QuadraticSurd):
        if mu.compare(2) < 0:
            raise InvalidSpec("lacunary exponent must be >= 2")
        out, pw = [], Fraction(1)
        for _ in range(count):
            pw = mu * pw
            out.append(_floor(pw))
        return out
    mu = Fraction(mu)
    if mu < 2:
        raise InvalidSpec("lacunary exponent must be >= 2")
    n, d = mu.numerator, mu.denominator
    return [n**k // d**k for k in range(1, count + 1)]


def _positions_up_to(mu, limit: int) -> list[int]:
    out: list[int] = []
    pw = Fraction(1)
    while True:
        pw = mu * pw
        pos = _floor(pw)
        if pos > limit:
            return out
        out.append(pos)


def champernowne_symbols(base: int, length: int) -> bytes:
    out = bytearray()
    k = 1
    while len(out) < length:
        out += bytes(int(ch, 36) for ch in gmpy2.mpz(k).digits(base))
        k += 1
    return bytes(out[:length])


# ---------------------------------------------------------------- enclosures


@dataclass(frozen=True)
class Enclosure:
    """``[num_lo / den, num_hi / den]``."""

    num_lo: int
    num_hi: int
    den: int
    method: str

    @property
    def lo(self) -> Fraction:
        return Fraction(self.num_lo, self.den)

    @property
    def hi(self) -> Fraction:
        return Fraction(self.num_hi, self.den)


def _enclose_e(prec: int) -> Enclosure:
    # sum_{k<=K} 1/k! = acc/K!, tail < 1/(K! K)
    acc, fact, K = 1, 1, 0
    while True:
        K += 1
        acc = acc * K + 1
        fact *= K
        if (fact * K) >> prec:
            break
    return Enclosure(acc * K, acc * K + 1, fact * K, "factorial-tail")


def _geometric_terms(num: int, den: int, work: int) -> int:
    """Smallest K with (num/den)^(2K+3) / (1 - (num/den)^2) <= 2^-work."""
    ratio = math.log2(den / num)
    K = max(0, math.ceil((work + 2 - 3 * ratio) / (2 * ratio)))
    while True:
        e = 2 * K + 3
        # num^e * den^2 * 2^work <= den^e * (den^2 - num^2)
        if (num**e * den * den) << work <= den**e * (den * den - num * num):
            return K
        K += 1


def _enclose_log1p(s: int, t: int, prec: int) -> Enclosure:
    # log(1 + s/t) = 2 atanh(y),  y = s / (2t + s) <= 1/3
    u, v = s, 2 * t + s
    work = prec + 8 + (2 * _geometric_terms(u, v, prec) + 8).bit_length() + 2
    K = _geometric_terms(u, v, work)
    D = 1 << work
    u2, v2 = u * u, v * v
    z = (D * u) // v
    total = 0
    for k in range(K + 1):
        total += z // (2 * k + 1)
        z = (z * u2) // v2
    # truncation: each power term is low by < k+1 ulp, each quotient by < 1 more
    err = 2 * (K + 1) + 1
    return Enclosure(2 * total, 2 * (total + err), D, "atanh-geometric")


def _enclose_arcsin_form(s: int, t: int, prec: int) -> Enclosure:
    # sqrt(t^2-s^2) arcsin(s/t) = ((t^2-s^2)/t) * sum_k c_k x^(2k+1),
    # x = s/t, c_0 = 1, c_k = c_{k-1} * 2k/(2k+1)  (so 0 < c_k <= 1)
    work = prec + 8 + t.bit_length() + 2 * (_geometric_terms(s, t, prec) + 2).bit_length() + 2
    K = _geometric_terms(s, t, work)
    D = 1 << work
    s2, t2 = s * s, t * t
    z = (D * s) // t
    total = z
    for k in range(1, K + 1):
        z = (z * s2 * 2 * k) // (t2 * (2 * k + 1))
        total += z
    err = (K + 1) * (K + 2) // 2 + 1
    f = t2 - s2
    return Enclosure(f * total, f * (total + err), t * D, "arcsin-geometric")


def _enclose_sqrt(d: int, prec: int) -> Enclosure:
    r = math.isqrt(d << (2 * prec))
    return Enclosure(r, r + 1, 1 << prec, "isqrt")


def _native_digits(spec: ConstantSpec, n: int) -> tuple[int, bytes]:
    """(native base, first n fractional digits) for digit-defined constants."""
    kind = spec.kind
    if kind == "fibonacci_word":
        return 2, fibonacci_symbols(n)
    if kind == "sturmian":
        return 2, mechanical_symbols(*spec.params, n)
    if kind == "champernowne":
        (b,) = spec.params
        return b, champernowne_symbols(b, n)
    mu = Fraction(2) if kind == "kmosek_shallit" else spec.params[0]
    buf = bytearray(n)
    for pos in _positions_up_to(mu, n):
        buf[pos - 1] = 1
    return 2, bytes(buf)


def _enclose_digit_word(spec: ConstantSpec, prec: int) -> Enclosure:
    base, _ = _native_digits(spec, 0)
    n = math.ceil(prec / math.log2(base)) + 1
    base, digits = _native_digits(spec, n)
    if base == 2:
        N = int(digits.translate(_BIT_TEXT).decode("ascii"), 2)
    else:
        N = int(gmpy2.mpz(word_to_text(SymbolWord._trusted(digits, Alphabet(base))), base))
    return Enclosure(N, N + 1, base**n, "digit-tail")


_BIT_TEXT = bytes.maketrans(b"\x00\x01", b"01")


def enclose(spec: ConstantSpec, prec: int) -> Enclosure:
    """Rational enclosure of width about ``2**-prec``."""
    kind = spec.kind
    if kind == "e":
        return _enclose_e(prec)
    if kind == "log1p":
        return _enclose_log1p(*spec.params, prec)
    if kind == "arcsin_form":
        return _enclose_arcsin_form(*spec.params, prec)
    if kind == "sqrt":
        return _enclose_sqrt(spec.params[0], prec)
    return _enclose_digit_word(spec, prec)


# ---------------------------------------------------------------- digits


@dataclass(frozen=True)
class CertifiedDigits:
    spec: ConstantSpec
    base: Alphabet
    digits: SymbolWord
    integer_part: int
    certificate: str
    precision: int

    @property
    def count(self) -> int:
        return len(self.digits)

    def enclosure(self) -> tuple[Fraction, Fraction]:
        """``[ip + D/b^N, ip + (D+1)/b^N]``, which contains the constant."""
        b, n = self.base.size, self.count
        D = int(gmpy2.mpz(word_to_text(self.digits), b)) if n else 0
        lo = Fraction(self.integer_part * b**n + D, b**n)
        return lo, lo + Fraction(1, b**n)

    def text(self) -> str:
        return word_to_text(self.digits)


def _extract(enc: Enclosure, base: int, count: int) -> tuple[int, int] | None:
    scale = base**count
    d_lo = (enc.num_lo * scale) // enc.den
    d_hi = (enc.num_hi * scale) // enc.den
    if d_lo != d_hi:
        return None
    return divmod(d_lo, scale)


def _digit_string(value: int, base: int, count: int) -> str:
    if count == 0:
        return ""
    return gmpy2.mpz(value).digits(base).zfill(count)


def generate_digits(
    spec: ConstantSpec,
    base: Alphabet | int,
    count: int,
    *,
    precision: int | None = None,
    max_precision: int = DEFAULT_MAX_PRECISION,
    cache_dir: str | Path | None = None,
) -> CertifiedDigits:
    """First ``count`` fractional base-``base`` digits of ``spec``, certified."""
    if count < 1:
        raise ExpansionError("count must be >= 1")
    alphabet = base if isinstance(base, Alphabet) else Alphabet(base)
    b = alphabet.size
    if cache_dir is not None:
        hit = read_cached(cache_dir, spec, alphabet, count)
        if hit is not None:
            return hit
    prec = precision or math.ceil(count * math.log2(b)) + 32
    while prec <= max_precision:
        enc = enclose(spec, prec)
        got = _extract(enc, b, count)
        if got is not None:
            ip, frac = got
            digits = word_from_text(_digit_string(frac, b, count), alphabet)
            out = CertifiedDigits(spec, alphabet, digits, ip, enc.method, prec)
            if cache_dir is not None:
                write_cached(cache_dir, out)
            return out
        prec *= 2
    raise PrecisionExhausted(
        f"could not certify {count} base-{b} digits of {spec.canonical} within {max_precision} bits"
    )


def integer_part(spec: ConstantSpec, max_precision: int = DEFAULT_MAX_PRECISION) -> int:
    prec = 64
    while prec <= max_precision:
        enc = enclose(spec, prec)
        lo, hi = enc.num_lo // enc.den, enc.num_hi // enc.den
        if lo == hi:
            return lo
        prec *= 2
    raise PrecisionExhausted(f"integer part of {spec.canonical} not certified")


# ---------------------------------------------------------------- cache


def cache_path(cache_dir: str | Path, spec: ConstantSpec, base: Alphabet | int) -> Path:
    b = base.size if isinstance(base, Alphabet) else base
    key = hashlib.sha256(f"{spec.canonical} base={b}".encode()).hexdigest()[:32]
    return Path(cache_dir) / f"{key}.digits"


def dumps_digits(cd: CertifiedDigits) -> str:
    lines = [
        "DIGITS v1",
        f"id={cd.spec.canonical} base={cd.base.size} count={cd.count}",
        f"cert={cd.certificate} prec={cd.precision}",
    ]
    lines += wrap_digits(cd.text())
    return "\n".join(lines) + "\n"


def loads_digits(content: str) -> CertifiedDigits:
    lines = content.splitlines()
    if len(lines) < 3 or lines[0] != "DIGITS v1":
        raise ExpansionError("not a DIGITS v1 file")
    head = dict(item.split("=", 1) for item in lines[1].split())
    cert = dict(item.split("=", 1) for item in lines[2].split())
    spec = parse_spec(head["id"])
    base, count = Alphabet(int(head["base"])), int(head["count"])
    body = "".join(lines[3:])
    if len(body) != count:
        raise ExpansionError(f"digit file declares {count} digits, holds {len(body)}")
    return CertifiedDigits(
        spec, base, word_from_text(body, base), integer_part(spec), cert["cert"], int(cert["prec"])
    )


def write_cached(cache_dir: str | Path, cd: CertifiedDigits) -> Path:
    path = cache_path(cache_dir, cd.spec, cd.base)
    atomic_write_text(path, dumps_digits(cd))
    return path


def read_cached(cache_dir, spec: ConstantSpec, base: Alphabet | int, count: int) -> CertifiedDigits | None:
    """Cached digits truncated to ``count``; None if absent or too short."""
    path = cache_path(cache_dir, spec, base)
    if not path.exists():
        return None
    cd = loads_digits(path.read_text(encoding="ascii"))
    if cd.spec != spec or cd.count < count:
        return None
    if cd.count == count:
        return cd
    return CertifiedDigits(cd.spec, cd.base, cd.digits.prefix(count), cd.integer_part, cd.certificate, cd.precision)
