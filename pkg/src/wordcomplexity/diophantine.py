"""Continued fractions, irrationality-exponent estimates and the bound formulas.

All bound formulas are evaluated exactly over ``Fraction``.  Logarithms,
which only enter estimates, are computed at 128 bits with directed rounding
(``mpmath.libmp``) so every ratio comes with a rigorous rational enclosure.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import gmpy2
from mpmath import libmp

from .expansions import CertifiedDigits

LOG_PRECISION = 128
DEFAULT_Q_MIN = 2**16
INFINITE = math.inf


class DiophantineError(ValueError):
    pass


class RationalSuspected(DiophantineError):
    pass


class TooFewTerms(DiophantineError):
    pass


class InvalidMu(DiophantineError):
    pass


class InvalidRep(DiophantineError):
    pass


class InvalidArgs(DiophantineError):
    pass


# ---------------------------------------------------------------- continued fractions


def cf_terms(x: Fraction) -> list[int]:
    """Finite continued fraction ``[a0; a1, ..., an]`` of a rational."""
    p, q = x.numerator, x.denominator
    out = []
    while q:
        a, r = divmod(p, q)
        out.append(a)
        p, q = q, r
    return out


def convergents(terms: list[int]) -> list[tuple[int, int]]:
    """``(p_k, q_k)`` for k = 0..len(terms)-1."""
    out = []
    p0, q0, p1, q1 = 1, 0, 0, 1  # p_{-1}, q_{-1}, p_{-2}, q_{-2}
    for a in terms:
        p, q = a * p0 + p1, a * q0 + q1
        out.append((p, q))
        p0, q0, p1, q1 = p, q, p0, q0
    return out


@dataclass(frozen=True)
class ContinuedFraction:
    a0: int
    partial_quotients: tuple[int, ...]  # a_1..a_K
    convergents: tuple[tuple[int, int], ...]  # (p_0, q_0)..(p_K, q_K)

    @property
    def terms(self) -> tuple[int, ...]:
        return (self.a0,) + self.partial_quotients

    def __len__(self) -> int:
        return len(self.partial_quotients)

    def determinants(self) -> list[int]:
        """``p_k q_{k-1} - p_{k-1} q_k`` for k = 1..K."""
        c = self.convergents
        return [c[k][0] * c[k - 1][1] - c[k - 1][0] * c[k][1] for k in range(1, len(c))]


def continued_fraction_of_interval(lo: Fraction, hi: Fraction) -> ContinuedFraction:
    """Terms shared by every real in ``[lo, hi]``, less one for safety."""
    a = cf_terms(lo)
    b = cf_terms(hi)
    common = 0
    for x, y in zip(a, b):
        if x != y:
            break
        common += 1
    # the last shared term may still be truncation damage
    certified = a[: max(common - 1, 0)]
    if len(certified) < 4:
        raise RationalSuspected(
            f"only {max(len(certified) - 1, 0)} partial quotients certified; value may be rational"
        )
    return ContinuedFraction(certified[0], tuple(certified[1:]), tuple(convergents(certified)))


def continued_fraction(digits: CertifiedDigits) -> ContinuedFraction:
    if digits.count < 8:
        raise DiophantineError("need at least 8 certified digits")
    lo, hi = digits.enclosure()
    return continued_fraction_of_interval(lo, hi)


# ---------------------------------------------------------------- irrationality exponent


def _raw_fraction(v) -> Fraction:
    sign, man, exp, _ = v
    x = Fraction(int(man)) * Fraction(2) ** exp
    return -x if sign else x


def _log_bound(n: int, rnd: str):
    return libmp.mpf_log(libmp.from_int(n, LOG_PRECISION, rnd), LOG_PRECISION, rnd)


def log_ratio_interval(num: int, den: int) -> tuple[Fraction, Fraction]:
    """Rational enclosure of ``ln(num) / ln(den)`` for integers ``num >= 1``, ``den >= 2``."""
    lo = libmp.mpf_div(_log_bound(num, "f"), _log_bound(den, "c"), LOG_PRECISION, "f")
    hi = libmp.mpf_div(_log_bound(num, "c"), _log_bound(den, "f"), LOG_PRECISION, "c")
    return _raw_fraction(lo), _raw_fraction(hi)


@dataclass(frozen=True)
class IrrationalityEstimate:
    mu_hat: Fraction
    k_used: int
    per_step: tuple[Fraction, ...] = field(repr=False)  # upper bounds of ln q_{k+1}/ln q_k
    argmax: int = 0


def mu_estimate(cf: ContinuedFraction, q_min: int = DEFAULT_Q_MIN) -> IrrationalityEstimate:
    """``1 + max_k ln q_{k+1} / ln q_k`` over certified steps with ``q_k >= q_min``.

    Each ratio is the upper end of its outward-rounded enclosure.  For small
    ``q_k`` the ratio is dominated by ``ln(a_{k+1})`` rather than by the
    growth rate, which is why the default skips denominators below 2**16;
    pass ``q_min=2`` for the raw maximum over every step.
    """
    if len(cf) < 3:
        raise TooFewTerms(f"need >= 3 partial quotients, have {len(cf)}")
    q = [c[1] for c in cf.convergents]
    steps: list[tuple[int, Fraction]] = []
    for k in range(1, len(q) - 1):
        if q[k] < max(q_min, 2):
            continue
        steps.append((k, log_ratio_interval(q[k + 1], q[k])[1]))
    if not steps:
        raise TooFewTerms("no convergent denominators above q_min")
    k_best, best = max(steps, key=lambda s: s[1])
    return IrrationalityEstimate(1 + best, len(q) - 1, tuple(r for _, r in steps), k_best)


# ---------------------------------------------------------------- bound formulas


def complexity_numerator(mu: Fraction) -> Fraction:
    """``1 - 2 mu (mu - 1)(mu - 2)``; positive exactly when the bounds are non-trivial."""
    mu = Fraction(mu)
    return 1 - 2 * mu * (mu - 1) * (mu - 2)


def _cubic_den(mu: Fraction) -> Fraction:
    return 3 * mu**3 - 6 * mu**2 + 4 * mu - 1


def f_liminf(mu) -> Fraction:
    """Lower bound for liminf p(n)/n."""
    mu = Fraction(mu)
    return 1 + complexity_numerator(mu) / (mu**3 * (mu - 1))


def f_limsup(mu) -> Fraction:
    """Lower bound for limsup p(n)/n."""
    mu = Fraction(mu)
    return 1 + complexity_numerator(mu) / _cubic_den(mu)


def g_rep(mu) -> Fraction:
    """Lower bound for limsup r(n)/n."""
    mu = Fraction(mu)
    return 2 + complexity_numerator(mu) / _cubic_den(mu)


@dataclass(frozen=True)
class RepSideBounds:
    h_Rep: Fraction
    P_low: Fraction

    def __iter__(self):
        return iter((self.h_Rep, self.P_low))

    @property
    def below_floor(self) -> bool:
        """h_Rep adds nothing to the unconditional ``Rep >= 2``."""
        return self.h_Rep < 2


def rep_side_bounds(rep) -> RepSideBounds:
    """``rho + 1/(1 + rho + rho^2)`` and ``rho - 1 + 1/rho^3``."""
    rho = Fraction(rep)
    if rho < 1:
        raise InvalidRep(f"rep must be >= 1, got {rho}")
    return RepSideBounds(rho + 1 / (1 + rho + rho * rho), rho - 1 + 1 / rho**3)


@dataclass(frozen=True)
class BoundTable:
    mu: Fraction
    F_liminf: Fraction
    F_limsup: Fraction
    G_rep: Fraction
    vacuous: dict = field(compare=False)
    rho: Fraction | None = None
    h_Rep: Fraction | None = None
    P_low: Fraction | None = None


def bound_table(mu, rho=None) -> BoundTable:
    mu = Fraction(mu)
    if mu < 2:
        raise InvalidMu(f"irrationality exponent must be >= 2, got {mu}")
    fl, fs, g = f_liminf(mu), f_limsup(mu), g_rep(mu)
    vacuous = {"F_liminf": fl <= 1, "F_limsup": fs <= 1, "G_rep": g <= 2}
    if rho is None:
        return BoundTable(mu, fl, fs, g, vacuous)
    side = rep_side_bounds(rho)
    vacuous["h_Rep"] = side.below_floor
    vacuous["P_low"] = side.P_low <= 1
    return BoundTable(mu, fl, fs, g, vacuous, Fraction(rho), side.h_Rep, side.P_low)


def critical_mu(width=Fraction(1, 10**6)) -> tuple[Fraction, Fraction]:
    """Bisection enclosure of the root in (2, 3) of ``2 mu (mu-1)(mu-2) = 1``."""
    lo, hi = Fraction(2), Fraction(3)
    assert complexity_numerator(lo) > 0 > complexity_numerator(hi)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if complexity_numerator(mid) > 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def rep_lower_from_mu(mu) -> Fraction:
    """``mu / (mu - 1)``."""
    mu = Fraction(mu)
    if mu <= 1:
        raise InvalidMu(f"need mu > 1, got {mu}")
    return mu / (mu - 1)


def mu_lower_from_rep(rep) -> Fraction | float:
    """``rep / (rep - 1)``; ``math.inf`` at ``rep = 1``."""
    rep = Fraction(rep)
    if rep < 1:
        raise InvalidRep(f"rep must be >= 1, got {rep}")
    if rep == 1:
        return INFINITE
    return rep / (rep - 1)


def _perfect_power(n: int) -> tuple[int, int]:
    """``(g, k)`` with ``n = g**k`` and ``k`` maximal."""
    for k in range(n.bit_length(), 1, -1):
        root, exact = gmpy2.iroot(n, k)
        if exact:
            g, j = _perfect_power(int(root))
            return g, j * k
    return n, 1


def log_quotient(s: int, t: int) -> tuple[Fraction, Fraction]:
    """Enclosure of ``ln s / ln t``; a point when s and t are powers of one integer."""
    gs, ks = _perfect_power(s)
    gt, kt = _perfect_power(t)
    if gs == gt:
        x = Fraction(ks, kt)
        return x, x
    return log_ratio_interval(s, t)


@dataclass(frozen=True)
class LogExampleBound:
    value: Fraction
    vacuous: bool


def log_example_bound(s: int, t: int) -> LogExampleBound:
    """``9/8 - 4 ln s / ln t``, rounded down."""
    if not (isinstance(s, int) and isinstance(t, int)) or s < 2 or t < 2:
        raise InvalidArgs(f"need integers s, t >= 2, got {s!r}, {t!r}")
    _, hi = log_quotient(s, t)
    v = Fraction(9, 8) - 4 * hi
    return LogExampleBound(v, v <= 0)
