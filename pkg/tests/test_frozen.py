"""Recomputes the frozen constants from the brute-force oracles alone.  Run with ``pytest -m slow``."""
from fractions import Fraction

import pytest

import frozen
import oracles

pytestmark = pytest.mark.slow


def test_ks_window_values_from_oracles():
    d = oracles.ks_digits_direct(frozen.KS_DIGITS)
    lo, hi = frozen.KS_WINDOW
    p_ratios = [Fraction(oracles.brute_p(d, n), n) for n in range(lo, hi + 1)]
    r_ratios = [Fraction(oracles.hashed_r(d, n), n) for n in range(lo, hi + 1)]
    assert min(p_ratios) == frozen.KS_P_MIN_RATIO
    assert max(p_ratios) == frozen.KS_P_MAX_RATIO
    assert min(r_ratios) == frozen.KS_REP_HAT
    assert max(r_ratios) == frozen.KS_REP_HAT_UPPER


def test_ks_return_times_closed_form():
    d = oracles.ks_digits_direct(frozen.KS_DIGITS)
    for k in range(3, 12):  # from n = 7 on
        n = 2**k - 1
        assert oracles.hashed_r(d, n) == 5 * 2 ** (k - 1) - 1
