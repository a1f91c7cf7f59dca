import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from laplace_identities import pairs
from laplace_identities.catalog import lookup
from laplace_identities.closed_forms import (
    LogTrigParams,
    log_cos_inverse,
    log_power_inverse,
    log_sin_inverse,
)
from laplace_identities.errors import DomainError, PoleError
from laplace_identities.laplace_core import inverse_talbot
from laplace_identities.special_fn import EULER_GAMMA, gamma, gamma_derivative

GRID = (0.0, 0.5, 1.0)


def rel(x, y):
    return abs(x - y) / max(abs(x), abs(y), 1e-300)


def trig_transform(trig, beta, gam):
    return lambda s: np.exp(-beta * np.log(s)) * trig(gam * np.log(s)) / s


@pytest.mark.parametrize("beta", [0.0, 0.7, 2.0])
@pytest.mark.parametrize("t", [0.3, 1.0, 4.0])
def test_sin_vanishes_without_gamma(beta, t):
    assert log_sin_inverse(t, LogTrigParams(beta, 0.0)) == 0


@pytest.mark.parametrize("t", [0.3, 1.0, 4.0])
def test_cos_is_one_at_origin(t):
    assert abs(log_cos_inverse(t, LogTrigParams(0.0, 0.0)) - 1) < 1e-15


def test_direct_substitution_at_unit_time():
    lo = complex(1 / mpmath.gamma(1 - 1j))
    hi = complex(1 / mpmath.gamma(1 + 1j))
    p = LogTrigParams(0.0, 1.0)
    assert abs(log_sin_inverse(1.0, p) - (lo - hi) / 2j) < 1e-14
    assert abs(log_cos_inverse(1.0, p) - (lo + hi) / 2) < 1e-14


def test_against_inversion_at_beta_gamma_one():
    p = LogTrigParams(1.0, 1.0)
    assert rel(log_sin_inverse(2.0, p), inverse_talbot(trig_transform(np.sin, 1, 1), 2.0)) < 1e-5
    assert rel(log_cos_inverse(2.0, p), inverse_talbot(trig_transform(np.cos, 1, 1), 2.0)) < 1e-5


@pytest.mark.parametrize("beta", GRID)
@pytest.mark.parametrize("gam", GRID)
@pytest.mark.parametrize("t", [0.5, 1.0, 2.0])
def test_trig_grid_against_inversion(beta, gam, t):
    p = LogTrigParams(beta, gam)
    for fn, trig in ((log_sin_inverse, np.sin), (log_cos_inverse, np.cos)):
        closed = fn(t, p)
        numeric = inverse_talbot(trig_transform(trig, beta, gam), t)
        assert abs(closed - numeric) <= 1e-5 * max(abs(closed), abs(numeric)) or closed == numeric == 0
        assert abs(closed.imag) <= 1e-12


@given(st.floats(0.0, 3.0), st.floats(0.0, 3.0), st.floats(0.05, 20.0))
def test_real_parameters_give_real_values(beta, gam, t):
    p = LogTrigParams(beta, gam)
    assert abs(log_sin_inverse(t, p).imag) <= 1e-12 * max(1.0, abs(log_sin_inverse(t, p)))
    assert abs(log_cos_inverse(t, p).imag) <= 1e-12 * max(1.0, abs(log_cos_inverse(t, p)))


def test_log_power_known_values():
    assert abs(log_power_inverse(1.0, 0.0) + EULER_GAMMA) < 1e-15
    assert abs(log_power_inverse(1.0, 1.0) - (1 - EULER_GAMMA)) < 1e-15
    # b = 1 value carries Gamma'(2)/Gamma(2) exactly as gamma_derivative reports
    assert abs(log_power_inverse(1.0, 1.0) - gamma_derivative(2) / gamma(2)) < 1e-15


def test_log_power_against_inversion():
    numeric = inverse_talbot(lambda s: np.log(s) / s**1.5, 2.0)
    assert rel(log_power_inverse(2.0, 0.5), numeric) < 1e-6


@pytest.mark.parametrize("t", [0.5, 1.0, 2.0])
def test_log_power_special_cases(t):
    assert abs(log_power_inverse(t, 0.0) - (-math.log(t) - EULER_GAMMA)) < 1e-14
    assert abs(log_power_inverse(t, 1.0) - (-t * math.log(t) + t - t * EULER_GAMMA)) < 1e-14


def test_domain_checks():
    with pytest.raises(DomainError):
        log_power_inverse(0.0, 0.0)
    with pytest.raises(DomainError):
        log_power_inverse(1.0, -0.5)
    with pytest.raises(DomainError):
        log_sin_inverse(-1.0, LogTrigParams())


def test_pole_in_gamma_argument():
    with pytest.raises(PoleError):
        log_cos_inverse(1.0, LogTrigParams(-1.0, 0.0))


# a-derivative of the log identity as a -> 0 collapses to f'(0) times the
# log-power inverse; needs a finite first moment of F, so the kernel pair and
# t^2 are out
@pytest.mark.parametrize("pid,fprime0", [("exp_decay", -1.0), ("poly_exp", -2.0), ("box", -0.5)])
@pytest.mark.parametrize("b", [0.0, 0.5, 1.0])
@pytest.mark.parametrize("t", [0.5, 1.0, 2.0])
def test_small_a_limit_of_a_derivative(pid, fprime0, b, t):
    limit = pairs.log_da_rhs(lookup(pid).F, t, 1e-6, b)
    assert rel(limit, fprime0 * log_power_inverse(t, b)) <= 1e-4
