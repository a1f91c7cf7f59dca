"""Acceptance criteria, one test per criterion.

``pytest tests/test_acceptance.py`` prints a PASS/FAIL line per criterion in
the terminal summary; running this file directly does the same.
"""

import cmath
import math

import numpy as np
import pytest

from laplace_identities import pairs, verification
from laplace_identities.catalog import lookup, pair_ids
from laplace_identities.closed_forms import (
    LogTrigParams,
    log_cos_inverse,
    log_power_inverse,
    log_sin_inverse,
)
from laplace_identities.laplace_core import TransformFunction, inverse_stehfest, inverse_talbot
from laplace_identities.pairs import GenParams
from laplace_identities.quadrature import damped, integrate_peaked, integrate_square_kernel
from laplace_identities.special_fn import (
    EULER_GAMMA,
    digamma,
    gamma,
    gamma_derivative,
    ln_gamma,
    ln_gamma_array,
)

S_GRID = (0.5, 1.0, 2.0, 5.0)
T_GRID = (0.25, 0.5, 1.0, 2.0, 5.0)


def rel(x, y):
    return abs(x - y) / max(abs(x), abs(y), 1e-300)


def test_criterion_1_implicit_square_identity():
    for pid in ("exp_decay", "poly_exp", "power"):
        p = lookup(pid)
        for s in S_GRID:
            assert rel(pairs.sq_lhs(p.F, s), pairs.sq_rhs(p.f, s)) <= 1e-6, (pid, s)


def test_criterion_2_scaled_square_identity():
    p = lookup("exp_decay")
    for a in (1.0, 2.0, 4.0):
        for s in S_GRID:
            assert rel(pairs.sq_lhs(p.F, s, a=a), pairs.sq_rhs(p.f, s, a=a)) <= 1e-6, (a, s)
    for s in S_GRID:
        plain = s / (4 * math.sqrt(math.pi)) * integrate_square_kernel(p.f.eval, s * s / 4).value
        assert rel(pairs.sq_rhs(p.f, s, a=1.0), plain) <= 1e-12
        assert rel(pairs.sq_lhs(p.F, s, a=1.0), pairs.sq_lhs(p.F, s)) <= 1e-12


def test_criterion_3_implicit_log_identity():
    # f(ln s)/s: exp_decay gives 1/(s(1 + ln s)), singular at s = 1/e; box is
    # entire in ln s, leaving only s = 0
    for pid, abscissa in (("exp_decay", math.exp(-1)), ("box", 0.0)):
        p = lookup(pid)
        lhs = TransformFunction(lambda s, f=p.f: f(np.log(s)) / s, abscissa=abscissa)
        for t in T_GRID:
            assert rel(pairs.log_rhs(p.F, t), inverse_talbot(lhs, t)) <= 1e-6, (pid, t)


def test_criterion_4_generalised_log_identities():
    family = ("exp_decay", "poly_exp", "box")
    for pid in family:
        p = lookup(pid)
        for t in T_GRID:
            for a in (1.0, 2.0, 1 + 0.5j):
                for b in (0.0, 1.0, 0.5):
                    g = GenParams(a=a, b=b)
                    assert rel(pairs.log_lhs(p.f, t, g), pairs.log_rhs(p.F, t, g)) <= 1e-6
            for alpha in (0.0, -0.5, 0.3j):
                g = GenParams(alpha=alpha)
                rhs = pairs.log_rhs(p.F, t, g)
                assert rel(pairs.log_lhs(p.f, t, g), rhs) <= 1e-6
                # shift reduction
                assert rel(rhs, cmath.exp(alpha * t) * pairs.log_rhs(p.F, t)) <= 1e-12
            g = GenParams(coeffs=(1, 1, 0.5))
            assert rel(pairs.log_series_lhs(p.f, t, g), pairs.log_series_rhs(p.F, t, g)) <= 1e-6
            # single-term and index-shift reductions
            base = pairs.log_rhs(p.F, t)
            assert rel(pairs.log_series_rhs(p.F, t, GenParams(coeffs=(1,))), base) <= 1e-12
            two_up = pairs.log_series_rhs(p.F, t, GenParams(coeffs=(0, 0, 1)))
            assert rel(two_up, pairs.log_rhs(p.F, t, GenParams(b=2))) <= 1e-12


def _raw_log_rhs(F, t, a, b):
    # the same integral with no Re(b) >= 0 check, so b - h is allowed
    lt = math.log(t)

    def g(u):
        return damped((a * u + b) * lt - ln_gamma_array(a * u + b + 1.0), F.eval, u)

    return integrate_peaked(g, points=F.points).value


def test_criterion_5_derivative_identities():
    h = 1e-4
    for pid in pair_ids():
        F = lookup(pid).F
        for t in (0.5, 1.0, 2.0):
            for a, b in ((1.0, 0.0), (1.0, 1.0), (1 + 0.5j, 0.5 + 0.5j)):
                fd_a = (_raw_log_rhs(F, t, a + h, b) - _raw_log_rhs(F, t, a - h, b)) / (2 * h)
                fd_b = (_raw_log_rhs(F, t, a, b + h) - _raw_log_rhs(F, t, a, b - h)) / (2 * h)
                da = pairs.log_da_rhs(F, t, a, b)
                db = pairs.log_db_rhs(F, t, a, b)
                assert rel(da, fd_a) <= 1e-5, (pid, t, a, b)
                if pid == "box" and a == 1.0:
                    # here the b-derivative is t^b/Gamma(b+1) (t/(b+1) - 1),
                    # exactly 0 at t = b + 1 where a ratio is meaningless
                    exact = t**b / math.gamma(b + 1) * (t / (b + 1) - 1)
                    if exact == 0:
                        assert abs(db) <= 1e-12 and abs(fd_b) <= 1e-8
                        continue
                    assert rel(db, exact) <= 1e-8
                assert rel(db, fd_b) <= 1e-5, (pid, t, a, b)

    # sign of the b-derivative identity: the left side carries -ln(s)
    p = lookup("exp_decay")
    for t in (0.5, 1.0, 2.0):
        rhs = pairs.log_db_rhs(p.F, t, 1.0, 0.0)
        assert rel(pairs.log_db_lhs(p.f, t, 1.0, 0.0), rhs) <= 1e-6
        flipped = inverse_talbot(TransformFunction(lambda s: np.log(s) / (s * (1 + np.log(s))),
                                                   abscissa=math.exp(-1)), t)
        assert rel(flipped, rhs) > 1.0


def _falsified_where_counterpart_holds(false_id):
    counterpart = verification.get_identity(false_id).counterpart
    hits = 0
    for point in verification.default_grid(false_id):
        wrong = verification.evaluate_point(false_id, point)
        right = verification.evaluate_point(counterpart, point)
        if wrong.rel_err > 1e-2 and right.rel_err <= 1e-6:
            hits += 1
    return hits


def test_criterion_6_falsification():
    assert _falsified_where_counterpart_holds("eq10_false") >= 1
    assert _falsified_where_counterpart_holds("eq20_false") >= 1
    for pid in ("exp_decay", "poly_exp", "gauss_like", "box", "power"):
        p = lookup(pid)
        for t in T_GRID:
            rhs = pairs.sqrt_rhs(p.F, t)
            assert rel(pairs.sqrt_lhs(p.f, t), rhs) <= 1e-6, (pid, t)
            assert rel(pairs.sqrt_lhs_false(p.f, t), rhs) > 1e-2, (pid, t)


def test_criterion_7_log_power_closed_forms():
    for t in (0.5, 1.0, 2.0):
        numeric = inverse_talbot(lambda s: np.log(s) / s, t)
        assert rel(numeric, -math.log(t) - EULER_GAMMA) <= 1e-6
        numeric = inverse_talbot(lambda s: np.log(s) / s**2, t)
        assert rel(numeric, -t * math.log(t) + t - t * EULER_GAMMA) <= 1e-6
    for t in T_GRID:
        numeric = inverse_talbot(lambda s: np.log(s) / s**1.5, t)
        assert rel(numeric, log_power_inverse(t, 0.5)) <= 1e-6


def test_criterion_8_log_trig_closed_forms():
    for beta in (0.0, 0.5, 1.0):
        for gam in (0.0, 0.5, 1.0):
            p = LogTrigParams(beta, gam)
            for t in (0.5, 1.0, 2.0):
                for closed, trig in ((log_sin_inverse, np.sin), (log_cos_inverse, np.cos)):
                    value = closed(t, p)
                    numeric = inverse_talbot(
                        lambda s: np.exp(-beta * np.log(s)) * trig(gam * np.log(s)) / s, t
                    )
                    assert abs(value - numeric) <= 1e-5 * max(abs(value), abs(numeric), 1e-300)
                    assert abs(value.imag) <= 1e-12


def test_criterion_9_special_functions():
    rng = np.random.default_rng(9)
    zs = rng.uniform(0, 20, 200) + 1j * rng.uniform(-10, 10, 200)
    for z in zs:
        g0, g1 = gamma(z), gamma(z + 1)
        assert abs(g1 - z * g0) / abs(g1) <= 1e-12
        assert rel(gamma_derivative(z + 1), z * gamma_derivative(z) + g0) <= 1e-10
        assert abs(digamma(z + 1) - digamma(z) - 1 / z) <= 1e-12 * max(abs(digamma(z + 1)), 1.0)
    assert abs(gamma_derivative(1) + EULER_GAMMA) <= 1e-13
    assert abs(gamma_derivative(2) - (1 - EULER_GAMMA)) <= 1e-13
    assert abs(gamma_derivative(3) - (3 - 2 * EULER_GAMMA)) <= 1e-13
    h = 1e-6
    for x in np.round(np.arange(0.5, 20.0001, 0.05), 10):
        xp, xm = x + h, x - h
        fd = (ln_gamma(xp) - ln_gamma(xm)).real / (xp - xm)
        assert abs(fd - digamma(x).real) <= 1e-8, x
    assert abs(ln_gamma(0.5) - 0.5 * math.log(math.pi)) <= 1e-14


def test_criterion_10_talbot_against_stehfest():
    for pid in pair_ids():
        p = lookup(pid)
        if not p.smooth:
            continue
        for t in (0.5, 1.0, 2.0):
            a = inverse_talbot(p.f, t).real
            b = inverse_stehfest(p.f, t)
            assert abs(a - b) <= 1e-4 * max(abs(a), abs(b)), (pid, t)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
