import math
import threading

import numpy as np
import pytest

from laplace_identities import catalog
from laplace_identities.catalog import TestPair, check_pair, lookup, pair_ids, register_builtin
from laplace_identities.errors import SelfConsistencyError, UnknownPair
from laplace_identities.laplace_core import TimeFunction, TransformFunction, forward

REQUIRED = {"exp_decay", "poly_exp", "gauss_like", "box", "power"}


def f_at(pid, s):
    return complex(lookup(pid).f(np.array([s]))[0])


def test_required_entries_present():
    assert REQUIRED <= set(pair_ids())


def test_known_values():
    assert f_at("exp_decay", 1.0) == 0.5
    assert abs(f_at("gauss_like", 1.0) - math.exp(-1)) < 1e-15
    assert abs(f_at("box", 2.0) - (1 - math.exp(-2)) / 2) < 1e-15


def test_lookup():
    assert lookup("exp_decay").id == "exp_decay"
    assert lookup("gauss_like").decay_class in ("exponential", "polynomial")
    with pytest.raises(UnknownPair):
        lookup("nosuch")


@pytest.mark.parametrize("pid", sorted(REQUIRED | {"zero"}))
def test_registration_gate(pid):
    p = lookup(pid)
    for s in (1.0, 2.0, 5.0):
        numeric = forward(p.F, s).value
        assert abs(numeric - f_at(pid, s)) <= 1e-8 * max(abs(numeric), 1e-300)


@pytest.mark.parametrize("pid", sorted(REQUIRED))
def test_transform_decays_at_least_like_one_over_u(pid):
    mags = [u * abs(f_at(pid, u)) for u in (1e3, 1e4)]
    assert mags[1] <= 1.01 * mags[0] + 1e-300
    assert mags[1] <= 1.0 + 1e-12


@pytest.mark.parametrize("pid", sorted(REQUIRED))
def test_declared_derivative(pid):
    p = lookup(pid)
    s, h = 1.7, 1e-5
    fd = (f_at(pid, s + h) - f_at(pid, s - h)) / (2 * h)
    exact = complex(p.f.derivative(np.array([s + 0j]))[0])
    assert abs(fd - exact) < 1e-8


def test_gate_rejects_wrong_pair():
    bad = TestPair(
        "bad",
        TimeFunction(lambda t: np.exp(-t), -1.0),
        TransformFunction(lambda s: 1 / (s + 2), -2.0),
        -1.0,
        "exponential",
    )
    with pytest.raises(SelfConsistencyError):
        check_pair(bad)


def test_register_builtin_returns_fresh_gated_list():
    entries = register_builtin()
    assert [p.id for p in entries] == pair_ids()


def test_concurrent_first_lookup(monkeypatch):
    monkeypatch.setattr(catalog, "_registry", None)
    seen = []

    def worker():
        seen.append(id(catalog._get_registry()))

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert len(set(seen)) == 1


def test_pairs_are_immutable():
    with pytest.raises(AttributeError):
        lookup("box").abscissa = 3.0
