"""Analytically known transform pairs used as ground truth.

Every entry is checked at registration: its numerical forward transform must
reproduce the stated f(s) to 1e-8 relative at s = 1, 2, 5.
"""

from dataclasses import dataclass
import math
import threading

import numpy as np

from .errors import SelfConsistencyError, UnknownPair
from .laplace_core import TimeFunction, TransformFunction, forward

GATE_POINTS = (1.0, 2.0, 5.0)
GATE_TOL = 1e-8

_INV_2_SQRT_PI = 0.5 / math.sqrt(math.pi)


@dataclass(frozen=True)
class TestPair:
    id: str
    F: TimeFunction
    f: TransformFunction
    abscissa: float
    decay_class: str
    notes: str = ""
    smooth: bool = True

    __test__ = False  # not a pytest class


def _zero(x):
    return np.zeros(np.shape(x), dtype=complex)


def _gauss_like(t):
    # written in log form so exp(-1/4t) underflow wins over t**-1.5 overflow
    t = np.asarray(t, dtype=float)
    out = np.zeros(t.shape)
    pos = t > 0.0
    tp = t[pos]
    out[pos] = _INV_2_SQRT_PI * np.exp(-0.25 / tp - 1.5 * np.log(tp))
    return out


def _box(t):
    t = np.asarray(t, dtype=float)
    return np.where((t > 0.0) & (t < 1.0), 1.0, 0.0)


def _box_transform(s):
    return -np.expm1(-s) / s


def _box_transform_derivative(s):
    return (np.exp(-s) * (s + 1.0) - 1.0) / s**2


def _builtin_entries():
    return [
        TestPair(
            "zero",
            TimeFunction(_zero, growth_bound=0.0),
            TransformFunction(_zero, abscissa=0.0, derivative=_zero),
            0.0,
            "exponential",
            "F = 0; every identity holds trivially",
        ),
        TestPair(
            "exp_decay",
            TimeFunction(lambda t: np.exp(-t), growth_bound=-1.0),
            TransformFunction(
                lambda s: 1.0 / (s + 1.0),
                abscissa=-1.0,
                derivative=lambda s: -1.0 / (s + 1.0) ** 2,
            ),
            -1.0,
            "exponential",
            "exp(-t) <-> 1/(s+1)",
        ),
        TestPair(
            "poly_exp",
            TimeFunction(lambda t: t * np.exp(-t), growth_bound=-1.0),
            TransformFunction(
                lambda s: 1.0 / (s + 1.0) ** 2,
                abscissa=-1.0,
                derivative=lambda s: -2.0 / (s + 1.0) ** 3,
            ),
            -1.0,
            "exponential",
            "t exp(-t) <-> 1/(s+1)^2",
        ),
        TestPair(
            "gauss_like",
            TimeFunction(_gauss_like, growth_bound=0.0),
            TransformFunction(
                lambda s: np.exp(-np.sqrt(s)),
                abscissa=0.0,
                derivative=lambda s: -np.exp(-np.sqrt(s)) / (2.0 * np.sqrt(s)),
            ),
            0.0,
            "polynomial",
            "exp(-1/4t) / (2 sqrt(pi t^3)) <-> exp(-sqrt(s)); the kernel pair with a = 1",
        ),
        TestPair(
            "box",
            TimeFunction(_box, growth_bound=0.0, points=(1.0,)),
            TransformFunction(
                _box_transform, abscissa=-math.inf, derivative=_box_transform_derivative
            ),
            -math.inf,
            "exponential",
            "indicator of (0, 1) <-> (1 - exp(-s))/s; f is entire",
            smooth=False,
        ),
        TestPair(
            "power",
            TimeFunction(lambda t: t**2, growth_bound=0.0),
            TransformFunction(
                lambda s: 2.0 / s**3, abscissa=0.0, derivative=lambda s: -6.0 / s**4
            ),
            0.0,
            "polynomial",
            "t^2 <-> 2/s^3",
        ),
    ]


def check_pair(pair):
    """Run the registration gate; raise SelfConsistencyError on failure."""
    for s in GATE_POINTS:
        numeric = forward(pair.F, s).value
        exact = complex(pair.f(np.array([s]))[0])
        scale = max(abs(numeric), abs(exact))
        if scale == 0.0:
            continue
        if abs(numeric - exact) > GATE_TOL * scale:
            raise SelfConsistencyError(
                f"pair {pair.id!r}: forward({s}) = {numeric!r} but f({s}) = {exact!r}"
            )


def register_builtin():
    """Build the built-in pairs, gate each one, and return them in order."""
    entries = _builtin_entries()
    for pair in entries:
        check_pair(pair)
    return entries


_lock = threading.Lock()
_registry = None


def _get_registry():
    global _registry
    if _registry is None:
        with _lock:
            if _registry is None:
                _registry = {p.id: p for p in register_builtin()}
    return _registry


def pair_ids():
    return list(_get_registry())


def lookup(id):
    try:
        return _get_registry()[id]
    except KeyError:
        raise UnknownPair(id) from None
