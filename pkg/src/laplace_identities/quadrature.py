"""Double-exponential quadrature on finite and semi-infinite intervals.

Finite intervals use tanh-sinh nodes, half-lines use exp-sinh nodes. Each
level halves the step in the transformed variable and reuses every earlier
node; the difference between successive levels is the error estimate.

Integrands are called with a 1-D float array of nodes and must return an
array of the same length (a scalar is broadcast, so ``lambda u: 0`` works).
"""

from dataclasses import dataclass
from functools import lru_cache
import math

import numpy as np

from .errors import InvalidInput, NonConvergence

_HALF_PI = 0.5 * math.pi
_T_MAX = 6.5
_MIN_LEVEL = 3
# exponents below this underflow to zero in double precision
_EXP_FLOOR = -745.0
_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class EngineConfig:
    target_abs_tol: float = 1e-14
    target_rel_tol: float = 1e-10
    max_level: int = 10
    truncation_threshold: float = 1e-16

    def __post_init__(self):
        if not (self.target_abs_tol > 0 and self.target_rel_tol > 0):
            raise ValueError("tolerances must be positive")
        if not 3 <= self.max_level <= 12:
            raise ValueError(f"max_level must lie in [3, 12], got {self.max_level}")
        if not self.truncation_threshold > 0:
            raise ValueError("truncation_threshold must be positive")


DEFAULT_CONFIG = EngineConfig()


@dataclass(frozen=True)
class QuadResult:
    value: complex
    abs_error_estimate: float
    evaluations: int

    def __add__(self, other):
        return QuadResult(
            self.value + other.value,
            self.abs_error_estimate + other.abs_error_estimate,
            self.evaluations + other.evaluations,
        )

    def scaled(self, c):
        return QuadResult(self.value * c, self.abs_error_estimate * abs(c), self.evaluations)


ZERO_RESULT = QuadResult(0j, 0.0, 0)


def evaluate(fn, x):
    """Call a user handle on a node array and return a complex array.

    Scalar results are broadcast; handles that reject arrays are vectorised.
    """
    with np.errstate(over="ignore", under="ignore"):
        try:
            y = fn(x)
        except (TypeError, ValueError):
            y = np.vectorize(fn, otypes=[complex])(x)
    y = np.asarray(y, dtype=np.complex128)
    if y.shape != np.shape(x):
        if y.ndim == 0:
            y = np.full(np.shape(x), y, dtype=np.complex128)
        else:
            raise ValueError(f"handle returned shape {y.shape} for nodes of shape {np.shape(x)}")
    return y


def damped(exponent, fn, x):
    """``exp(exponent) * fn(x)`` without evaluating ``fn`` where the factor underflows.

    Keeps ``0 * inf`` out of integrands whose exponential factor kills a
    growing (or overflowing) companion far out on the half-line.
    """
    exponent = np.asarray(exponent, dtype=np.complex128)
    out = np.zeros(np.shape(x), dtype=np.complex128)
    live = exponent.real > _EXP_FLOOR
    if live.any():
        out[live] = np.exp(exponent[live]) * evaluate(fn, x[live])
    return out


@lru_cache(maxsize=None)
def _level_abscissae(level):
    # level 0: every integer in [-T, T]; level k: odd multiples of 2**-k
    if level == 0:
        n = int(_T_MAX)
        return np.arange(-n, n + 1, dtype=float)
    h = 2.0 ** -level
    n = int(_T_MAX / h)
    j = np.arange(-n, n + 1)
    return j[j % 2 != 0] * h


@lru_cache(maxsize=None)
def _tanh_sinh_level(level):
    """Unit-interval nodes as (distance from -1, distance from +1, weight)."""
    t = _level_abscissae(level)
    y = _HALF_PI * np.sinh(t)
    with np.errstate(over="ignore"):
        e = np.exp(-2.0 * np.abs(y))
        w = _HALF_PI * np.cosh(t) * 4.0 * e / (1.0 + e) ** 2
    near = 2.0 * e / (1.0 + e)  # distance to the closer endpoint
    far = 2.0 - near
    left = np.where(t < 0, near, far)
    right = np.where(t < 0, far, near)
    keep = (w > 0) & (near > 0)
    return left[keep], right[keep], w[keep]


@lru_cache(maxsize=None)
def _exp_sinh_level(level):
    """Half-line offsets and weights for x = exp(pi/2 sinh t)."""
    t = _level_abscissae(level)
    arg = _HALF_PI * np.sinh(t)
    keep = np.abs(arg) < 700.0
    t, arg = t[keep], arg[keep]
    x = np.exp(arg)
    w = x * _HALF_PI * np.cosh(t)
    return x, w


def _refine(nodes_at, g, cfg, where):
    """Level-doubling driver shared by both rules.

    ``nodes_at(level)`` returns (x, w) for the nodes new at that level.
    """
    total = 0j
    magnitude = 0.0
    evaluations = 0
    previous = None
    for level in range(cfg.max_level + 1):
        x, w = nodes_at(level)
        if x.size:
            fx = evaluate(g, x)
            if not np.all(np.isfinite(fx)):
                bad = x[~np.isfinite(fx)][0]
                raise InvalidInput(f"integrand not finite at u={bad!r} on {where}")
            total += np.sum(w * fx)
            magnitude += float(np.sum(w * np.abs(fx)))
            evaluations += x.size
        h = 2.0 ** -level
        estimate = h * total
        if previous is not None and level >= _MIN_LEVEL:
            delta = abs(estimate - previous)
            floor = 64.0 * _EPS * h * magnitude
            if delta <= max(cfg.target_abs_tol, cfg.target_rel_tol * abs(estimate), floor):
                return QuadResult(complex(estimate), float(delta), evaluations)
        previous = estimate
    partial = QuadResult(complex(estimate), float(abs(estimate - previous)), evaluations)
    raise NonConvergence(
        f"no convergence on {where} after level {cfg.max_level} "
        f"(last delta {partial.abs_error_estimate:.3g})",
        result=partial,
    )


def integrate_finite(g, lo, hi, cfg=DEFAULT_CONFIG):
    """Integrate ``g`` over (lo, hi) with tanh-sinh; endpoint singularities allowed."""
    lo, hi = float(lo), float(hi)
    if not lo < hi:
        raise ValueError(f"need lo < hi, got ({lo}, {hi})")
    half = 0.5 * (hi - lo)

    def nodes_at(level):
        left, right, w = _tanh_sinh_level(level)
        # measure from the nearer endpoint so nodes never collapse onto it
        x = np.where(left < right, lo + half * left, hi - half * right)
        inside = (x > lo) & (x < hi)
        return x[inside], half * w[inside]

    return _refine(nodes_at, g, cfg, f"({lo:g}, {hi:g})")


def _integrate_tail(g, lo, scale, cfg):
    def nodes_at(level):
        x, w = _exp_sinh_level(level)
        u = lo + scale * x
        inside = u > lo
        return u[inside], scale * w[inside]

    return _refine(nodes_at, g, cfg, f"({lo:g}, inf)")


def integrate_semi_infinite(g, cfg=DEFAULT_CONFIG, *, lo=0.0, scale=1.0, points=()):
    """Integrate ``g`` over (lo, inf) with exp-sinh.

    ``points`` are interior breakpoints (discontinuities of g); the pieces
    between them go to tanh-sinh and the last one starts the half-line.
    ``scale`` is the characteristic length of the decay.
    """
    cuts = sorted(p for p in set(map(float, points)) if p > lo)
    result = ZERO_RESULT
    start = float(lo)
    for p in cuts:
        result = result + integrate_finite(g, start, p, cfg)
        start = p
    return result + _integrate_tail(g, start, float(scale), cfg)


def _scan_grid():
    return np.concatenate([
        np.linspace(0.0, 16.0, 257)[1:],
        np.geomspace(16.0, 1e4, 160)[1:],
    ])


def integrate_peaked(g, cfg=DEFAULT_CONFIG, points=()):
    """Integrate a unimodal-ish integrand on (0, inf) by splitting at its peak.

    A coarse scan locates the largest |g|; the domain is cut there and
    truncated where |g| falls below ``truncation_threshold`` times the peak.
    Built for integrands like t**u / Gamma(u + 1) times a decaying F(u).
    """
    grid = _scan_grid()
    mag = np.abs(evaluate(g, grid))
    if not np.all(np.isfinite(mag)):
        bad = grid[~np.isfinite(mag)][0]
        raise InvalidInput(f"integrand not finite at u={bad!r} during peak scan")
    peak = mag.max()
    if peak == 0.0:
        return ZERO_RESULT
    ipeak = int(np.argmax(mag))
    significant = np.nonzero(mag >= cfg.truncation_threshold * peak)[0]
    ilast = int(significant[-1])
    has_tail = ilast == grid.size - 1
    upper = grid[ilast] if has_tail else grid[ilast + 1]

    cuts = {float(grid[ipeak])}
    cuts.update(float(p) for p in points if 0.0 < p < upper)
    edges = [0.0] + sorted(c for c in cuts if 0.0 < c < upper) + [float(upper)]
    result = ZERO_RESULT
    for lo, hi in zip(edges[:-1], edges[1:]):
        result = result + integrate_finite(g, lo, hi, cfg)
    if has_tail:
        result = result + _integrate_tail(g, float(upper), float(upper), cfg)
    return result


def integrate_square_kernel(f, c, cfg=DEFAULT_CONFIG):
    """Integrate exp(-c/u) * u**-1.5 * f(u) over (0, inf); needs Re(c) > 0.

    On (0, u0] the substitution u = u0/v turns the essential decay at u -> 0
    into plain exponential decay in v; u0 = |c| puts the split near the
    kernel's bump.
    """
    c = complex(c)
    if not c.real > 0:
        raise ValueError(f"kernel needs Re(c) > 0, got c={c!r}")
    u0 = min(max(abs(c), 1e-3), 1e3)
    k = c / u0

    def near_zero(v):
        return damped(-k * v - 0.5 * np.log(v), lambda vv: evaluate(f, u0 / vv), v)

    def far(u):
        return damped(-c / u - 1.5 * np.log(u), f, u)

    inner = _integrate_tail(near_zero, 1.0, 1.0 / k.real, cfg).scaled(u0 ** -0.5)
    outer = _integrate_tail(far, u0, u0, cfg)
    return inner + outer
