"""Identity registry and the grid-verification driver.

Each registered identity knows how to compute its two sides at a grid point
(a plain dict such as ``{"pair": "exp_decay", "t": 2.0, "a": 1.0}``) and
which grid to use by default. ``verify`` never raises on disagreement: it
reports MATCH, MISMATCH, or ERROR per point, in grid order.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
import itertools
import math
from typing import Callable

import numpy as np

from . import closed_forms, pairs
from .catalog import lookup
from .errors import UnknownIdentity
from .laplace_core import inverse_talbot
from .quadrature import DEFAULT_CONFIG
from .special_fn import EULER_GAMMA

MATCH = "MATCH"
MISMATCH = "MISMATCH"
ERROR = "ERROR"

DEFAULT_TOL = 1e-6
FALSIFY_THRESHOLD = 1e-2
TINY = 1e-300

S_GRID = (0.5, 1.0, 2.0, 5.0)
T_GRID = (0.25, 0.5, 1.0, 2.0, 5.0)
A_GRID = (1.0, 2.0, 1 + 0.5j)
B_GRID = (0.0, 0.5, 1.0, 0.5 + 0.5j)
ALPHA_GRID = (0.0, -0.5, 0.3j)
SQUARE_A_GRID = (1.0, 2.0, 4.0)
TRIG_GRID = (0.0, 0.5, 1.0)
TRIG_T_GRID = (0.5, 1.0, 2.0)

ALL_PAIRS = ("zero", "exp_decay", "poly_exp", "gauss_like", "box", "power")
LOG_FAMILY_PAIRS = ("zero", "exp_decay", "poly_exp", "box")
# box is left out: its b-derivative is exactly 0 at (a, b, t) = (1, 0, 1),
# where a relative error means nothing
DERIVATIVE_PAIRS = ("zero", "exp_decay", "poly_exp")
FALSIFY_PAIRS = ("exp_decay", "poly_exp", "gauss_like", "box", "power")


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    grid_point: dict
    lhs: complex
    rhs: complex
    abs_err: float
    rel_err: float
    verdict: str
    diagnostic: str = ""


@dataclass(frozen=True)
class Identity:
    id: str
    description: str
    lhs: Callable
    rhs: Callable
    default_grid: Callable
    false_form: bool = False
    counterpart: str = ""
    axis: str = "t"
    uses_pairs: bool = True
    params: tuple = field(default=())


def _gen(point):
    return pairs.GenParams(
        a=point.get("a", 1.0),
        b=point.get("b", 0.0),
        alpha=point.get("alpha", 0.0),
        coeffs=tuple(point.get("coeffs", (1.0,))),
    )


def _product(**axes):
    names = list(axes)
    return [dict(zip(names, combo)) for combo in itertools.product(*axes.values())]


def _pair_grid(pair_ids, axis, values, **extra):
    return lambda: _product(pair=pair_ids, **extra, **{axis: values})


def _talbot_closed(h, t, nodes):
    return inverse_talbot(h, t, nodes)


def _log_trig_lhs(kind):
    trig = np.sin if kind == "sin" else np.cos

    def lhs(point, cfg, nodes):
        beta, gam = point["beta"], point["gamma"]

        def h(s):
            ls = np.log(s)
            return np.exp(-beta * ls) * trig(gam * ls) / s

        return _talbot_closed(h, point["t"], nodes)

    return lhs


def _log_power_lhs(point, cfg, nodes):
    b = complex(point.get("b", 0.0))
    return _talbot_closed(lambda s: np.log(s) * np.exp(-(b + 1.0) * np.log(s)), point["t"], nodes)


def _build_registry():
    F = lambda p: lookup(p["pair"]).F  # noqa: E731
    f = lambda p: lookup(p["pair"]).f  # noqa: E731
    entries = [
        Identity(
            "eq140",
            "L[t F(t^2)](s) = s/(4 sqrt(pi)) * int exp(-s^2/4u) u^-3/2 f(u) du",
            lambda p, cfg, n: pairs.sq_lhs(F(p), p["s"], cfg),
            lambda p, cfg, n: pairs.sq_rhs(f(p), p["s"], 1.0, cfg),
            _pair_grid(ALL_PAIRS, "s", S_GRID),
            axis="s",
        ),
        Identity(
            "eq300",
            "L[t F(a t^2)](s) = s/(4 sqrt(pi) a^3/2) * int exp(-s^2/4ua) u^-3/2 f(u) du",
            lambda p, cfg, n: pairs.sq_lhs(F(p), p["s"], cfg, a=p["a"]),
            lambda p, cfg, n: pairs.sq_rhs(f(p), p["s"], p["a"], cfg),
            _pair_grid(ALL_PAIRS, "s", S_GRID, a=SQUARE_A_GRID),
            axis="s",
            params=("a",),
        ),
        Identity(
            "eq240",
            "L^-1[f(ln s)/s](t) = int t^u F(u) / Gamma(u+1) du",
            lambda p, cfg, n: pairs.log_lhs(f(p), p["t"], pairs.GenParams(), n),
            lambda p, cfg, n: pairs.log_rhs(F(p), p["t"], pairs.GenParams(), cfg),
            _pair_grid(ALL_PAIRS, "t", T_GRID),
        ),
        Identity(
            "eq410",
            "L^-1[f(a ln s)/s^(b+1)](t) = int t^(au+b) F(u) / Gamma(au+b+1) du",
            lambda p, cfg, n: pairs.log_lhs(f(p), p["t"], _gen(p), n),
            lambda p, cfg, n: pairs.log_rhs(F(p), p["t"], _gen(p), cfg),
            _pair_grid(LOG_FAMILY_PAIRS, "t", T_GRID, a=A_GRID, b=B_GRID),
            params=("a", "b"),
        ),
        Identity(
            "eq420",
            "L^-1[f(a ln(s-alpha))/(s-alpha)^(b+1)](t) = exp(alpha t) int t^(au+b) F(u) / Gamma(au+b+1) du",
            lambda p, cfg, n: pairs.log_lhs(f(p), p["t"], _gen(p), n),
            lambda p, cfg, n: pairs.log_rhs(F(p), p["t"], _gen(p), cfg),
            _pair_grid(LOG_FAMILY_PAIRS, "t", T_GRID, a=A_GRID, b=B_GRID, alpha=ALPHA_GRID),
            params=("a", "b", "alpha"),
        ),
        Identity(
            "eq430",
            "finite series sum_n c_n / (s-alpha)^(n+b+1) times f(a ln(s-alpha))",
            lambda p, cfg, n: pairs.log_series_lhs(f(p), p["t"], _gen(p), n),
            lambda p, cfg, n: pairs.log_series_rhs(F(p), p["t"], _gen(p), cfg),
            _pair_grid(
                LOG_FAMILY_PAIRS,
                "t",
                T_GRID,
                a=(1.0, 1 + 0.5j),
                alpha=ALPHA_GRID,
                coeffs=((1.0,), (0.0, 0.0, 1.0), (1.0, 1.0, 0.5)),
            ),
            params=("a", "alpha", "coeffs"),
        ),
        Identity(
            "eq440",
            "a-derivative: L^-1[f'(a ln s) ln s / s^(b+1)] = int u F t^(au+b)/Gamma(au+b+1) [ln t - psi(au+b+1)] du",
            lambda p, cfg, n: pairs.log_da_lhs(f(p), p["t"], p["a"], p["b"], n),
            lambda p, cfg, n: pairs.log_da_rhs(F(p), p["t"], p["a"], p["b"], cfg),
            _pair_grid(DERIVATIVE_PAIRS, "t", T_GRID, a=A_GRID, b=(0.0, 1.0, 0.5 + 0.5j)),
            params=("a", "b"),
        ),
        Identity(
            "eq450",
            "b-derivative: L^-1[-ln s f(a ln s) / s^(b+1)] = int F t^(au+b)/Gamma(au+b+1) [ln t - psi(au+b+1)] du",
            lambda p, cfg, n: pairs.log_db_lhs(f(p), p["t"], p["a"], p["b"], n),
            lambda p, cfg, n: pairs.log_db_rhs(F(p), p["t"], p["a"], p["b"], cfg),
            _pair_grid(DERIVATIVE_PAIRS, "t", T_GRID, a=A_GRID, b=(0.0, 1.0, 0.5 + 0.5j)),
            params=("a", "b"),
        ),
        Identity(
            "eq60",
            "L^-1[f(sqrt s)/sqrt s](t) = 1/sqrt(pi t) int exp(-u^2/4t) F(u) du",
            lambda p, cfg, n: pairs.sqrt_lhs(f(p), p["t"], n),
            lambda p, cfg, n: pairs.sqrt_rhs(F(p), p["t"], cfg),
            _pair_grid(ALL_PAIRS, "t", T_GRID),
        ),
        Identity(
            "eq530",
            "L^-1[s^-beta sin(gamma ln s)/s](t) as two power-over-gamma terms",
            _log_trig_lhs("sin"),
            lambda p, cfg, n: closed_forms.log_sin_inverse(
                p["t"], closed_forms.LogTrigParams(p["beta"], p["gamma"])
            ),
            lambda: _product(beta=TRIG_GRID, gamma=TRIG_GRID, t=TRIG_T_GRID),
            uses_pairs=False,
            params=("beta", "gamma"),
        ),
        Identity(
            "eq550",
            "L^-1[s^-beta cos(gamma ln s)/s](t) as two power-over-gamma terms",
            _log_trig_lhs("cos"),
            lambda p, cfg, n: closed_forms.log_cos_inverse(
                p["t"], closed_forms.LogTrigParams(p["beta"], p["gamma"])
            ),
            lambda: _product(beta=TRIG_GRID, gamma=TRIG_GRID, t=TRIG_T_GRID),
            uses_pairs=False,
            params=("beta", "gamma"),
        ),
        Identity(
            "eq580",
            "L^-1[ln s / s^(b+1)](t) = -t^b/Gamma(b+1) [ln t - psi(b+1)]",
            _log_power_lhs,
            lambda p, cfg, n: closed_forms.log_power_inverse(p["t"], p["b"]),
            lambda: _product(b=B_GRID, t=T_GRID),
            uses_pairs=False,
            params=("b",),
        ),
        Identity(
            "eq590",
            "L^-1[ln s / s](t) = -ln t - Euler gamma",
            _log_power_lhs,
            lambda p, cfg, n: complex(-math.log(p["t"]) - EULER_GAMMA),
            lambda: _product(t=T_GRID),
            uses_pairs=False,
        ),
        Identity(
            "eq599",
            "L^-1[ln s / s^2](t) = -t ln t + t - t Euler gamma",
            lambda p, cfg, n: _log_power_lhs({**p, "b": 1.0}, cfg, n),
            lambda p, cfg, n: complex(
                -p["t"] * math.log(p["t"]) + p["t"] - p["t"] * EULER_GAMMA
            ),
            lambda: _product(t=T_GRID),
            uses_pairs=False,
        ),
        Identity(
            "eq10_false",
            "handbook form: L[F(t^2)](s) claimed = 1/(2 sqrt(pi)) int u^-3/2 exp(-s^2/4u) f(u) du",
            lambda p, cfg, n: pairs.sq_lhs_false(F(p), p["s"], cfg),
            lambda p, cfg, n: pairs.sq_rhs_false(f(p), p["s"], cfg),
            _pair_grid(FALSIFY_PAIRS, "s", S_GRID),
            false_form=True,
            counterpart="eq140",
            axis="s",
        ),
        Identity(
            "eq20_false",
            "handbook form: L^-1[f(ln s)/(s ln s)](t) claimed = int t^u F(u) / Gamma(u+1) du",
            lambda p, cfg, n: pairs.log_lhs_false(f(p), p["t"], n),
            lambda p, cfg, n: pairs.log_rhs_false(F(p), p["t"], cfg),
            _pair_grid(FALSIFY_PAIRS, "t", T_GRID),
            false_form=True,
            counterpart="eq240",
        ),
        Identity(
            "eq50_false",
            "older handbook form: L^-1[f(sqrt s)/s](t) claimed = 1/sqrt(pi t) int exp(-u^2/4t) F(u) du",
            lambda p, cfg, n: pairs.sqrt_lhs_false(f(p), p["t"], n),
            lambda p, cfg, n: pairs.sqrt_rhs(F(p), p["t"], cfg),
            _pair_grid(FALSIFY_PAIRS, "t", T_GRID),
            false_form=True,
            counterpart="eq60",
        ),
    ]
    return {e.id: e for e in entries}


REGISTRY = _build_registry()
CORRECTED_IDS = tuple(k for k, v in REGISTRY.items() if not v.false_form)
FALSE_IDS = tuple(k for k, v in REGISTRY.items() if v.false_form)


def get_identity(identity_id):
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentity(identity_id) from None


def relative_error(lhs, rhs):
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), TINY)


def evaluate_point(identity, point, tol=DEFAULT_TOL, cfg=DEFAULT_CONFIG, nodes=pairs.DEFAULT_NODES):
    """Both sides of one identity at one grid point, as an IdentityReport."""
    identity = get_identity(identity) if isinstance(identity, str) else identity
    try:
        with np.errstate(all="ignore"):
            lhs = complex(identity.lhs(point, cfg, nodes))
            rhs = complex(identity.rhs(point, cfg, nodes))
    except Exception as exc:  # per-point failures are reported, not raised
        nan = complex(math.nan, math.nan)
        return IdentityReport(
            identity.id, dict(point), nan, nan, math.nan, math.nan, ERROR,
            f"{type(exc).__name__}: {exc}",
        )
    abs_err = abs(lhs - rhs)
    rel_err = relative_error(lhs, rhs)
    if not (math.isfinite(abs_err) and math.isfinite(rel_err)):
        return IdentityReport(
            identity.id, dict(point), lhs, rhs, abs_err, rel_err, ERROR, "non-finite side"
        )
    verdict = MATCH if rel_err <= tol else MISMATCH
    return IdentityReport(identity.id, dict(point), lhs, rhs, abs_err, rel_err, verdict)


def default_grid(identity_id, pair=None):
    identity = get_identity(identity_id)
    grid = identity.default_grid()
    if pair is not None and identity.uses_pairs:
        lookup(pair)
        grid = [p for p in grid if p["pair"] == pair]
    return grid


def verify(identity_id, grid=None, tol=DEFAULT_TOL, cfg=DEFAULT_CONFIG, nodes=pairs.DEFAULT_NODES, workers=1):
    """Evaluate one identity over a grid; one report per point, in grid order."""
    identity = get_identity(identity_id)
    if grid is None:
        grid = identity.default_grid()
    grid = list(grid)
    if not grid:
        raise ValueError("grid must be nonempty")

    def one(point):
        return evaluate_point(identity, point, tol, cfg, nodes)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(one, grid))
    return [one(p) for p in grid]


def all_match(reports):
    return all(r.verdict == MATCH for r in reports)


def falsified(reports, threshold=FALSIFY_THRESHOLD):
    """True when at least one point disagrees by more than ``threshold``."""
    return any(r.verdict != ERROR and r.rel_err > threshold for r in reports)
