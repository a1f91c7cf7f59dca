"""Both sides of each transform identity, computed by independent routes.

Time-side (t) identities put a quadrature over the time function F on one
side and a Talbot inversion of a composed transform on the other. The
s-side square identities put a forward transform of a composed time
function against a kernel integral over f. Nothing here evaluates either
side symbolically.

The false forms come with their claimed counterparts (``*_false``) so they
can be compared numerically and shown to fail.
"""

from dataclasses import dataclass
import cmath
import math
import warnings

import numpy as np

from .errors import BranchWarning, DomainError, NonConvergence
from .laplace_core import (
    TimeFunction,
    TransformFunction,
    as_time_function,
    as_transform,
    forward,
    inverse_talbot,
)
from .quadrature import (
    DEFAULT_CONFIG,
    damped,
    evaluate,
    integrate_peaked,
    integrate_semi_infinite,
    integrate_square_kernel,
)
from .special_fn import as_complex, digamma_array, ln_gamma_array

_SQRT_PI = math.sqrt(math.pi)
DEFAULT_NODES = 48


@dataclass(frozen=True)
class GenParams:
    """Scale ``a``, extra power ``b``, shift ``alpha`` and series coefficients."""

    a: complex = 1.0
    b: complex = 0.0
    alpha: complex = 0.0
    coeffs: tuple = (1.0,)

    def __post_init__(self):
        a = as_complex(self.a, "a")
        b = as_complex(self.b, "b")
        alpha = as_complex(self.alpha, "alpha")
        coeffs = tuple(as_complex(c, "coeff") for c in self.coeffs)
        if a == 0:
            raise ValueError("a must be nonzero")
        if b.real < 0:
            raise ValueError(f"Re(b) must be >= 0, got b={b!r}")
        if not coeffs:
            raise ValueError("coeffs must be nonempty")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "coeffs", coeffs)


def _positive_time(t):
    t = float(t)
    if not t > 0:
        raise DomainError(f"t must be positive, got {t}")
    return t


# -- implicit square: L[t F(a t^2)] ---------------------------------------


def _square_composite(F, a, weighted):
    F = as_time_function(F)
    if F.growth_bound > 0:
        raise DomainError("F(t^2) grows faster than any exponential; no transform")
    if a.imag == 0 and a.real > 0:
        points = tuple(math.sqrt(p / a.real) for p in F.points)
    else:
        points = ()

    scale = a.real if a.imag == 0 else a

    def composite(t):
        value = evaluate(F.eval, scale * t * t)
        return t * value if weighted else value

    return TimeFunction(composite, growth_bound=0.0, points=points)


def sq_lhs(F, s, cfg=DEFAULT_CONFIG, a=1.0):
    """Forward transform of t -> t F(a t^2)."""
    s = as_complex(s, "s")
    if not s.real > 0:
        raise DomainError(f"need Re(s) > 0, got s={s!r}")
    return forward(_square_composite(F, as_complex(a, "a"), True), s, cfg).value


def sq_rhs(f, s, a=1.0, cfg=DEFAULT_CONFIG):
    """s / (4 sqrt(pi) a^(3/2)) times the integral of exp(-s^2/(4ua)) u^(-3/2) f(u).

    a^(3/2) takes the principal branch; BranchWarning is issued for Re(a) < 0.
    """
    f = as_transform(f)
    s = as_complex(s, "s")
    a = as_complex(a, "a")
    if a == 0:
        raise ValueError("a must be nonzero")
    if a.real < 0:
        warnings.warn(f"Re(a) < 0 (a={a!r}); principal branch used for a^(3/2)", BranchWarning)
    if not s.real > 0:
        raise DomainError(f"need Re(s) > 0, got s={s!r}")
    c = s * s / (4.0 * a)
    if not c.real > 0:
        raise DomainError(f"kernel exponent s^2/(4a) = {c!r} must have positive real part")
    prefactor = s / (4.0 * _SQRT_PI * cmath.exp(1.5 * cmath.log(a)))
    return prefactor * integrate_square_kernel(f.eval, c, cfg).value


def sq_lhs_false(F, s, cfg=DEFAULT_CONFIG):
    """Forward transform of t -> F(t^2): what the false square formula claims to give."""
    s = as_complex(s, "s")
    if not s.real > 0:
        raise DomainError(f"need Re(s) > 0, got s={s!r}")
    return forward(_square_composite(F, 1.0 + 0j, False), s, cfg).value


def sq_rhs_false(f, s, cfg=DEFAULT_CONFIG):
    """The handbook's 1/(2 sqrt(pi)) kernel integral (known to be wrong)."""
    f = as_transform(f)
    s = as_complex(s, "s")
    if not s.real > 0:
        raise DomainError(f"need Re(s) > 0, got s={s!r}")
    c = s * s / 4.0
    return integrate_square_kernel(f.eval, c, cfg).value / (2.0 * _SQRT_PI)


# -- implicit log: L^-1[f(a ln(s - alpha)) / (s - alpha)^(b+1)] ------------


def _gamma_ratio_exponent(u, t, a, b, extra=0):
    # (a u + b) ln t - ln Gamma(a u + b + 1 + extra)
    z = a * u + b
    return z * math.log(t) - ln_gamma_array(z + 1.0 + extra)


def log_rhs(F, t, p=GenParams(), cfg=DEFAULT_CONFIG):
    """exp(alpha t) times the integral of t^(au+b) F(u) / Gamma(au+b+1) over u > 0."""
    F = as_time_function(F)
    t = _positive_time(t)

    def integrand(u):
        return damped(_gamma_ratio_exponent(u, t, p.a, p.b), F.eval, u)

    value = integrate_peaked(integrand, cfg, F.points).value
    return cmath.exp(p.alpha * t) * value


def log_series_rhs(F, t, p=GenParams(), cfg=DEFAULT_CONFIG):
    """exp(alpha t) * sum_n c_n t^n * integral of t^(au+b) F(u) / Gamma(au+b+n+1)."""
    F = as_time_function(F)
    t = _positive_time(t)
    total = 0j
    for n, c in enumerate(p.coeffs):
        if c == 0:
            continue

        def integrand(u, n=n):
            z = p.a * u + p.b
            return damped(z * math.log(t) - ln_gamma_array(z + 1.0 + n), F.eval, u)

        try:
            term = integrate_peaked(integrand, cfg, F.points).value
        except NonConvergence as exc:
            raise NonConvergence(f"series term {n}: {exc}", result=exc.result, term=n) from exc
        total += c * t**n * term
    return cmath.exp(p.alpha * t) * total


def log_da_integrand(F, t, a, b):
    """u F(u) t^(au+b) / Gamma(au+b+1) * [ln t - psi(au+b+1)]."""
    F = as_time_function(F)
    t = _positive_time(t)
    a = as_complex(a, "a")
    b = as_complex(b, "b")

    def integrand(u):
        z = a * u + b + 1.0
        bracket = math.log(t) - digamma_array(z)
        return u * bracket * damped(_gamma_ratio_exponent(u, t, a, b), F.eval, u)

    return integrand


def log_db_integrand(F, t, a, b):
    """F(u) t^(au+b) / Gamma(au+b+1) * [ln t - psi(au+b+1)]; the a-integrand without u."""
    F = as_time_function(F)
    t = _positive_time(t)
    a = as_complex(a, "a")
    b = as_complex(b, "b")

    def integrand(u):
        z = a * u + b + 1.0
        bracket = math.log(t) - digamma_array(z)
        return bracket * damped(_gamma_ratio_exponent(u, t, a, b), F.eval, u)

    return integrand


def log_da_rhs(F, t, a, b, cfg=DEFAULT_CONFIG):
    """Derivative in a of the generalised log identity, right-hand side."""
    F = as_time_function(F)
    return integrate_peaked(log_da_integrand(F, t, a, b), cfg, F.points).value


def log_db_rhs(F, t, a, b, cfg=DEFAULT_CONFIG):
    """Derivative in b of the generalised log identity, right-hand side.

    Its left-hand side is -ln(s) f(a ln s) / s^(b+1); the minus sign is the
    derivative of s^-(b+1), and the finite-difference tests confirm it.
    """
    F = as_time_function(F)
    return integrate_peaked(log_db_integrand(F, t, a, b), cfg, F.points).value


def log_rhs_false(F, t, cfg=DEFAULT_CONFIG):
    """Integral of t^u F(u) / Gamma(u+1), offered by the false handbook formula
    as the inverse of f(ln s) / (s ln s)."""
    F = as_time_function(F)
    t = _positive_time(t)
    log_t = math.log(t)

    def integrand(u):
        return damped(u * log_t - ln_gamma_array(u + 1.0), F.eval, u)

    return integrate_peaked(integrand, cfg, F.points).value


def log_composition_abscissa(f, a, alpha=0.0):
    """Real abscissa right of which f(a ln(s - alpha)) is analytic.

    f is analytic for Re(w) > sigma; with w = a ln(s - alpha) and
    |arg(s - alpha)| < pi that holds once
    ln|s - alpha| > (sigma + |Im a| pi) / Re a.
    """
    f = as_transform(f)
    a = as_complex(a, "a")
    alpha = as_complex(alpha, "alpha")
    if not a.real > 0:
        raise DomainError(f"composition with ln needs Re(a) > 0, got a={a!r}")
    radius = math.exp((f.abscissa + abs(a.imag) * math.pi) / a.real)
    return alpha.real + radius


def _invert(h, abscissa, t, nodes):
    return inverse_talbot(TransformFunction(h, abscissa=abscissa), _positive_time(t), nodes)


def log_lhs(f, t, p=GenParams(), nodes=DEFAULT_NODES):
    """Talbot inversion of s -> f(a ln(s - alpha)) / (s - alpha)^(b+1)."""
    f = as_transform(f)

    def composed(s):
        w = s - p.alpha
        lw = np.log(w)
        return evaluate(f.eval, p.a * lw) * np.exp(-(p.b + 1.0) * lw)

    return _invert(composed, log_composition_abscissa(f, p.a, p.alpha), t, nodes)


def log_series_lhs(f, t, p=GenParams(), nodes=DEFAULT_NODES):
    """Talbot inversion of f(a ln(s - alpha)) * sum_n c_n / (s - alpha)^(n+b+1)."""
    f = as_transform(f)

    def composed(s):
        w = s - p.alpha
        lw = np.log(w)
        series = sum(c * np.exp(-(n + p.b + 1.0) * lw) for n, c in enumerate(p.coeffs))
        return evaluate(f.eval, p.a * lw) * series

    return _invert(composed, log_composition_abscissa(f, p.a, p.alpha), t, nodes)


def log_da_lhs(f, t, a, b, nodes=DEFAULT_NODES):
    """Talbot inversion of f'(a ln s) ln(s) / s^(b+1); needs ``f.derivative``."""
    f = as_transform(f)
    if f.derivative is None:
        raise ValueError("transform has no derivative handle")
    a = as_complex(a, "a")
    b = as_complex(b, "b")

    def composed(s):
        ls = np.log(s)
        return evaluate(f.derivative, a * ls) * ls * np.exp(-(b + 1.0) * ls)

    return _invert(composed, log_composition_abscissa(f, a), t, nodes)


def log_db_lhs(f, t, a, b, nodes=DEFAULT_NODES):
    """Talbot inversion of -ln(s) f(a ln s) / s^(b+1)."""
    f = as_transform(f)
    a = as_complex(a, "a")
    b = as_complex(b, "b")

    def composed(s):
        ls = np.log(s)
        return -ls * evaluate(f.eval, a * ls) * np.exp(-(b + 1.0) * ls)

    return _invert(composed, log_composition_abscissa(f, a), t, nodes)


def log_lhs_false(f, t, nodes=DEFAULT_NODES):
    """Talbot inversion of f(ln s) / (s ln s), the false formula's left side."""
    f = as_transform(f)

    def composed(s):
        ls = np.log(s)
        return evaluate(f.eval, ls) / (s * ls)

    # 1/ln(s) adds a pole at s = 1
    abscissa = max(log_composition_abscissa(f, 1.0), 1.0)
    return _invert(composed, abscissa, t, nodes)


# -- square root: L^-1[f(sqrt s) / sqrt s] ---------------------------------


def sqrt_rhs(F, t, cfg=DEFAULT_CONFIG):
    """(1 / sqrt(pi t)) times the integral of exp(-u^2/(4t)) F(u) over u > 0."""
    F = as_time_function(F)
    t = _positive_time(t)

    def integrand(u):
        return damped(-u * u / (4.0 * t), F.eval, u)

    value = integrate_semi_infinite(
        integrand, cfg, scale=2.0 * math.sqrt(t), points=F.points
    ).value
    return value / math.sqrt(math.pi * t)


def _sqrt_abscissa(f):
    # Re(sqrt s) >= sqrt(Re s) for Re s > 0
    sigma = as_transform(f).abscissa
    return sigma * sigma if sigma > 0 else 0.0


def sqrt_lhs(f, t, nodes=DEFAULT_NODES):
    """Talbot inversion of f(sqrt s) / sqrt s."""
    f = as_transform(f)

    def composed(s):
        r = np.sqrt(s)
        return evaluate(f.eval, r) / r

    return _invert(composed, _sqrt_abscissa(f), t, nodes)


def sqrt_lhs_false(f, t, nodes=DEFAULT_NODES):
    """Talbot inversion of f(sqrt s) / s, the older handbook's left side."""
    f = as_transform(f)

    def composed(s):
        return evaluate(f.eval, np.sqrt(s)) / s

    return _invert(composed, _sqrt_abscissa(f), t, nodes)
