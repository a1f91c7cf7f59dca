"""Closed-form inverses of log-trigonometric and log-power transforms.

Each sin/cos result is a pair of power-over-gamma terms t^z / Gamma(1+z)
with z = beta -/+ i gamma, evaluated as exp(z ln t - ln_gamma(1+z)) with a
real ln t.
"""

from dataclasses import dataclass
import cmath
import math

from .errors import DomainError
from .special_fn import as_complex, digamma, ln_gamma


@dataclass(frozen=True)
class LogTrigParams:
    beta: complex = 0.0
    gamma_param: complex = 0.0

    def __post_init__(self):
        object.__setattr__(self, "beta", as_complex(self.beta, "beta"))
        object.__setattr__(self, "gamma_param", as_complex(self.gamma_param, "gamma_param"))


def _check_time(t):
    t = float(t)
    if not t > 0:
        raise DomainError(f"t must be positive, got {t}")
    return t


def _power_over_gamma(t, z):
    return cmath.exp(z * math.log(t) - ln_gamma(1.0 + z))


def _conjugate_terms(t, p):
    t = _check_time(t)
    lower = _power_over_gamma(t, p.beta - 1j * p.gamma_param)
    upper = _power_over_gamma(t, p.beta + 1j * p.gamma_param)
    return lower, upper


def log_sin_inverse(t, p):
    """Inverse transform of exp(-beta ln s) sin(gamma ln s) / s."""
    lower, upper = _conjugate_terms(t, p)
    return (lower - upper) / 2j


def log_cos_inverse(t, p):
    """Inverse transform of exp(-beta ln s) cos(gamma ln s) / s."""
    lower, upper = _conjugate_terms(t, p)
    return (lower + upper) / 2.0


def log_power_inverse(t, b):
    """Inverse transform of ln(s) / s^(b+1), Re(b) >= 0.

    Equals -t^b / Gamma(b+1) * (ln t - psi(b+1)); at b = 0 this is
    -ln t - Euler's gamma.
    """
    t = _check_time(t)
    b = as_complex(b, "b")
    if b.real < 0:
        raise DomainError(f"need Re(b) >= 0, got b={b!r}")
    return -_power_over_gamma(t, b) * (math.log(t) - digamma(b + 1.0))
