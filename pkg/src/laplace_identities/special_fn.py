"""Complex gamma, log-gamma, digamma and gamma derivative.

The array kernels come from the compiled ``_kernels`` extension when it is
importable, otherwise from the numpy implementation in ``_kernels_py``. Set
``LAPLACE_IDENTITIES_PURE=1`` to force the fallback. ``BACKEND`` records the
choice.
"""

import cmath
import math
import os

import numpy as np

from .errors import InvalidInput, PoleError

if os.environ.get("LAPLACE_IDENTITIES_PURE"):
    from . import _kernels_py as _kernels

    BACKEND = "python"
else:
    try:
        from . import _kernels
    except ImportError:
        from . import _kernels_py as _kernels

        BACKEND = "python"
    else:
        BACKEND = "cython"

EULER_GAMMA = 0.57721566490153286061
POLE_GUARD = 1e-12
_LOG_MAX = math.log(np.finfo(float).max)


def as_complex(z, name="z"):
    """Coerce ``z`` to a finite Python complex, rejecting NaN and Inf."""
    try:
        w = complex(z)
    except TypeError as exc:
        raise TypeError(f"{name} must be a number, got {type(z).__name__}") from exc
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise InvalidInput(f"{name} must be finite, got {w!r}")
    return w


def _check_poles(z):
    n = np.round(z.real)
    near = (n <= 0) & (np.abs(z - n) < POLE_GUARD)
    if np.any(near):
        bad = z[near].flat[0]
        raise PoleError(f"gamma pole at {bad!r} (nonpositive integer)")


def ln_gamma_array(z):
    """Elementwise principal log-gamma of a complex array.

    Raises PoleError if any entry lies within ``POLE_GUARD`` of a pole.
    """
    z = np.asarray(z, dtype=np.complex128)
    _check_poles(z)
    return _kernels.lgamma(z)


def digamma_array(z):
    z = np.asarray(z, dtype=np.complex128)
    _check_poles(z)
    return _kernels.digamma(z)


def ln_gamma(z):
    """Log-gamma on the principal branch; ``exp(ln_gamma(z)) == gamma(z)``.

    >>> abs(ln_gamma(1))
    0.0
    """
    w = as_complex(z)
    return complex(ln_gamma_array(np.array([w]))[0])


def gamma(z):
    w = as_complex(z)
    lg = ln_gamma(w)
    if lg.real > _LOG_MAX:
        raise OverflowError(f"|gamma({w!r})| overflows; use ln_gamma")
    return cmath.exp(lg)


def digamma(z):
    """psi(z) = gamma'(z) / gamma(z).

    Upward recurrence moves the argument to Re >= 10, where eight terms of
    the Bernoulli asymptotic series are accurate to roundoff. Reflection
    handles Re(z) < 1/2.
    """
    w = as_complex(z)
    return complex(digamma_array(np.array([w]))[0])


def gamma_derivative(z):
    """gamma'(z), computed as gamma(z) * psi(z)."""
    w = as_complex(z)
    return gamma(w) * digamma(w)
