"""Numerical verification of Laplace-transform identities.

Implicit-square, implicit-log and square-root relations between a time
function F(t) and its transform f(s), checked side by side on grids of
analytically known pairs, together with closed-form inverses of log-trig
and log-power transforms.
"""

from .catalog import TestPair, lookup, pair_ids
from .closed_forms import LogTrigParams, log_cos_inverse, log_power_inverse, log_sin_inverse
from .errors import (
    BranchWarning,
    DomainError,
    EvaluationError,
    InvalidInput,
    NonConvergence,
    PoleError,
    SelfConsistencyError,
    UnknownIdentity,
    UnknownPair,
)
from .laplace_core import (
    TimeFunction,
    TransformFunction,
    forward,
    inverse_stehfest,
    inverse_talbot,
)
from .pairs import GenParams
from .quadrature import DEFAULT_CONFIG, EngineConfig, QuadResult
from .special_fn import BACKEND, EULER_GAMMA, digamma, gamma, gamma_derivative, ln_gamma
from .verification import (
    CORRECTED_IDS,
    FALSE_IDS,
    IdentityReport,
    falsified,
    get_identity,
    verify,
)

__version__ = "0.1.0"
