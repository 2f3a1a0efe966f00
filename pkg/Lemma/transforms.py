# transforms.py
"""
The two changes of variable behind the boundary lemma: the affine
normalization q = (p - alpha)/(1 - alpha) and the Cayley-type map
w = (1 - q)/(1 + q), plus the closed form of w at a contact point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import cfg
from .errors import PoleError, LemmaError
from .poly_core import CayleyOf, evaluate, derivative_at, require_normalized


# =============================================================================
# PARAMETERS
# =============================================================================

@dataclass(frozen=True)
class LevelParameter:
    alpha: float

    def __post_init__(self):
        alpha = float(self.alpha)
        if not math.isfinite(alpha) or not (0.0 <= alpha < 1.0):
            raise LemmaError(f"Level alpha must satisfy 0 <= alpha < 1, got {self.alpha!r}")
        object.__setattr__(self, 'alpha', alpha)


@dataclass(frozen=True)
class ContactValue:
    level: LevelParameter
    beta: float

    def __post_init__(self):
        beta = float(self.beta)
        if not math.isfinite(beta) or beta == 0.0:
            raise LemmaError(f"Contact value needs a finite beta != 0, got {self.beta!r}")
        object.__setattr__(self, 'beta', beta)

    @property
    def alpha(self):
        return self.level.alpha

    @property
    def rho(self):
        """beta / (1 - alpha), so that q(z0) = i rho."""
        return self.beta / (1.0 - self.alpha)


def as_level(alpha):
    if isinstance(alpha, LevelParameter):
        return alpha
    return LevelParameter(alpha)


def contact_value(alpha, beta):
    return ContactValue(as_level(alpha), beta)


# =============================================================================
# NORMALIZATION
# =============================================================================

def normalize(p, alpha):
    """q = (p - alpha)/(1 - alpha), with q(0) = 1."""
    alpha = as_level(alpha).alpha
    require_normalized(p, "normalize")
    if alpha == 0.0:
        return p
    if not hasattr(p, 'affine'):
        raise TypeError(f"normalize expects a polynomial or Herglotz form, got {type(p).__name__}")
    return p.affine(alpha, 1.0 - alpha)


# =============================================================================
# CAYLEY MAP
# =============================================================================

def _one_plus_q(q, z, tol_zero):
    value = evaluate(q, z)
    if abs(1.0 + value) < tol_zero:
        raise PoleError(f"|1 + q(z)| = {abs(1.0 + value)!r} below tol_zero at z = {complex(z)!r}")
    return value


def cayley_at(q, z, tol_zero=None):
    """w(z) = (1 - q(z))/(1 + q(z))."""
    tol_zero = cfg.tol_zero if tol_zero is None else tol_zero
    value = _one_plus_q(q, z, tol_zero)
    return (1.0 - value) / (1.0 + value)


def cayley_derivative_at(q, z, tol_zero=None):
    """w'(z) = -2 q'(z)/(1 + q(z))**2."""
    tol_zero = cfg.tol_zero if tol_zero is None else tol_zero
    value = _one_plus_q(q, z, tol_zero)
    return -2.0 * derivative_at(q, z) / (1.0 + value) ** 2


def cayley_map(q):
    return CayleyOf(q)


def unit_modulus_closed_form(c):
    """((1-a)^2 - b^2 - 2(1-a) b i) / ((1-a)^2 + b^2), the value of w at the contact."""
    s = 1.0 - c.alpha
    b = c.beta
    denom = s * s + b * b
    return complex((s * s - b * b) / denom, -2.0 * s * b / denom)
