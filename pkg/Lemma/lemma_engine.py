# lemma_engine.py
"""
The named quantities m (Jack) and k (Nunokawa) and the checks of the boundary
lemma at a contact point.

With q = (p - alpha)/(1 - alpha) and w = (1 - q)/(1 + q):
  z0 w'(z0)/w(z0) = m >= 1,
  z0 q'(z0)/q(z0) = z0 p'(z0)/(p(z0) - alpha) = i k,
  k = (m/2)(beta/(1 - alpha) + (1 - alpha)/beta),
  z0 p'(z0)/p(z0) = -alpha beta k/(alpha^2 + beta^2) + i beta^2 k/(alpha^2 + beta^2).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field, replace
from typing import Dict

import numpy as np

from .config import cfg
from .contact_search import TWO_PI, refine_angle
from .errors import DegenerateContactError, NotExtremalError, ZeroValueError, LemmaError
from .poly_core import evaluate, derivative_at
from .transforms import as_level, normalize, cayley_at, cayley_derivative_at
from .utils import check_finite, check_radius, circle_points, complex_pair

FLAG_NAMES = (
    'identity_re',
    'identity_im',
    'sign_re',
    'k_bound',
    'k_m_relation',
    'm_ge_one',
    'w_unit_modulus',
)


# =============================================================================
# REPORT
# =============================================================================

@dataclass(frozen=True)
class NunokawaReport:
    alpha: float
    beta: float
    z0: complex
    k: float
    m: float
    m_residual_imag: float
    logderiv: complex
    re_predicted: float
    im_predicted: float
    bound: float
    k_residual_real: float
    w_modulus: float
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self):
        return all(self.checks.values())

    @property
    def failed_checks(self):
        return [name for name, ok in self.checks.items() if not ok]

    @property
    def gap(self):
        """(k - bound)·sign(beta): how far k clears the printed bound."""
        return (self.k - self.bound) * math.copysign(1.0, self.beta)

    def with_checks(self, **extra):
        checks = dict(self.checks)
        checks.update({name: bool(ok) for name, ok in extra.items()})
        return replace(self, checks=checks)

    def to_dict(self):
        return {
            'z0': complex_pair(self.z0),
            'alpha': self.alpha,
            'beta': self.beta,
            'k': self.k,
            'm': self.m,
            'm_residual_imag': self.m_residual_imag,
            'logderiv': complex_pair(self.logderiv),
            're_predicted': self.re_predicted,
            'im_predicted': self.im_predicted,
            'bound': self.bound,
            'k_residual_real': self.k_residual_real,
            'w_modulus': self.w_modulus,
            'checks': dict(self.checks),
            'passed': self.passed,
        }


# =============================================================================
# JACK'S m
# =============================================================================

def _jack_ratio(q, z0, tol_zero):
    w = cayley_at(q, z0, tol_zero)
    if abs(w) < tol_zero:
        raise ZeroValueError(f"|w(z0)| = {abs(w)!r} below tol_zero")
    wp = cayley_derivative_at(q, z0, tol_zero)
    return w, complex(z0) * wp / w


def jack_m(q, z0, tol_identity=None, tol_zero=None):
    """m = z0 w'(z0)/w(z0) for w = (1 - q)/(1 + q); must be real at a contact."""
    tol_identity = cfg.tol_identity if tol_identity is None else tol_identity
    tol_zero = cfg.tol_zero if tol_zero is None else tol_zero
    _, ratio = _jack_ratio(q, z0, tol_zero)
    m = ratio.real
    if abs(ratio.imag) > tol_identity * (1.0 + abs(m)):
        raise NotExtremalError(
            f"z0 w'(z0)/w(z0) = {ratio!r} is not real: z0 is not a maximum-modulus point of w")
    return m


@dataclass(frozen=True)
class JackPoint:
    z0: complex
    m: float
    residual_imag: float
    modulus: float


def jack_at_circle_max(w, r, samples=None):
    """Maximum of |w| on |z| = r and the quotient z0 w'(z0)/w(z0) there (w(0) = 0)."""
    r = check_radius(r, "jack_at_circle_max")
    samples = cfg.samples if samples is None else int(samples)
    if abs(w._value(0j)) > cfg.tol_zero:
        raise LemmaError(f"jack_at_circle_max needs w(0) = 0, got {w._value(0j)!r}")
    dw = w.derivative()

    thetas, zs = circle_points(r, samples)
    modulus = check_finite(np.abs(w.values(zs)), "jack_at_circle_max")
    i = int(np.argmax(modulus))
    spacing = TWO_PI / samples

    def objective(t):
        return -abs(w._value(cmath.rect(r, t)))

    def slope(t):
        # d/dtheta log|w| = -Im(z w'/w); the objective is its negative
        z = cmath.rect(r, t)
        return (z * dw._value(z) / w._value(z)).imag

    theta = refine_angle(objective, slope, thetas[i] - spacing, thetas[i] + spacing)
    if -objective(theta) < modulus[i]:
        theta = thetas[i]
    z0 = cmath.rect(r, theta)
    value = w._value(z0)
    if abs(value) < cfg.tol_zero:
        raise ZeroValueError("w vanishes on the whole circle")
    ratio = z0 * dw._value(z0) / value
    return JackPoint(z0, ratio.real, abs(ratio.imag), abs(value))


# =============================================================================
# NUNOKAWA'S k
# =============================================================================

def _k_quotient(p, level, z0, tol_beta):
    value = evaluate(p, z0)
    shifted = value - level
    if abs(shifted) <= tol_beta:
        raise DegenerateContactError(
            f"|p(z0) - alpha| = {abs(shifted)!r} <= tol_beta: beta = 0 is excluded")
    return value, complex(z0) * derivative_at(p, z0) / shifted


def nunokawa_k(p, alpha, z0, tol_beta=None, tol_identity=None):
    """k = Im(z0 p'(z0)/(p(z0) - alpha)); the quotient is purely imaginary at a contact."""
    level = as_level(alpha).alpha
    tol_beta = cfg.tol_beta if tol_beta is None else tol_beta
    tol_identity = cfg.tol_identity if tol_identity is None else tol_identity
    _, quotient = _k_quotient(p, level, z0, tol_beta)
    if abs(quotient.real) > tol_identity:
        raise NotExtremalError(
            f"z0 p'(z0)/(p(z0) - alpha) = {quotient!r} is not purely imaginary")
    return quotient.imag


# =============================================================================
# THEOREM AND COROLLARY
# =============================================================================

def verify_theorem(p, alpha, contact, tol_identity=None, tol_beta=None, tol_zero=None):
    """All theorem quantities at a contact; false flags are recorded, never raised."""
    level = as_level(alpha).alpha
    tol_identity = cfg.tol_identity if tol_identity is None else tol_identity
    tol_beta = cfg.tol_beta if tol_beta is None else tol_beta
    tol_zero = cfg.tol_zero if tol_zero is None else tol_zero
    z0 = complex(contact.z0)

    value, quotient = _k_quotient(p, level, z0, tol_beta)
    if abs(value) < tol_zero:
        raise ZeroValueError(f"|p(z0)| = {abs(value)!r} below tol_zero")
    beta = value.imag
    if abs(beta) < tol_beta:
        raise DegenerateContactError(f"|beta| = {abs(beta)!r} < tol_beta: beta = 0 is excluded")
    k = quotient.imag
    logderiv = z0 * derivative_at(p, z0) / value

    denom = level * level + beta * beta
    re_predicted = -level * beta * k / denom
    im_predicted = beta * beta * k / denom
    rho = beta / (1.0 - level)
    bound = 0.5 * (rho + 1.0 / rho)

    q = normalize(p, level)
    w, ratio = _jack_ratio(q, z0, tol_zero)
    m = ratio.real
    w_modulus = abs(w)

    scale = 1.0 + abs(logderiv)
    if beta > 0:
        k_bound = k >= bound - tol_identity and bound >= 1.0 - tol_identity
    else:
        k_bound = k <= bound + tol_identity and bound <= -1.0 + tol_identity

    checks = {
        'identity_re': abs(logderiv.real - re_predicted) <= tol_identity * scale,
        'identity_im': abs(logderiv.imag - im_predicted) <= tol_identity * scale,
        'sign_re': logderiv.real <= tol_identity,
        'k_bound': k_bound,
        'k_m_relation': abs(k - 0.5 * m * (rho + 1.0 / rho)) <= tol_identity * (1.0 + abs(k)),
        'm_ge_one': m >= 1.0 - tol_identity,
        'w_unit_modulus': abs(w_modulus - 1.0) <= cfg.tol_unit_modulus,
    }

    return NunokawaReport(
        alpha=level, beta=beta, z0=z0, k=k, m=m, m_residual_imag=abs(ratio.imag),
        logderiv=logderiv, re_predicted=re_predicted, im_predicted=im_predicted,
        bound=bound, k_residual_real=abs(quotient.real), w_modulus=w_modulus,
        checks={name: bool(ok) for name, ok in checks.items()},
    )


def verify_corollary(p, contact, tol_identity=None, tol_beta=None):
    """The alpha = 0 case: z0 p'(z0)/p(z0) = i k with |k| >= 1 and sign(k) = sign(beta)."""
    tol_identity = cfg.tol_identity if tol_identity is None else tol_identity
    tol_beta = cfg.tol_beta if tol_beta is None else tol_beta
    if contact.alpha != 0.0:
        raise LemmaError(f"verify_corollary needs a contact at alpha = 0, got {contact.alpha!r}")
    value = evaluate(p, contact.z0)
    if abs(value) <= tol_beta:
        raise ZeroValueError(f"|p(z0)| = {abs(value)!r} <= tol_beta: p(z0) = 0 is excluded")

    report = verify_theorem(p, 0.0, contact, tol_identity=tol_identity, tol_beta=tol_beta)
    same_sign = math.copysign(1.0, report.k) == math.copysign(1.0, report.beta)
    return report.with_checks(
        corollary_re_zero=abs(report.logderiv.real) <= tol_identity,
        corollary_k_unit=abs(report.k) >= 1.0 - tol_identity and same_sign,
    )
