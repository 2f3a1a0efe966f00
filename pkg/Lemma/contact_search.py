# contact_search.py
"""
First-contact search: the smallest radius r* and the points z0 with |z0| = r*
where Re p first comes down to the level alpha.

Re p is harmonic, so phi(r) = min_{|z|=r} Re p(z) - alpha is non-increasing in
r and the first root can be bracketed by a coarse radial scan and bisected.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from .config import cfg
from .errors import DomainError
from .poly_core import evaluate, require_normalized
from .status import update as status_update
from .transforms import as_level
from .utils import check_finite, check_point, check_radius, circle_points, complex_pair

TWO_PI = 2.0 * math.pi
_XTOL = 1e-14
_RADIAL_SCAN = 64
_CANDIDATES = 4
# refined circle minima further than this above alpha are not contact candidates
_CONTACT_WINDOW = 1e-7
# polished contacts stay within this many bisection widths of r*
_RADIAL_SLACK = 1e3


# =============================================================================
# OUTCOME TYPES
# =============================================================================

@dataclass(frozen=True)
class BoundaryContact:
    z0: complex
    r_star: float
    theta0: float
    alpha: float
    beta: float
    residual: float

    def to_dict(self):
        return {
            'z0': complex_pair(self.z0),
            'r_star': self.r_star,
            'theta0': self.theta0,
            'alpha': self.alpha,
            'beta': self.beta,
            'residual': self.residual,
        }

    @classmethod
    def from_dict(cls, data):
        re, im = data['z0']
        return cls(complex(re, im), float(data['r_star']), float(data['theta0']),
                   float(data['alpha']), float(data['beta']), float(data['residual']))


@dataclass(frozen=True)
class Found:
    contacts: Tuple[BoundaryContact, ...]
    kind = 'found'

    def __post_init__(self):
        if not self.contacts:
            raise ValueError("Found needs at least one contact")

    def to_dict(self):
        return {'kind': self.kind, 'contacts': [c.to_dict() for c in self.contacts]}


@dataclass(frozen=True)
class NoContact:
    min_real_margin: float
    kind = 'no_contact'

    def to_dict(self):
        return {'kind': self.kind, 'min_real_margin': self.min_real_margin}


@dataclass(frozen=True)
class Degenerate:
    reason: str
    r_star: Optional[float] = None
    kind = 'degenerate'

    def to_dict(self):
        return {'kind': self.kind, 'reason': self.reason, 'r_star': self.r_star}


ContactOutcome = Union[Found, NoContact, Degenerate]


# =============================================================================
# ANGULAR REFINEMENT
# =============================================================================

def refine_angle(objective, slope, a, b):
    """Minimize objective on [a, b]: root of its slope when bracketed, bounded search otherwise."""
    ga, gb = slope(a), slope(b)
    if ga < 0.0 < gb:
        return brentq(slope, a, b, xtol=_XTOL)
    res = minimize_scalar(objective, bounds=(a, b), method='bounded', options={'xatol': 1e-12})
    return float(res.x)


def _sample_count(p, samples):
    n = cfg.samples if samples is None else int(samples)
    if n < 64:
        raise ValueError(f"Need at least 64 angular samples, got {n}")
    degree = p.nominal_degree
    if degree > 32:
        n = max(n, 1 << math.ceil(math.log2(128 * degree)))
    return min(n, cfg.max_samples)


def _local_minima(values):
    left = np.roll(values, 1)
    right = np.roll(values, -1)
    return np.flatnonzero((values < left) & (values <= right))


def _sample_circle(p, r, n):
    """Sample Re p on |z| = r, doubling n while two local minima crowd within 3 spacings."""
    while True:
        thetas, zs = circle_points(r, n)
        re = check_finite(p.values(zs).real, "circle sampling")
        minima = _local_minima(re)
        if n >= cfg.max_samples or len(minima) < 2:
            return thetas, re, minima, n
        gaps = np.diff(np.append(minima, minima[0] + n))
        if gaps.min() > 3:
            return thetas, re, minima, n
        n = min(2 * n, cfg.max_samples)


def _refine_minimum(p, dp, r, theta, value, spacing):
    def objective(t):
        return p._value(cmath.rect(r, t)).real

    def slope(t):
        z = cmath.rect(r, t)
        return -(z * dp._value(z)).imag

    refined = refine_angle(objective, slope, theta - spacing, theta + spacing)
    refined_value = objective(refined)
    if refined_value <= value:
        return refined % TWO_PI, refined_value
    return theta, value


def _candidate_indices(re, minima, limit):
    ordered = minima[np.argsort(re[minima], kind='stable')][:limit] if len(minima) else minima
    lowest = int(np.argmin(re))
    indices = [lowest] + [int(i) for i in ordered if int(i) != lowest]
    return indices[:max(limit, 1)]


def _circle_minimum(p, dp, r, n, limit=_CANDIDATES):
    thetas, re, minima, n = _sample_circle(p, r, n)
    spacing = TWO_PI / n
    best = None
    for i in _candidate_indices(re, minima, limit):
        theta, value = _refine_minimum(p, dp, r, thetas[i], re[i], spacing)
        if best is None or value < best[1]:
            best = (theta, value)
    return best


def min_real_on_circle(p, r, samples=None):
    """Global minimizer of theta -> Re p(r e^{i theta}) over [0, 2 pi)."""
    r = check_radius(r, "min_real_on_circle")
    n = _sample_count(p, samples)
    theta, value = _circle_minimum(p, p.derivative(), r, n)
    return float(theta), float(value)


# =============================================================================
# CONTACT POLISH
# =============================================================================

def _contact_equations(p, dp, d2p, level, r, theta):
    z = cmath.rect(r, theta)
    P = p._value(z)
    D = z * dp._value(z)
    E = z * z * d2p._value(z)
    return P, D, E


def _polish_contact(p, dp, d2p, level, r0, theta0, max_drift, max_iter=8):
    """Newton on (r, theta) for Re p(z) = alpha, Im(z p'(z)) = 0."""
    r, theta = r0, theta0
    best = (r0, theta0, math.inf)
    for _ in range(max_iter + 1):
        P, D, E = _contact_equations(p, dp, d2p, level, r, theta)
        F = np.array([P.real - level, D.imag])
        norm = float(np.max(np.abs(F)))
        if not math.isfinite(norm):
            break
        if norm < best[2]:
            best = (r, theta, norm)
        if norm <= 1e-16 * (1.0 + abs(P) + abs(D)):
            break
        J = np.array([[D.real / r, -D.imag],
                      [(D + E).imag / r, (D + E).real]])
        try:
            step = np.linalg.solve(J, -F)
        except np.linalg.LinAlgError:
            break
        r, theta = r + step[0], theta + step[1]
        if not (0.0 < r < 1.0) or abs(r - r0) > max_drift:
            break
    return cmath.rect(best[0], best[1])


# =============================================================================
# CONTACT SEARCH
# =============================================================================

def contact_at(p, alpha, z0):
    """Contact record for a given point, without any search."""
    level = as_level(alpha).alpha
    z0 = check_point(z0, "contact_at")
    if z0 == 0:
        raise DomainError("contact_at: the contact point must not be the origin")
    value = evaluate(p, z0)
    return BoundaryContact(z0, abs(z0), cmath.phase(z0) % TWO_PI, level, value.imag,
                           abs(value.real - level))


def _enumerate_contacts(p, dp, d2p, level, r_star, n, tol_contact, tol_radius):
    thetas, re, minima, n = _sample_circle(p, r_star, n)
    max_drift = _RADIAL_SLACK * tol_radius
    spacing = TWO_PI / n
    indices = minima if len(minima) else [int(np.argmin(re))]
    contacts = []
    for i in indices:
        theta, value = _refine_minimum(p, dp, r_star, thetas[i], re[i], spacing)
        if value - level > _CONTACT_WINDOW:
            continue
        z0 = _polish_contact(p, dp, d2p, level, r_star, theta, max_drift)
        if abs(abs(z0) - r_star) > max_drift:
            continue
        pz = p._value(z0)
        residual = abs(pz.real - level)
        if residual > tol_contact:
            continue
        if any(abs(z0 - c.z0) < 1e-9 for c in contacts):
            continue
        contacts.append(BoundaryContact(z0, abs(z0), cmath.phase(z0) % TWO_PI, level,
                                        pz.imag, residual))
    return contacts


def first_contact(p, alpha, samples=None, tol_radius=None, tol_contact=None,
                  tol_beta=None, r_max=None):
    """
    Smallest r* with min_{|z|=r*} Re p = alpha and every contact angle on it.

    Returns Found (contacts sorted by angle), NoContact (with the margin
    min_r phi(r)) or Degenerate (beta = 0 or a tangential touch at every contact).
    """
    level = as_level(alpha).alpha
    require_normalized(p, "first_contact")
    tol_radius = cfg.tol_radius if tol_radius is None else tol_radius
    tol_contact = cfg.tol_contact if tol_contact is None else tol_contact
    tol_beta = cfg.tol_beta if tol_beta is None else tol_beta
    r_max = cfg.r_max if r_max is None else r_max

    n = _sample_count(p, samples)
    dp = p.derivative()
    d2p = dp.derivative()

    def phi(r):
        return _circle_minimum(p, dp, r, n)[1] - level

    status_update(f"Scanning radii for the first contact (alpha={level})")
    lo, hi = 0.0, None
    margin = math.inf
    for r in np.linspace(0.0, r_max, _RADIAL_SCAN + 1)[1:]:
        value = phi(float(r))
        margin = min(margin, value)
        if value <= 0.0:
            hi = float(r)
            break
        lo = float(r)

    if hi is None:
        status_update("No contact inside the disk")
        return NoContact(min_real_margin=float(margin))

    status_update("Bisecting the contact radius")
    while hi - lo > tol_radius:
        mid = 0.5 * (lo + hi)
        if phi(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    r_star = 0.5 * (lo + hi)

    contacts = _enumerate_contacts(p, dp, d2p, level, r_star, n, tol_contact, tol_radius)
    if not contacts:
        return Degenerate("no contact angle meets the residual tolerance", r_star)

    kept = []
    tangential = 0
    for c in contacts:
        if abs(c.beta) < tol_beta:
            continue
        if abs(c.z0 * dp._value(c.z0)) < tol_beta:
            tangential += 1
            continue
        kept.append(c)
    if not kept:
        reason = "tangential touch, z0 p'(z0) = 0" if tangential else "beta = Im p(z0) vanishes at every contact"
        return Degenerate(reason, r_star)

    status_update(f"Found {len(kept)} contact(s) at r* = {r_star!r}")
    return Found(tuple(sorted(kept, key=lambda c: c.theta0)))


def verify_interior_hypothesis(p, alpha, contact, radial_steps=None, angular_samples=None,
                               tol_contact=None):
    """Re p > alpha - tol_contact on a polar grid strictly inside |z| = r*."""
    level = as_level(alpha).alpha
    radial_steps = cfg.interior_radial_steps if radial_steps is None else int(radial_steps)
    angular_samples = cfg.interior_angular_samples if angular_samples is None else int(angular_samples)
    tol_contact = cfg.tol_contact if tol_contact is None else tol_contact

    r_star = contact.r_star
    radii = r_star * np.arange(1, radial_steps + 1) / (radial_steps + 1)
    radii = np.append(radii, r_star * (1.0 - 10.0 * cfg.tol_radius))
    _, unit = circle_points(1.0, angular_samples)
    zs = np.multiply.outer(radii, unit).ravel()
    re = check_finite(p.values(zs).real, "verify_interior_hypothesis")
    return bool(np.all(re > level - tol_contact))
