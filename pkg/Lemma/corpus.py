# corpus.py
"""
Function families for the property suites: the worked example and its
parameterized example family, Herglotz mixtures with Re h > 0 on the disk,
and random polynomials with a guaranteed interior contact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, asdict
from typing import Optional

import numpy as np

from .config import cfg, FAMILIES
from .contact_search import Found, first_contact, min_real_on_circle
from .errors import GenerationError, LemmaError
from .poly_core import AnalyticPolynomial, HerglotzForm
from .status import update as status_update
from .transforms import as_level

_SEED_MASK = (1 << 64) - 1


def generator(seed):
    """Counter-based generator keyed by a 64-bit seed."""
    return np.random.Generator(np.random.Philox(key=int(seed) & _SEED_MASK))


# =============================================================================
# HERGLOTZ MIXTURES
# =============================================================================

@dataclass(frozen=True)
class HerglotzMixture:
    weights: tuple
    angles: tuple

    def __post_init__(self):
        weights = tuple(float(x) for x in self.weights)
        angles = tuple(float(x) for x in self.angles)
        if not weights or len(weights) != len(angles):
            raise LemmaError("Herglotz mixture needs equal, non-empty weight and angle lists")
        if any(x < 0 for x in weights):
            raise LemmaError("Herglotz weights must be non-negative")
        if abs(math.fsum(weights) - 1.0) > 1e-14:
            raise LemmaError(f"Herglotz weights must sum to 1, got {math.fsum(weights)!r}")
        if any(not (0.0 <= t < 2.0 * math.pi) for t in angles):
            raise LemmaError("Herglotz angles must lie in [0, 2 pi)")
        object.__setattr__(self, 'weights', weights)
        object.__setattr__(self, 'angles', angles)

    def as_map(self, alpha=0.0):
        return HerglotzForm.from_mixture(self, alpha)


def herglotz_sample(n_atoms, seed):
    if n_atoms < 1:
        raise ValueError(f"n_atoms must be >= 1, got {n_atoms}")
    rng = generator(seed)
    weights = rng.dirichlet(np.ones(n_atoms))
    # push the rounding error into the largest weight so the sum is 1
    weights[np.argmax(weights)] += 1.0 - math.fsum(weights)
    angles = rng.uniform(0.0, 2.0 * math.pi, n_atoms)
    return HerglotzMixture(tuple(weights), tuple(angles))


# =============================================================================
# WORKED EXAMPLE
# =============================================================================

def example_family(alpha):
    """1 + (1 - alpha)(2z + z^2)."""
    level = as_level(alpha).alpha
    s = 1.0 - level
    return AnalyticPolynomial([1.0, 2.0 * s, s], normalized=True)


def example_special():
    """1 + z + z^2/2, the alpha = 1/2 member of the example family."""
    return AnalyticPolynomial([1.0, 1.0, 0.5], normalized=True)


# =============================================================================
# RANDOM CONTACT POLYNOMIALS
# =============================================================================

@dataclass(frozen=True)
class ContactDraw:
    polynomial: AnalyticPolynomial
    outcome: Found
    rejections: int


def _draw_g(rng, degree, real_coefficients):
    re = rng.uniform(-1.0, 1.0, degree)
    im = np.zeros(degree) if real_coefficients else rng.uniform(-1.0, 1.0, degree)
    return np.concatenate([[0.0], re + 1j * im])


def random_contact_draw(degree, alpha, seed, real_coefficients=False):
    """
    p = 1 + c g with g(0) = 0 and c = overshoot (1 - alpha)/|mu|, mu = min Re g on
    |z| = contact_radius, so Re p dips below alpha inside that circle. Draws
    whose search is not Found with r* < 0.95 and |beta| >= corpus_min_beta are
    rejected and redrawn from the same stream.
    """
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    level = as_level(alpha).alpha
    rng = generator(seed)
    for rejections in range(cfg.max_rejections):
        g = AnalyticPolynomial(_draw_g(rng, degree, real_coefficients))
        _, mu = min_real_on_circle(g, cfg.contact_radius)
        if mu > -1e-6:
            continue
        c = cfg.overshoot * (1.0 - level) / abs(mu)
        coeffs = c * g.coefficients
        coeffs[0] = 1.0
        p = AnalyticPolynomial(coeffs, normalized=True)
        outcome = first_contact(p, level)
        if not isinstance(outcome, Found):
            continue
        if any(ct.r_star >= 0.95 or abs(ct.beta) < cfg.corpus_min_beta for ct in outcome.contacts):
            continue
        if rejections:
            status_update(f"Seed {seed}: accepted after {rejections} rejection(s)")
        return ContactDraw(p, outcome, rejections)
    raise GenerationError(
        f"{cfg.max_rejections} consecutive rejections for degree={degree}, alpha={level}, seed={seed}")


def random_contact_poly(degree, alpha, seed, real_coefficients=False):
    return random_contact_draw(degree, alpha, seed, real_coefficients).polynomial


# =============================================================================
# CORPUS SPECS
# =============================================================================

@dataclass(frozen=True)
class CorpusSpec:
    family: str
    seed: int = 0
    alpha: float = 0.0
    degree: Optional[int] = None
    n_atoms: Optional[int] = None
    real_coefficients: bool = False

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise LemmaError(f"Unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        as_level(self.alpha)
        if self.family == 'random_polynomial' and (self.degree is None or self.degree < 1):
            raise LemmaError("random_polynomial needs degree >= 1")
        if self.family == 'herglotz_shift' and (self.n_atoms is None or self.n_atoms < 1):
            raise LemmaError("herglotz_shift needs n_atoms >= 1")
        object.__setattr__(self, 'seed', int(self.seed) & _SEED_MASK)

    def to_dict(self):
        return {key: value for key, value in asdict(self).items() if value is not None}

    @classmethod
    def from_dict(cls, data):
        known = {'family', 'seed', 'alpha', 'degree', 'n_atoms', 'real_coefficients'}
        unknown = set(data) - known
        if unknown:
            raise LemmaError(f"Unknown corpus spec field(s): {', '.join(sorted(unknown))}")
        return cls(**data)


def build(spec):
    """The analytic map a spec describes; bit-reproducible in spec.seed."""
    if spec.family == 'example_family':
        return example_family(spec.alpha)
    if spec.family == 'example_special':
        return example_special()
    if spec.family == 'random_polynomial':
        return random_contact_poly(spec.degree, spec.alpha, spec.seed, spec.real_coefficients)
    return herglotz_sample(spec.n_atoms, spec.seed).as_map(spec.alpha)
