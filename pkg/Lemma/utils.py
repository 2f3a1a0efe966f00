# utils.py
"""
Utility functions: finiteness guards, numba kernels, JSON and parsing helpers.
"""

import cmath
import json
import math

import numpy as np
from numba import njit, prange

from .errors import NonFiniteError, DomainError


# =============================================================================
# FINITENESS GUARDS
# =============================================================================

def check_finite(value, where):
    """Raise NonFiniteError unless every component of value is finite."""
    if isinstance(value, np.ndarray):
        if not np.all(np.isfinite(value)):
            raise NonFiniteError(f"Non-finite value in {where}")
        return value
    value = complex(value)
    if not cmath.isfinite(value):
        raise NonFiniteError(f"Non-finite value in {where}: {value!r}")
    return value


def check_point(z, where):
    """Coerce z to complex and require a finite point of the open unit disk."""
    z = check_finite(z, where)
    if abs(z) >= 1.0:
        raise DomainError(f"{where}: |z| = {abs(z)!r} is not inside the unit disk")
    return z


def check_radius(r, where, closed=False):
    r = float(r)
    if not math.isfinite(r):
        raise NonFiniteError(f"Non-finite radius in {where}: {r!r}")
    upper_ok = r <= 1.0 if closed else r < 1.0
    if not (r > 0.0 and upper_ok):
        bound = "(0, 1]" if closed else "(0, 1)"
        raise DomainError(f"{where}: radius {r!r} is not in {bound}")
    return r


# =============================================================================
# HORNER KERNEL
# =============================================================================

@njit(parallel=True, cache=True)
def horner_numba(coeffs, zs):
    n = zs.shape[0]
    m = coeffs.shape[0]
    result = np.empty(n, dtype=np.complex128)
    for i in prange(n):
        acc = coeffs[m - 1]
        for j in range(m - 2, -1, -1):
            acc = acc * zs[i] + coeffs[j]
        result[i] = acc
    return result


def horner(coeffs, z):
    """Scalar Horner recurrence, highest degree first, constant term last."""
    acc = complex(coeffs[-1])
    for c in coeffs[-2::-1]:
        acc = acc * z + complex(c)
    return acc


def circle_points(r, samples):
    """Points r·e^{iθ} at θ = 2πk/samples, k = 0..samples-1."""
    thetas = 2.0 * np.pi * np.arange(samples) / samples
    return thetas, r * np.exp(1j * thetas)


# =============================================================================
# FORMATTING
# =============================================================================

def complex_pair(z):
    z = complex(z)
    return [z.real, z.imag]


def dumps(payload):
    # float repr is the shortest round-trip decimal
    return json.dumps(payload, indent=2, allow_nan=False)


def parse_complex(text):
    """Parse 're,im' or a bare real into a complex number."""
    parts = [s.strip() for s in text.split(',')]
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise ValueError(f"Cannot parse complex value: {text!r}")


def parse_coefficients(text):
    """Parse the inline form 're,im;re,im;...' (ascending degree)."""
    items = [s for s in text.strip().split(';') if s.strip()]
    if not items:
        raise ValueError("Empty coefficient list")
    return [parse_complex(item) for item in items]


def parse_radii(text):
    radii = sorted(float(s) for s in text.split(',') if s.strip())
    if not radii:
        raise ValueError("Empty radius list")
    return radii
