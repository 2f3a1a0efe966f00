# poly_core.py
"""
Analytic maps on the unit disk: polynomials, Herglotz forms and Cayley images,
each with value-at and closed-form derivative access.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod

import numpy as np

from .config import cfg
from .errors import ZeroValueError, NormalizationError
from .utils import check_finite, check_point, horner, horner_numba


# =============================================================================
# INTERFACE
# =============================================================================

class AnalyticMap(ABC):
    """Common interface so contact search and the lemma engine accept all families."""

    @abstractmethod
    def _value(self, z: complex) -> complex:
        """Scalar value, no domain checks."""

    @abstractmethod
    def values(self, zs: np.ndarray) -> np.ndarray:
        """Vectorized values over an array of points, no domain checks."""

    @abstractmethod
    def derivative(self) -> AnalyticMap:
        """Closed-form derivative."""

    @property
    def nominal_degree(self) -> int:
        """Rough count of oscillations on a circle, used to size angular sampling."""
        return 1

    @property
    def has_real_coefficients(self) -> bool:
        return False


# =============================================================================
# POLYNOMIALS
# =============================================================================

def _trim(coeffs):
    n = len(coeffs)
    while n > 1 and coeffs[n - 1] == 0:
        n -= 1
    return coeffs[:n]


class AnalyticPolynomial(AnalyticMap):
    """Dense ascending-degree coefficients; index n holds the coefficient of z**n."""

    __slots__ = ('coefficients', 'normalized')

    def __init__(self, coefficients, normalized=False):
        coeffs = np.asarray(coefficients, dtype=np.complex128).ravel()
        if coeffs.size == 0:
            raise ValueError("Polynomial needs at least one coefficient")
        check_finite(coeffs, "polynomial coefficients")
        coeffs = np.ascontiguousarray(_trim(coeffs))
        coeffs.setflags(write=False)
        if normalized and coeffs[0] != 1:
            raise NormalizationError(f"Normalized polynomial needs p(0) = 1, got {complex(coeffs[0])!r}")
        object.__setattr__(self, 'coefficients', coeffs)
        object.__setattr__(self, 'normalized', bool(normalized))

    def __setattr__(self, name, value):
        raise AttributeError("AnalyticPolynomial is immutable")

    def __repr__(self):
        terms = ", ".join(repr(complex(c)) for c in self.coefficients)
        return f"AnalyticPolynomial([{terms}])"

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def nominal_degree(self):
        return max(self.degree, 1)

    @property
    def has_real_coefficients(self):
        return bool(np.all(self.coefficients.imag == 0))

    def _value(self, z):
        return horner(self.coefficients, z)

    def values(self, zs):
        zs = np.ascontiguousarray(zs, dtype=np.complex128)
        return horner_numba(self.coefficients, zs)

    def derivative(self):
        if self.degree == 0:
            return AnalyticPolynomial([0.0])
        powers = np.arange(1, len(self.coefficients))
        return AnalyticPolynomial(self.coefficients[1:] * powers)

    # ---- coefficient algebra ----

    def __add__(self, other):
        if not isinstance(other, AnalyticPolynomial):
            return NotImplemented
        n = max(len(self.coefficients), len(other.coefficients))
        res = np.zeros(n, dtype=np.complex128)
        res[:len(self.coefficients)] += self.coefficients
        res[:len(other.coefficients)] += other.coefficients
        return AnalyticPolynomial(res)

    def __sub__(self, other):
        if not isinstance(other, AnalyticPolynomial):
            return NotImplemented
        return self + (-1.0) * other

    def __mul__(self, scalar):
        if isinstance(scalar, AnalyticMap):
            return NotImplemented
        return AnalyticPolynomial(self.coefficients * complex(scalar))

    __rmul__ = __mul__

    def affine(self, shift, scale):
        """(p - shift) / scale in coefficient form."""
        res = self.coefficients.copy()
        res[0] -= shift
        res = res / scale
        return AnalyticPolynomial(res, normalized=res[0] == 1)

    def rescaled(self, s):
        """Coefficients c_n s**n, i.e. z -> p(s z)."""
        powers = complex(s) ** np.arange(len(self.coefficients))
        return AnalyticPolynomial(self.coefficients * powers, normalized=self.normalized)

    def to_json(self):
        return [[c.real, c.imag] for c in self.coefficients.tolist()]

    @classmethod
    def from_json(cls, pairs, normalized=False):
        coeffs = []
        for item in pairs:
            if isinstance(item, (list, tuple)):
                if len(item) != 2:
                    raise ValueError(f"Coefficient pair must be [re, im], got {item!r}")
                coeffs.append(complex(float(item[0]), float(item[1])))
            else:
                coeffs.append(complex(float(item), 0.0))
        return cls(coeffs, normalized=normalized)


# =============================================================================
# HERGLOTZ FORMS
# =============================================================================

class HerglotzForm(AnalyticMap):
    """
    shift + scale * sum_j w_j (1 + u_j z)/(1 - u_j z), u_j = exp(-i theta_j).

    order > 0 holds the order-th derivative: the kernel derivative is
    2 n! u^n / (1 - u z)^(n+1), and the shift drops out.
    """

    __slots__ = ('weights', 'angles', 'shift', 'scale', 'order', '_units')

    def __init__(self, weights, angles, shift=0.0, scale=1.0, order=0):
        weights = np.asarray(weights, dtype=np.float64).ravel()
        angles = np.asarray(angles, dtype=np.float64).ravel()
        if weights.size == 0 or weights.shape != angles.shape:
            raise ValueError("Herglotz weights and angles must be non-empty and of equal length")
        check_finite(weights, "Herglotz weights")
        check_finite(angles, "Herglotz angles")
        units = np.exp(-1j * angles)
        for arr in (weights, angles, units):
            arr.setflags(write=False)
        object.__setattr__(self, 'weights', weights)
        object.__setattr__(self, 'angles', angles)
        object.__setattr__(self, 'shift', float(shift))
        object.__setattr__(self, 'scale', float(scale))
        object.__setattr__(self, 'order', int(order))
        object.__setattr__(self, '_units', units)

    def __setattr__(self, name, value):
        raise AttributeError("HerglotzForm is immutable")

    def __repr__(self):
        return (f"HerglotzForm(atoms={len(self.weights)}, shift={self.shift!r}, "
                f"scale={self.scale!r}, order={self.order})")

    @classmethod
    def from_mixture(cls, mixture, alpha=0.0):
        """alpha + (1 - alpha) h for a HerglotzMixture h."""
        return cls(mixture.weights, mixture.angles, shift=alpha, scale=1.0 - alpha)

    @property
    def nominal_degree(self):
        return len(self.weights) + self.order

    def _kernel_sum(self, zs):
        u = self._units
        if np.ndim(zs) == 0:
            uz = u * zs
        else:
            uz = np.multiply.outer(zs, u)
        if self.order == 0:
            terms = (1.0 + uz) / (1.0 - uz)
        else:
            terms = 2.0 * math.factorial(self.order) * u ** self.order / (1.0 - uz) ** (self.order + 1)
        return terms @ self.weights

    def _value(self, z):
        total = complex(self._kernel_sum(complex(z)))
        if self.order == 0:
            return self.shift + self.scale * total
        return self.scale * total

    def values(self, zs):
        total = self._kernel_sum(np.asarray(zs, dtype=np.complex128))
        if self.order == 0:
            return self.shift + self.scale * total
        return self.scale * total

    def derivative(self):
        return HerglotzForm(self.weights, self.angles, shift=0.0, scale=self.scale, order=self.order + 1)

    def affine(self, shift, scale):
        if self.order != 0:
            return HerglotzForm(self.weights, self.angles, 0.0, self.scale / scale, self.order)
        return HerglotzForm(self.weights, self.angles, (self.shift - shift) / scale,
                            self.scale / scale, 0)


# =============================================================================
# CAYLEY IMAGES
# =============================================================================

class CayleyOf(AnalyticMap):
    """
    w = (1 - q)/(1 + q) and its derivatives.

    With u = 1/(1+q), w = 2u - 1 and (1+q) u = 1 gives the Leibniz recursion
    u^(n) = -u * sum_{j=1..n} C(n, j) q^(j) u^(n-j).
    """

    __slots__ = ('inner', 'order')

    def __init__(self, inner, order=0):
        if not isinstance(inner, AnalyticMap):
            raise TypeError(f"CayleyOf expects an AnalyticMap, got {type(inner).__name__}")
        object.__setattr__(self, 'inner', inner)
        object.__setattr__(self, 'order', int(order))

    def __setattr__(self, name, value):
        raise AttributeError("CayleyOf is immutable")

    def __repr__(self):
        return f"CayleyOf({self.inner!r}, order={self.order})"

    @property
    def nominal_degree(self):
        return self.inner.nominal_degree

    def _derivative_stack(self, evaluate_at):
        stack = []
        f = self.inner
        for _ in range(self.order + 1):
            stack.append(evaluate_at(f))
            f = f.derivative()
        return stack

    def _combine(self, q_derivs):
        u = [1.0 / (1.0 + q_derivs[0])]
        for n in range(1, self.order + 1):
            acc = 0.0
            for j in range(1, n + 1):
                acc = acc + math.comb(n, j) * q_derivs[j] * u[n - j]
            u.append(-u[0] * acc)
        if self.order == 0:
            return 2.0 * u[0] - 1.0
        return 2.0 * u[self.order]

    def _value(self, z):
        return complex(self._combine(self._derivative_stack(lambda f: f._value(z))))

    def values(self, zs):
        zs = np.asarray(zs, dtype=np.complex128)
        return self._combine(self._derivative_stack(lambda f: f.values(zs)))

    def derivative(self):
        return CayleyOf(self.inner, self.order + 1)


# =============================================================================
# PUBLIC OPERATIONS
# =============================================================================

def evaluate(f, z):
    """f(z) for |z| < 1; non-finite inputs and results are rejected."""
    z = check_point(z, "evaluate")
    return check_finite(f._value(z), "evaluate")


def derivative(f):
    return f.derivative()


def derivative_at(f, z):
    z = check_point(z, "derivative_at")
    return check_finite(f.derivative()._value(z), "derivative_at")


def log_derivative_at(f, z, tol_zero=None):
    """z f'(z) / f(z)."""
    tol_zero = cfg.tol_zero if tol_zero is None else tol_zero
    value = evaluate(f, z)
    if abs(value) < tol_zero:
        raise ZeroValueError(f"|f(z)| = {abs(value)!r} below tol_zero at z = {complex(z)!r}")
    return check_finite(complex(z) * derivative_at(f, z) / value, "log_derivative_at")


def is_normalized(f, tol_zero=None):
    tol_zero = cfg.tol_zero if tol_zero is None else tol_zero
    return abs(f._value(0j) - 1.0) <= tol_zero


def require_normalized(f, where, tol_zero=None):
    if not is_normalized(f, tol_zero):
        raise NormalizationError(f"{where} needs p(0) = 1, got p(0) = {f._value(0j)!r}")
