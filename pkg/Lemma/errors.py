# errors.py
"""
Exceptions raised on malformed inputs. Theorem checks never raise on a false
flag; they record it in the report instead.
"""


class LemmaError(ValueError):
    """Base class for every error raised by the package."""


class DomainError(LemmaError):
    """A point lies outside the open unit disk."""


class NonFiniteError(LemmaError):
    """A NaN or infinity reached a public operation."""


class ZeroValueError(LemmaError):
    """|f(z)| fell below tol_zero where a quotient by f(z) is needed."""


class PoleError(LemmaError):
    """|1 + q(z)| fell below tol_zero in the Cayley map."""


class NotExtremalError(LemmaError):
    """A quotient that must be real at an extremal point is not."""


class DegenerateContactError(LemmaError):
    """|p(z0) - alpha| is too small: beta is zero up to tolerance."""


class NormalizationError(LemmaError):
    """A theorem input does not satisfy p(0) = 1."""


class GenerationError(LemmaError):
    """The corpus generator kept rejecting draws."""
