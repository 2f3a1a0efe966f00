import math

import numpy as np
import pytest

from Lemma.contact_search import Found, contact_at, first_contact
from Lemma.corpus import herglotz_sample, example_family, random_contact_draw
from Lemma.errors import DegenerateContactError, LemmaError, NotExtremalError, ZeroValueError
from Lemma.lemma_engine import (
    FLAG_NAMES, jack_m, jack_at_circle_max, nunokawa_k, verify_theorem, verify_corollary,
)
from Lemma.poly_core import AnalyticPolynomial, HerglotzForm, evaluate, derivative_at, log_derivative_at
from Lemma.transforms import cayley_at, cayley_map, normalize

from conftest import Z0

ALPHA_GRID = np.linspace(0.0, 0.98, 50)


def _contacts(p, alpha):
    outcome = first_contact(p, alpha)
    assert isinstance(outcome, Found)
    return outcome.contacts


# =============================================================================
# JACK'S m
# =============================================================================

def test_jack_m_special_case(special):
    q = normalize(special, 0.5)
    assert abs(jack_m(q, Z0) - 1.6) < 1e-12


def test_jack_m_identity_map():
    # one atom at angle pi: q = (1 - z)/(1 + z), so w = z
    q = HerglotzForm([1.0], [math.pi])
    for z0 in (complex(0.3, 0.2), complex(-0.6, 0.1), 0.5j):
        assert abs(jack_m(q, z0) - 1.0) < 1e-12


def test_jack_m_rejects_non_extremal_point(special):
    q = normalize(special, 0.5)
    with pytest.raises(NotExtremalError):
        jack_m(q, complex(0.2, 0.3))


@pytest.mark.parametrize("alpha", ALPHA_GRID)
def test_jack_m_on_example_family(alpha):
    q = normalize(example_family(alpha), alpha)
    m = jack_m(q, Z0)
    assert abs(m - 1.6) < 1e-8

    # independent check: differentiate w numerically
    h = 1e-6
    w = cayley_map(q)
    fd = (w._value(Z0 + h) - w._value(Z0 - h)) / (2 * h)
    assert abs((Z0 * fd / w._value(Z0)).real - 1.6) < 1e-6


def test_jack_at_circle_max_matches_contact(special):
    q = normalize(special, 0.5)
    point = jack_at_circle_max(cayley_map(q), abs(Z0))
    assert abs(point.modulus - 1.0) < 1e-10
    assert abs(point.m - 1.6) < 1e-6
    assert point.residual_imag < 1e-6


@pytest.mark.parametrize("seed", range(3))
def test_jack_at_circle_max_m_at_least_one(seed):
    w = cayley_map(herglotz_sample(4, seed).as_map())
    for r in (0.3, 0.6, 0.9):
        point = jack_at_circle_max(w, r)
        assert point.m >= 1.0 - 1e-8


def test_jack_at_circle_max_needs_vanishing_origin(special):
    with pytest.raises(LemmaError):
        jack_at_circle_max(special, 0.5)


# =============================================================================
# NUNOKAWA'S k
# =============================================================================

def test_nunokawa_k_special_case(special):
    assert abs(nunokawa_k(special, 0.5, Z0) - 2.0) < 1e-12
    assert abs(nunokawa_k(special, 0.5, Z0.conjugate()) + 2.0) < 1e-12


@pytest.mark.parametrize("alpha", [0.0, 0.25, 0.75])
def test_nunokawa_k_on_example_family(alpha):
    assert abs(nunokawa_k(example_family(alpha), alpha, Z0) - 2.0) < 1e-8


def test_nunokawa_k_rejects_non_contact(special):
    with pytest.raises(NotExtremalError):
        nunokawa_k(special, 0.5, complex(0.1, 0.1))


def test_nunokawa_k_rejects_level_value():
    p = AnalyticPolynomial([1.0, 1.0])
    with pytest.raises(DegenerateContactError):
        nunokawa_k(p, 0.5, -0.5)


# =============================================================================
# THEOREM
# =============================================================================

def test_theorem_special_case(special):
    upper, lower = _contacts(special, 0.5)
    report = verify_theorem(special, 0.5, upper)
    assert report.passed, report.failed_checks
    assert set(report.checks) == set(FLAG_NAMES)
    assert abs(report.logderiv - complex(-0.8, 0.4)) < 1e-9
    assert abs(report.k - 2.0) < 1e-8
    assert abs(report.re_predicted + 0.8) < 1e-8
    assert abs(report.im_predicted - 0.4) < 1e-8
    assert abs(report.m - 1.6) < 1e-8
    assert abs(report.w_modulus - 1.0) < 1e-8

    exact = verify_theorem(special, 0.5, contact_at(special, 0.5, Z0))
    assert exact.bound == 1.25

    conjugate = verify_theorem(special, 0.5, lower)
    assert conjugate.passed
    assert abs(conjugate.k + 2.0) < 1e-8
    assert abs(conjugate.bound + 1.25) < 1e-8
    assert verify_theorem(special, 0.5, contact_at(special, 0.5, Z0.conjugate())).bound == -1.25


@pytest.mark.parametrize("alpha", ALPHA_GRID)
def test_theorem_on_example_family(alpha):
    p = example_family(alpha)
    contact = next(c for c in _contacts(p, alpha) if c.beta > 0)
    report = verify_theorem(p, alpha, contact)
    assert report.passed, report.failed_checks
    assert abs(report.k - 2.0) < 1e-8
    assert abs(report.bound - 1.25) < 1e-8

    s = 1.0 - alpha
    denom = 4 * alpha * alpha + s * s
    expected = complex(-4 * alpha * s / denom, 2 * s * s / denom)
    assert abs(report.logderiv - expected) < 1e-9


def test_report_carries_its_evidence(special):
    report = verify_theorem(special, 0.5, _contacts(special, 0.5)[0])
    rho = report.beta / (1 - report.alpha)
    assert report.bound == 0.5 * (rho + 1 / rho)
    assert report.gap == pytest.approx(0.75, abs=1e-8)
    data = report.to_dict()
    assert data['checks'] == report.checks
    assert data['passed'] is True
    assert len(data['z0']) == 2


def test_false_flags_are_recorded_not_raised(special):
    report = verify_theorem(special, 0.5, contact_at(special, 0.5, complex(0.1, 0.3)))
    assert not report.passed
    assert 'w_unit_modulus' in report.failed_checks


def test_theorem_rejects_real_value():
    p = example_family(0.0)
    with pytest.raises(DegenerateContactError):
        verify_theorem(p, 0.0, contact_at(p, 0.0, -0.25))


def test_log_derivative_matches_report(special):
    contact = _contacts(special, 0.5)[0]
    report = verify_theorem(special, 0.5, contact)
    assert abs(report.logderiv - log_derivative_at(special, contact.z0)) < 1e-15


# =============================================================================
# COROLLARY
# =============================================================================

def test_corollary_on_example_family():
    p = example_family(0.0)
    for contact in _contacts(p, 0.0):
        report = verify_corollary(p, contact)
        assert report.passed, report.failed_checks
        assert report.re_predicted == 0.0
        assert abs(abs(report.k) - 2.0) < 1e-8
        assert abs(report.logderiv - 1j * report.k) < 1e-8
        assert report.checks['corollary_re_zero']
        assert report.checks['corollary_k_unit']


def test_corollary_needs_zero_level(special):
    with pytest.raises(LemmaError):
        verify_corollary(special, _contacts(special, 0.5)[0])


def test_corollary_rejects_zero_value():
    p = AnalyticPolynomial([1.0, 2.0])
    with pytest.raises(ZeroValueError):
        verify_corollary(p, contact_at(p, 0.0, -0.5))


def test_w_at_contact_matches_cayley(special):
    contact = _contacts(special, 0.5)[0]
    report = verify_theorem(special, 0.5, contact)
    assert report.w_modulus == abs(cayley_at(normalize(special, 0.5), contact.z0))


# =============================================================================
# RANDOM DRAWS
# =============================================================================

DRAWS = [(seed, alpha, real) for seed in range(8) for alpha in (0.0, 0.3, 0.6) for real in (True, False)]


@pytest.mark.parametrize("seed,alpha,real", DRAWS)
def test_k_and_m_relations_on_draws(seed, alpha, real):
    draw = random_contact_draw(2 + seed % 7, alpha, 9_000 + seed, real_coefficients=real)
    p = draw.polynomial
    q = normalize(p, alpha)
    for contact in draw.outcome.contacts:
        z0 = contact.z0
        k = nunokawa_k(p, alpha, z0)
        value = evaluate(p, z0)

        logderiv = log_derivative_at(p, z0)
        assert abs(logderiv - 1j * k * (value - alpha) / value) <= 1e-8 * (1.0 + abs(logderiv))

        # the same k through q = (p - alpha)/(1 - alpha)
        ratio = z0 * derivative_at(q, z0) / evaluate(q, z0)
        assert abs(ratio.real) <= 1e-8 * (1.0 + abs(k))
        assert abs(ratio.imag - k) <= 1e-8 * (1.0 + abs(k))

        if real:
            m = jack_m(q, z0)
            assert abs(nunokawa_k(p, alpha, z0.conjugate()) + k) <= 1e-10 * (1.0 + abs(k))
            assert abs(jack_m(q, z0.conjugate()) - m) <= 1e-10 * (1.0 + abs(m))
