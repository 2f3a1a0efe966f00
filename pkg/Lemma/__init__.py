# __init__.py
"""
contact-lemma - first-contact search and numerical checks of the boundary
lemma for analytic functions with p(0) = 1 on the unit disk.
"""

import time

from .config import cfg
from .errors import (
    LemmaError,
    DomainError,
    NonFiniteError,
    ZeroValueError,
    PoleError,
    NotExtremalError,
    DegenerateContactError,
    NormalizationError,
    GenerationError,
)
from .poly_core import (
    AnalyticMap,
    AnalyticPolynomial,
    HerglotzForm,
    CayleyOf,
    evaluate,
    derivative,
    derivative_at,
    log_derivative_at,
)
from .transforms import (
    LevelParameter,
    ContactValue,
    normalize,
    cayley_at,
    cayley_derivative_at,
    cayley_map,
    unit_modulus_closed_form,
)
from .contact_search import (
    BoundaryContact,
    Found,
    NoContact,
    Degenerate,
    min_real_on_circle,
    first_contact,
    contact_at,
    verify_interior_hypothesis,
)
from .lemma_engine import (
    NunokawaReport,
    jack_m,
    jack_at_circle_max,
    nunokawa_k,
    verify_theorem,
    verify_corollary,
)
from .corpus import (
    HerglotzMixture,
    CorpusSpec,
    example_family,
    example_special,
    herglotz_sample,
    random_contact_poly,
    random_contact_draw,
    build,
)
from .processors import analyze, run_case, run_campaign, expand_manifest
from .figure import PlotSpec, create_plot
from .logger import log_execution
from .status import update as status_update, done as status_done

__version__ = "1.0.0"


def execute(p, alpha):
    """Contact search and theorem checks for one function, timed and logged."""
    start_time = time.time()
    cfg.alpha = alpha

    status_update(f"Processing: alpha = {alpha}")
    analysis = analyze(p, alpha)

    status_update(f"Completed: {analysis.outcome.kind}")
    status_done()
    duration = time.time() - start_time
    log_execution(cfg, 'analyze', repr(p), analysis.outcome.kind, analysis.exit_code, duration)
    return analysis


__all__ = [
    'cfg',
    'execute',
    'LemmaError',
    'DomainError',
    'NonFiniteError',
    'ZeroValueError',
    'PoleError',
    'NotExtremalError',
    'DegenerateContactError',
    'NormalizationError',
    'GenerationError',
    'AnalyticMap',
    'AnalyticPolynomial',
    'HerglotzForm',
    'CayleyOf',
    'evaluate',
    'derivative',
    'derivative_at',
    'log_derivative_at',
    'LevelParameter',
    'ContactValue',
    'normalize',
    'cayley_at',
    'cayley_derivative_at',
    'cayley_map',
    'unit_modulus_closed_form',
    'BoundaryContact',
    'Found',
    'NoContact',
    'Degenerate',
    'min_real_on_circle',
    'first_contact',
    'contact_at',
    'verify_interior_hypothesis',
    'NunokawaReport',
    'jack_m',
    'jack_at_circle_max',
    'nunokawa_k',
    'verify_theorem',
    'verify_corollary',
    'HerglotzMixture',
    'CorpusSpec',
    'example_family',
    'example_special',
    'herglotz_sample',
    'random_contact_poly',
    'random_contact_draw',
    'build',
    'analyze',
    'run_case',
    'run_campaign',
    'expand_manifest',
    'PlotSpec',
    'create_plot',
    'status_update',
]
