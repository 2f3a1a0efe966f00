# processors.py
"""
Pipelines behind the CLI verbs: contact search -> interior check -> theorem
checks for one function, and fuzz campaigns over corpus specs.
"""

from __future__ import annotations

import math
import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Tuple

from .config import cfg
from .contact_search import Found, NoContact, first_contact, verify_interior_hypothesis
from .corpus import CorpusSpec, build, random_contact_draw
from .errors import LemmaError, GenerationError, DegenerateContactError
from .lemma_engine import verify_theorem, verify_corollary
from .status import update as status_update

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_FLAG_FALSE = 2
EXIT_NO_CONTACT = 3
EXIT_DEGENERATE = 4


# =============================================================================
# SINGLE FUNCTION
# =============================================================================

def verify_contact(p, alpha, contact):
    """Theorem report (corollary report when alpha = 0) plus the interior check."""
    if alpha == 0.0:
        report = verify_corollary(p, contact)
    else:
        report = verify_theorem(p, alpha, contact)
    interior = verify_interior_hypothesis(p, alpha, contact)
    return report.with_checks(interior_hypothesis=interior)


@dataclass(frozen=True)
class Analysis:
    alpha: float
    outcome: object
    reports: Tuple = ()

    @property
    def passed(self):
        return isinstance(self.outcome, Found) and all(r.passed for r in self.reports)

    @property
    def exit_code(self):
        if isinstance(self.outcome, NoContact):
            return EXIT_NO_CONTACT
        if not isinstance(self.outcome, Found):
            return EXIT_DEGENERATE
        return EXIT_OK if self.passed else EXIT_FLAG_FALSE

    def to_dict(self):
        return {
            'alpha': self.alpha,
            'outcome': self.outcome.to_dict(),
            'reports': [r.to_dict() for r in self.reports],
            'passed': self.passed,
            'exit_code': self.exit_code,
        }


def analyze(p, alpha):
    outcome = first_contact(p, alpha)
    reports = []
    if isinstance(outcome, Found):
        for i, contact in enumerate(outcome.contacts):
            status_update(f"Verifying contact {i + 1}/{len(outcome.contacts)}")
            reports.append(verify_contact(p, alpha, contact))
    return Analysis(float(alpha), outcome, tuple(reports))


# =============================================================================
# FUZZ CAMPAIGNS
# =============================================================================

@dataclass(frozen=True)
class CaseResult:
    spec: CorpusSpec
    status: str
    gap: Optional[float] = None
    reports: Tuple = ()
    detail: str = ''
    rejections: int = 0

    def to_dict(self):
        return {
            'spec': self.spec.to_dict(),
            'status': self.status,
            'gap': self.gap,
            'rejections': self.rejections,
            'detail': self.detail,
            'reports': [r.to_dict() for r in self.reports],
        }


def run_case(spec):
    rejections = 0
    try:
        if spec.family == 'random_polynomial':
            draw = random_contact_draw(spec.degree, spec.alpha, spec.seed, spec.real_coefficients)
            p, outcome, rejections = draw.polynomial, draw.outcome, draw.rejections
        else:
            p = build(spec)
            outcome = first_contact(p, spec.alpha)
    except GenerationError as e:
        return CaseResult(spec, 'degenerate', detail=str(e))
    except LemmaError as e:
        return CaseResult(spec, 'fail', detail=f"{type(e).__name__}: {e}")

    if isinstance(outcome, NoContact):
        return CaseResult(spec, 'no_contact', rejections=rejections)
    if not isinstance(outcome, Found):
        return CaseResult(spec, 'degenerate', detail=outcome.reason, rejections=rejections)

    try:
        reports = tuple(verify_contact(p, spec.alpha, c) for c in outcome.contacts)
    except DegenerateContactError as e:
        return CaseResult(spec, 'degenerate', detail=str(e), rejections=rejections)
    except LemmaError as e:
        return CaseResult(spec, 'fail', detail=f"{type(e).__name__}: {e}", rejections=rejections)

    gap = min(r.gap for r in reports)
    failed = sorted({name for r in reports for name in r.failed_checks})
    status = 'fail' if failed else 'pass'
    return CaseResult(spec, status, gap, reports, ', '.join(failed), rejections)


def _as_list(value):
    return list(value) if isinstance(value, (list, tuple)) else [value]


def expand_manifest(manifest, count, seed):
    """Per-case specs: an explicit 'cases' list as-is, or a template cycled over degree and alpha lists."""
    if 'cases' in manifest:
        return [CorpusSpec.from_dict(case) for case in manifest['cases']]
    template = dict(manifest)
    template.pop('seed', None)
    degrees = _as_list(template.pop('degree', None))
    alphas = _as_list(template.pop('alpha', 0.0))
    specs = []
    for i in range(count):
        fields = dict(template)
        if degrees != [None]:
            fields['degree'] = degrees[i % len(degrees)]
        fields['alpha'] = alphas[(i // len(degrees)) % len(alphas)]
        fields['seed'] = seed + i
        specs.append(CorpusSpec.from_dict(fields))
    return specs


_SHARED_SETTINGS = ('tol_zero', 'tol_radius', 'tol_contact', 'tol_beta', 'r_max', 'samples',
                    'max_samples', 'tol_identity', 'tol_unit_modulus', 'contact_radius',
                    'overshoot', 'max_rejections', 'corpus_min_beta')


def _init_worker(settings):
    for name, value in settings.items():
        setattr(cfg, name, value)
    cfg.quiet = True


@dataclass(frozen=True)
class CampaignSummary:
    results: Tuple = field(default_factory=tuple)

    @property
    def tallies(self):
        counts = {'pass': 0, 'fail': 0, 'degenerate': 0, 'no_contact': 0}
        for result in self.results:
            counts[result.status] += 1
        return counts

    @property
    def min_gap(self):
        gaps = [r.gap for r in self.results if r.gap is not None]
        return min(gaps) if gaps else None

    @property
    def failures(self):
        return sorted((r for r in self.results if r.status == 'fail'), key=lambda r: r.spec.seed)

    @property
    def exit_code(self):
        return EXIT_OK if not self.failures else EXIT_FLAG_FALSE

    def failure_manifest(self):
        return {'cases': [r.spec.to_dict() for r in self.failures]}

    def to_dict(self):
        min_gap = self.min_gap
        return {
            'count': len(self.results),
            'tallies': self.tallies,
            'min_gap': None if min_gap is None or not math.isfinite(min_gap) else min_gap,
            'failures': [r.to_dict() for r in self.failures],
        }


def run_campaign(specs, workers=None):
    workers = cfg.workers if workers is None else int(workers)
    specs = list(specs)
    if workers > 1 and len(specs) > 1:
        settings = {name: getattr(cfg, name) for name in _SHARED_SETTINGS}
        status_update(f"Running {len(specs)} case(s) on {workers} workers")
        # forked children of a process that already ran the numba kernel abort in OpenMP
        context = multiprocessing.get_context('spawn')
        with ProcessPoolExecutor(max_workers=workers, mp_context=context,
                                 initializer=_init_worker, initargs=(settings,)) as pool:
            results = list(pool.map(run_case, specs, chunksize=max(1, len(specs) // (4 * workers))))
    else:
        results = []
        for i, spec in enumerate(specs):
            status_update(f"Case {i + 1}/{len(specs)} (seed {spec.seed})")
            results.append(run_case(spec))
    return CampaignSummary(tuple(results))
