# cli.py
"""
Command-line front end.

    contact-lemma analyze "1;1;0.5" --alpha 0.5
    contact-lemma contact "1;1;0.5" --alpha 0.5
    contact-lemma verify "1;1;0.5" --alpha 0.5 --z0=-0.5,0.5
    contact-lemma fuzz --manifest manifest.json --count 1000 --seed 7
    contact-lemma plot "1;1;0.5" --radii 0.7071067811865476,1 --level-alpha 0.5 --out figure.svg

A function is either inline coefficients "re,im;re,im;..." (ascending degree,
a bare real is allowed per term) or a JSON file holding a [re, im] pair list,
{"coefficients": [...]} or a corpus spec {"family": ..., ...}.

Exit status: 0 all flags true, 1 malformed input, 2 a flag is false,
3 no contact, 4 degenerate contact.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from datetime import datetime, timezone
from pathlib import Path

from .config import cfg, DEFAULT_MANIFEST
from .contact_search import Found, NoContact, first_contact, contact_at
from .corpus import CorpusSpec, build
from .errors import LemmaError, DegenerateContactError, ZeroValueError
from .figure import PlotSpec, create_plot
from .logger import log_execution
from .poly_core import AnalyticPolynomial
from .processors import (
    EXIT_OK, EXIT_MALFORMED, EXIT_FLAG_FALSE, EXIT_NO_CONTACT, EXIT_DEGENERATE,
    analyze, verify_contact, expand_manifest, run_campaign,
)
from .status import update as status_update, done as status_done
from .utils import dumps, parse_complex, parse_coefficients, parse_radii


# =============================================================================
# INPUT
# =============================================================================

def load_function(text):
    """Inline coefficients, or a JSON file with a pair list, coefficients or a corpus spec."""
    path = Path(text)
    if not path.is_file():
        return AnalyticPolynomial(parse_coefficients(text))
    with open(path) as f:
        data = json.load(f)
    if isinstance(data, list):
        return AnalyticPolynomial.from_json(data)
    if isinstance(data, dict) and 'coefficients' in data:
        return AnalyticPolynomial.from_json(data['coefficients'])
    if isinstance(data, dict) and 'family' in data:
        return build(CorpusSpec.from_dict(data))
    raise ValueError(f"{path}: expected a coefficient list, {{'coefficients': ...}} or a corpus spec")


def load_manifest(path):
    if path is None:
        return dict(DEFAULT_MANIFEST)
    with open(path) as f:
        manifest = json.load(f)
    if not isinstance(manifest, dict):
        raise ValueError(f"{path}: a manifest must be a JSON object")
    return manifest


# =============================================================================
# OUTPUT
# =============================================================================

def _flatten(payload, prefix=''):
    if isinstance(payload, dict):
        for key, value in payload.items():
            yield from _flatten(value, f"{prefix}.{key}" if prefix else str(key))
    elif isinstance(payload, list) and payload and all(isinstance(x, (dict, list)) for x in payload):
        for i, value in enumerate(payload):
            yield from _flatten(value, f"{prefix}[{i}]")
    else:
        yield f"{prefix}: {json.dumps(payload)}"


def render(payload, fmt):
    if fmt == 'text':
        return '\n'.join(_flatten(payload)) + '\n'
    return dumps(payload) + '\n'


def emit(payload, args, to_file=True):
    if cfg.stamp:
        payload = dict(payload, generated_at=datetime.now(timezone.utc).isoformat())
    text = render(payload, args.format)
    if to_file and args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


# =============================================================================
# VERBS
# =============================================================================

def cmd_analyze(args):
    p = load_function(args.function)
    analysis = analyze(p, cfg.alpha)
    emit(analysis.to_dict(), args)
    return analysis.exit_code, analysis.outcome.kind


def cmd_contact(args):
    p = load_function(args.function)
    outcome = first_contact(p, cfg.alpha)
    emit(outcome.to_dict(), args)
    if isinstance(outcome, Found):
        return EXIT_OK, outcome.kind
    if isinstance(outcome, NoContact):
        return EXIT_NO_CONTACT, outcome.kind
    return EXIT_DEGENERATE, outcome.kind


def cmd_verify(args):
    p = load_function(args.function)
    contact = contact_at(p, cfg.alpha, parse_complex(args.z0))
    try:
        report = verify_contact(p, cfg.alpha, contact)
    except (DegenerateContactError, ZeroValueError) as e:
        emit({'contact': contact.to_dict(), 'degenerate': str(e)}, args)
        return EXIT_DEGENERATE, 'degenerate'
    emit({'contact': contact.to_dict(), 'report': report.to_dict()}, args)
    code = EXIT_OK if report.passed else EXIT_FLAG_FALSE
    return code, 'pass' if report.passed else 'fail'


def cmd_fuzz(args):
    manifest = load_manifest(args.manifest)
    specs = expand_manifest(manifest, args.count, cfg.seed)
    summary = run_campaign(specs, cfg.workers)

    payload = summary.to_dict()
    if summary.failures:
        Path(args.failures).write_text(dumps(summary.failure_manifest()) + '\n')
        payload['failure_manifest'] = str(args.failures)
    emit(payload, args)
    return summary.exit_code, ' '.join(f"{k}={v}" for k, v in summary.tallies.items())


def cmd_plot(args):
    p = load_function(args.function)
    if not args.out:
        raise ValueError("plot needs --out")
    spec = PlotSpec(
        radii=tuple(parse_radii(args.radii)),
        samples_per_circle=args.samples_per_circle,
        output_format=args.output_format,
        level_alpha=args.level_alpha,
    )
    paths = create_plot(p, spec, args.out)
    emit({'written': [str(path) for path in paths]}, args, to_file=False)
    return EXIT_OK, spec.output_format


COMMANDS = {
    'analyze': cmd_analyze,
    'contact': cmd_contact,
    'verify': cmd_verify,
    'fuzz': cmd_fuzz,
    'plot': cmd_plot,
}


# =============================================================================
# PARSER
# =============================================================================

def _common_flags():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", type=float, default=cfg.alpha, help="Level alpha in [0, 1) (default: 0).")
    common.add_argument("--tol-contact", type=float, default=cfg.tol_contact, dest="tol_contact",
                        help=f"Contact residual tolerance (default: {cfg.tol_contact:g}).")
    common.add_argument("--tol-identity", type=float, default=cfg.tol_identity, dest="tol_identity",
                        help=f"Identity check tolerance (default: {cfg.tol_identity:g}).")
    common.add_argument("--samples", type=int, default=cfg.samples,
                        help=f"Angular samples per circle in the contact search (default: {cfg.samples}).")
    common.add_argument("--seed", type=int, default=cfg.seed, help="Campaign seed (default: 0).")
    common.add_argument("--format", choices=["json", "text"], default="json", help="Report format.")
    common.add_argument("--out", type=str, default=None, help="Output path (stdout when omitted).")
    common.add_argument("--stamp", action="store_true", help="Add a generated_at timestamp to the report.")
    common.add_argument("--workers", type=int, default=cfg.workers, help="Worker processes for fuzz.")
    common.add_argument("--quiet", action="store_true", help="Suppress progress messages on stderr.")
    common.add_argument("--log", type=str, default=None, dest="log_path", help="Append a run record to this CSV.")
    return common


class _Parser(argparse.ArgumentParser):
    # usage errors are malformed input, not a false flag
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(EXIT_MALFORMED)


def build_parser():
    common = _common_flags()
    parser = _Parser(
        prog="contact-lemma",
        description="Locate first contacts of Re p with a level alpha and check the boundary lemma there.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (("analyze", "Contact search and theorem checks at every contact."),
                            ("contact", "Contact search only.")):
        verb = sub.add_parser(name, parents=[common], help=help_text)
        verb.add_argument("function", help="Inline coefficients or a JSON file.")

    verify = sub.add_parser("verify", parents=[common], help="Theorem checks at a given point.")
    verify.add_argument("function", help="Inline coefficients or a JSON file.")
    verify.add_argument("--z0", type=str, required=True, help="Point 're,im' inside the unit disk.")

    fuzz = sub.add_parser("fuzz", parents=[common], help="Run a property campaign over corpus draws.")
    fuzz.add_argument("--manifest", type=str, default=None, help="JSON manifest (template or 'cases' list).")
    fuzz.add_argument("--count", type=int, default=100, help="Draws for a template manifest (default: 100).")
    fuzz.add_argument("--failures", type=str, default="fuzz-failures.json",
                      help="Where the replay manifest of failing seeds is written.")

    plot = sub.add_parser("plot", parents=[common], help="Images of circles under p as SVG or CSV.")
    plot.add_argument("function", help="Inline coefficients or a JSON file.")
    plot.add_argument("--radii", type=str, default="1", help="Comma-separated radii in (0, 1].")
    plot.add_argument("--samples-per-circle", type=int, default=cfg.samples_per_circle,
                      dest="samples_per_circle", help="Samples per circle, at least 256.")
    plot.add_argument("--output-format", choices=["svg", "csv"], default="svg", dest="output_format")
    plot.add_argument("--level-alpha", type=float, default=None, dest="level_alpha",
                      help="Draw the line Re = alpha and mark the contact values.")
    return parser


def apply_settings(args):
    cfg.alpha = args.alpha
    cfg.tol_contact = args.tol_contact
    cfg.tol_identity = args.tol_identity
    cfg.samples = args.samples
    cfg.seed = args.seed
    cfg.workers = max(1, args.workers)
    cfg.quiet = args.quiet
    cfg.stamp = args.stamp
    cfg.log_path = args.log_path


def main(argv=None):
    args = build_parser().parse_args(argv)
    apply_settings(args)
    start_time = time.time()
    function = getattr(args, 'function', None) or getattr(args, 'manifest', None) or ''

    try:
        code, outcome = COMMANDS[args.command](args)
    except (LemmaError, ValueError, TypeError, OSError) as e:
        status_done()
        print(f"error: {e}", file=sys.stderr)
        code, outcome = EXIT_MALFORMED, type(e).__name__
    else:
        status_update(f"Completed: {outcome}")
        status_done()

    log_execution(cfg, args.command, function, outcome, code, time.time() - start_time)
    return code


if __name__ == '__main__':
    sys.exit(main())
