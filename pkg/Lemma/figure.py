# figure.py
"""
Images of circles under p: CSV sampling ("theta,re,im") and an SVG overlay of
the image curves, the contact values and the line Re = alpha.
"""

from __future__ import annotations

import io
import gc
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

import numpy as np
import pandas as pd
import matplotlib
import matplotlib.pyplot as plt
from matplotlib.patches import Circle

from .contact_search import Found, first_contact
from .errors import LemmaError
from .poly_core import evaluate, is_normalized
from .status import update as status_update
from .utils import check_finite, check_radius

STROKE_COLORS = ('#1f4e9c', '#c0392b')
LEVEL_COLOR = '#555555'
MARKER_COLOR = '#000000'
_SVG_RC = {
    'svg.hashsalt': 'contact-lemma',
    'svg.fonttype': 'path',
    'font.family': 'DejaVu Sans',
}


@dataclass(frozen=True)
class PlotSpec:
    radii: Tuple[float, ...]
    samples_per_circle: int = 1024
    output_format: str = 'svg'
    level_alpha: Optional[float] = None

    def __post_init__(self):
        radii = tuple(sorted(check_radius(r, "PlotSpec", closed=True) for r in self.radii))
        if not radii:
            raise LemmaError("PlotSpec needs at least one radius")
        if self.samples_per_circle < 256:
            raise LemmaError(f"samples_per_circle must be >= 256, got {self.samples_per_circle}")
        if self.output_format not in ('svg', 'csv'):
            raise LemmaError(f"output_format must be svg or csv, got {self.output_format!r}")
        object.__setattr__(self, 'radii', radii)


# =============================================================================
# SAMPLING
# =============================================================================

def sample_circle(p, r, samples):
    """p on |z| = r at theta = 2 pi k/samples; the first point is repeated to close the curve."""
    r = check_radius(r, "sample_circle", closed=True)
    k = np.arange(samples)
    thetas = 2.0 * np.pi * k / samples
    values = check_finite(p.values(r * np.exp(1j * thetas)), f"sampling |z| = {r!r}")
    frame = pd.DataFrame({'theta': thetas, 're': values.real, 'im': values.imag})
    closing = frame.iloc[[0]].assign(theta=2.0 * np.pi)
    return pd.concat([frame, closing], ignore_index=True)


def csv_paths(out, count):
    out = Path(out)
    if count == 1:
        return [out]
    return [out.with_name(f"{out.stem}-{i}{out.suffix}") for i in range(count)]


def write_csv(frames, out):
    paths = csv_paths(out, len(frames))
    for frame, path in zip(frames, paths):
        frame.to_csv(path, index=False, lineterminator='\n')
    return paths


def read_csv(paths):
    return [pd.read_csv(path, float_precision='round_trip') for path in paths]


def contact_markers(p, alpha):
    """p(z0) at every contact of p with Re = alpha, or nothing when there is no clean contact."""
    if alpha is None or not is_normalized(p):
        return []
    outcome = first_contact(p, alpha)
    if not isinstance(outcome, Found):
        return []
    return [evaluate(p, c.z0) for c in outcome.contacts]


# =============================================================================
# SVG
# =============================================================================

def _setup_extent(ax, bounds, buffer_frac=0.05):
    minx, miny, maxx, maxy = bounds
    x_range = maxx - minx
    y_range = maxy - miny
    # a single-point image (constant p) still gets a unit window
    span = max(x_range, y_range) or 1.0
    x_range = x_range or span
    y_range = y_range or span
    x_center = (minx + maxx) / 2
    y_center = (miny + maxy) / 2
    ax.set_xlim(x_center - (1 + 2 * buffer_frac) * x_range / 2, x_center + (1 + 2 * buffer_frac) * x_range / 2)
    ax.set_ylim(y_center - (1 + 2 * buffer_frac) * y_range / 2, y_center + (1 + 2 * buffer_frac) * y_range / 2)
    ax.set_aspect('equal', 'box')


def render_svg(frames, level_alpha=None, markers=()):
    """SVG bytes for the image curves; byte-stable for equal inputs."""
    with matplotlib.rc_context(_SVG_RC):
        fig, ax = plt.subplots(figsize=(6, 6))
        for i, frame in enumerate(frames):
            ax.plot(frame['re'].to_numpy(), frame['im'].to_numpy(),
                    color=STROKE_COLORS[i % len(STROKE_COLORS)], linewidth=1.2, zorder=2)

        re_all = np.concatenate([f['re'].to_numpy() for f in frames])
        im_all = np.concatenate([f['im'].to_numpy() for f in frames])
        bounds = (re_all.min(), im_all.min(), re_all.max(), im_all.max())
        _setup_extent(ax, bounds)

        xlim, ylim = ax.get_xlim(), ax.get_ylim()
        if level_alpha is not None:
            ax.axvline(level_alpha, color=LEVEL_COLOR, linewidth=0.8, linestyle='--', zorder=1)
        radius = 0.01 * max(xlim[1] - xlim[0], ylim[1] - ylim[0])
        for value in markers:
            ax.add_patch(Circle((value.real, value.imag), radius, color=MARKER_COLOR, zorder=3))
        ax.set_xlim(xlim)
        ax.set_ylim(ylim)
        ax.set_xlabel('Re p')
        ax.set_ylabel('Im p')
        ax.grid(c='k', alpha=0.1)

        buf = io.BytesIO()
        fig.savefig(buf, format='svg', metadata={'Date': None})
        plt.close(fig)
    gc.collect()
    return buf.getvalue()


def create_plot(p, spec, out):
    """Write the CSV file(s) or the SVG for a PlotSpec; returns the written paths."""
    status_update(f"Sampling {len(spec.radii)} circle(s)")
    frames = [sample_circle(p, r, spec.samples_per_circle) for r in spec.radii]
    try:
        if spec.output_format == 'csv':
            paths = write_csv(frames, out)
        else:
            markers = contact_markers(p, spec.level_alpha)
            Path(out).write_bytes(render_svg(frames, spec.level_alpha, markers))
            paths = [Path(out)]
    except OSError as e:
        raise LemmaError(f"Cannot write plot output: {e}") from e
    status_update("Plot complete")
    return paths
