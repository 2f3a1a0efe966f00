# config.py
"""
Global configuration and tolerances for the contact-lemma package.
"""

class cfg:
    """Global configuration holder - set these before running a command."""
    # Zero detection (|f(z)| in log-derivatives, |1+q| in the Cayley map)
    tol_zero = 1e-12

    # Contact search
    tol_radius = 1e-12      # bisection width on r
    tol_contact = 1e-10     # |Re p(z0) - alpha|
    tol_beta = 1e-8         # |Im p(z0)| below this is a degenerate contact
    r_max = 1 - 1e-9        # bisection ceiling, contacts must be interior
    samples = 4096          # default angular samples per circle
    max_samples = 2 ** 20
    interior_radial_steps = 64
    interior_angular_samples = 1024

    # Theorem checks
    tol_identity = 1e-8
    tol_unit_modulus = 1e-8

    # Corpus
    contact_radius = 0.9    # Re p is forced below alpha inside this circle
    overshoot = 1.2
    max_rejections = 100
    corpus_min_beta = 1e-3

    # Plotting
    samples_per_circle = 1024

    # Runtime state (set by the CLI)
    alpha = 0.0
    seed = 0
    workers = 1
    quiet = False
    stamp = False
    log_path = None


DEFAULT_MANIFEST = {
    'family': 'random_polynomial',
    'degree': 6,
    'alpha': 0.3,
    'real_coefficients': False,
}

FAMILIES = ('example_family', 'example_special', 'random_polynomial', 'herglotz_shift')
