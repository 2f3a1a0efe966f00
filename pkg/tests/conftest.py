import math

import pytest

from Lemma import cfg
from Lemma import status
from Lemma.poly_core import AnalyticPolynomial

SQRT_HALF = 1.0 / math.sqrt(2.0)
Z0 = complex(-0.5, 0.5)


def _settings():
    return {name: value for name, value in vars(cfg).items() if not name.startswith('__')}


@pytest.fixture(autouse=True)
def reset_cfg():
    """cfg is global; every test starts from the defaults with progress output off."""
    saved = _settings()
    cfg.quiet = True
    yield
    for name, value in saved.items():
        setattr(cfg, name, value)
    status.set_callback(None)


@pytest.fixture
def special():
    """1 + z + z^2/2."""
    return AnalyticPolynomial([1.0, 1.0, 0.5], normalized=True)
