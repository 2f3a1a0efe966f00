import math

import numpy as np
import pytest
from numba.core.caching import NullCache

from Lemma import cfg, status
from Lemma.errors import DomainError, LemmaError, NonFiniteError
from Lemma.logger import FIELDNAMES, log_execution
from Lemma.utils import (
    check_finite, check_point, check_radius, dumps, horner_numba, parse_complex, parse_coefficients, parse_radii,
)


def test_guards():
    assert check_point(0.5, "t") == 0.5 + 0j
    with pytest.raises(DomainError):
        check_point(1j, "t")
    with pytest.raises(NonFiniteError):
        check_finite(np.array([1.0, math.inf]), "t")
    assert check_radius(1.0, "t", closed=True) == 1.0
    with pytest.raises(DomainError):
        check_radius(0.0, "t")
    assert issubclass(DomainError, LemmaError) and issubclass(LemmaError, ValueError)


def test_parsers():
    assert parse_complex("0.5") == 0.5
    assert parse_complex("-0.5, 0.25") == complex(-0.5, 0.25)
    assert parse_coefficients("1;1,0;0.5;") == [1, 1, 0.5]
    assert parse_radii("1, 0.5") == [0.5, 1.0]
    with pytest.raises(ValueError):
        parse_complex("1,2,3")
    with pytest.raises(ValueError):
        parse_coefficients(" ; ")


def test_dumps_shortest_round_trip():
    text = dumps({'x': 0.1, 'y': 1 / 3})
    assert '0.1,' in text and '0.3333333333333333' in text
    with pytest.raises(ValueError):
        dumps({'x': math.nan})


def test_status_callback_and_stderr(capsys):
    seen = []
    status.set_callback(seen.append)
    cfg.quiet = False
    status.update("Sampling")
    status.done()
    assert seen == ["Sampling"]
    assert capsys.readouterr().err == "\rSampling\n"


def test_quiet_status(capsys):
    status.update("hidden")
    assert capsys.readouterr().err == ""


def test_log_execution_appends(tmp_path):
    cfg.log_path = str(tmp_path / "runs.csv")
    log_execution(cfg, 'contact', '1;1;0.5', 'found', 0, 0.25)
    log_execution(cfg, 'contact', '1;0.1', 'no_contact', 3, 0.5)
    lines = (tmp_path / "runs.csv").read_text().splitlines()
    assert lines[0] == ",".join(FIELDNAMES)
    assert len(lines) == 3
    assert lines[2].endswith(",no_contact,3,0.5")


def test_log_disabled_without_path(tmp_path):
    cfg.log_path = None
    log_execution(cfg, 'contact', 'x', 'found', 0, 0.1)
    assert list(tmp_path.iterdir()) == []


def test_horner_kernel_is_cached_on_disk():
    assert not isinstance(horner_numba._cache, NullCache)
