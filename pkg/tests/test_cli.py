import json

import pytest

from Lemma import cfg
from Lemma.cli import main, load_function


def _run(capsys, *argv):
    code = main(list(argv) + ['--quiet'])
    return code, capsys.readouterr()


def test_analyze_special_case(capsys):
    code, out = _run(capsys, 'analyze', '1;1;0.5', '--alpha', '0.5')
    assert code == 0
    report = json.loads(out.out)
    assert report['outcome']['kind'] == 'found'
    assert len(report['outcome']['contacts']) == 2
    assert sorted(r['k'] for r in report['reports']) == pytest.approx([-2.0, 2.0], abs=1e-8)
    assert all(all(r['checks'].values()) for r in report['reports'])
    assert 'generated_at' not in report


def test_analyze_no_contact(capsys):
    code, out = _run(capsys, 'analyze', '1;0.1', '--alpha', '0.5')
    assert code == 3
    assert json.loads(out.out)['outcome']['min_real_margin'] == pytest.approx(0.4, abs=1e-6)


def test_analyze_output_is_deterministic(capsys):
    _, first = _run(capsys, 'analyze', '1;1;0.5', '--alpha', '0.5')
    _, second = _run(capsys, 'analyze', '1;1;0.5', '--alpha', '0.5')
    assert first.out == second.out


def test_stamp_opt_in(capsys):
    _, out = _run(capsys, 'contact', '1;1;0.5', '--alpha', '0.5', '--stamp')
    assert 'generated_at' in json.loads(out.out)


def test_malformed_input(capsys):
    code, out = _run(capsys, 'analyze', '1;abc', '--alpha', '0.5')
    assert code == 1
    assert out.err.startswith('error:')
    assert _run(capsys, 'analyze', '2;1', '--alpha', '0.5')[0] == 1
    assert _run(capsys, 'analyze', '1;1', '--alpha', '1.5')[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(['frobnicate'])
    assert exc.value.code == 1


def test_contact_exit_codes(capsys):
    assert _run(capsys, 'contact', '1;1;0.5', '--alpha', '0.5')[0] == 0
    assert _run(capsys, 'contact', '1;0.1', '--alpha', '0.5')[0] == 3
    assert _run(capsys, 'contact', '1;1.3333333333333333', '--alpha', '0')[0] == 4


def test_text_format(capsys):
    code, out = _run(capsys, 'contact', '1;1;0.5', '--alpha', '0.5', '--format', 'text')
    assert code == 0
    assert 'kind: "found"' in out.out
    assert 'contacts[1].beta:' in out.out


def test_verify_at_given_point(capsys):
    code, out = _run(capsys, 'verify', '1;1;0.5', '--alpha', '0.5', '--z0=-0.5,0.5')
    assert code == 0
    report = json.loads(out.out)['report']
    assert report['k'] == pytest.approx(2.0, abs=1e-12)
    assert report['bound'] == 1.25


def test_verify_exit_codes(capsys):
    assert _run(capsys, 'verify', '1;1;0.5', '--alpha', '0.5', '--z0=0.1,0.3')[0] == 2
    assert _run(capsys, 'verify', '1;2;1', '--alpha', '0', '--z0=-0.25,0')[0] == 4
    assert _run(capsys, 'verify', '1;1;0.5', '--alpha', '0.5', '--z0=1,0')[0] == 1


def test_function_from_json_files(tmp_path):
    pairs = tmp_path / "pairs.json"
    pairs.write_text(json.dumps([[1, 0], [1, 0], [0.5, 0]]))
    wrapped = tmp_path / "wrapped.json"
    wrapped.write_text(json.dumps({'coefficients': [[1, 0], [1, 0], [0.5, 0]]}))
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({'family': 'example_special'}))
    for path in (pairs, wrapped, spec):
        assert list(load_function(str(path)).coefficients) == [1, 1, 0.5]


def test_out_path(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out = _run(capsys, 'analyze', '1;1;0.5', '--alpha', '0.5', '--out', str(target))
    assert code == 0
    assert out.out == ''
    assert json.loads(target.read_text())['passed'] is True


def test_fuzz_empty_campaign(capsys, tmp_path):
    code, out = _run(capsys, 'fuzz', '--count', '0', '--failures', str(tmp_path / "f.json"))
    assert code == 0
    summary = json.loads(out.out)
    assert summary['count'] == 0
    assert summary['tallies'] == {'pass': 0, 'fail': 0, 'degenerate': 0, 'no_contact': 0}
    assert not (tmp_path / "f.json").exists()


def test_fuzz_manifest_replay(capsys, tmp_path):
    manifest = tmp_path / "cases.json"
    manifest.write_text(json.dumps({'cases': [
        {'family': 'random_polynomial', 'degree': 4, 'alpha': 0.3, 'seed': 11},
        {'family': 'example_family', 'alpha': 0.6, 'seed': 0},
        {'family': 'herglotz_shift', 'n_atoms': 3, 'alpha': 0.1, 'seed': 2},
    ]}))
    first = _run(capsys, 'fuzz', '--manifest', str(manifest))
    second = _run(capsys, 'fuzz', '--manifest', str(manifest), '--workers', '2')
    assert first[0] == second[0] == 0
    assert first[1].out == second[1].out
    summary = json.loads(first[1].out)
    assert summary['tallies'] == {'pass': 2, 'fail': 0, 'degenerate': 0, 'no_contact': 1}


def test_fuzz_bad_manifest(capsys, tmp_path):
    manifest = tmp_path / "bad.json"
    manifest.write_text("{not json")
    assert _run(capsys, 'fuzz', '--manifest', str(manifest))[0] == 1
    manifest.write_text(json.dumps({'family': 'random_polynomial', 'degree': 'six'}))
    assert _run(capsys, 'fuzz', '--manifest', str(manifest), '--count', '1')[0] == 1


def test_plot_csv_and_svg(capsys, tmp_path):
    code, out = _run(capsys, 'plot', '1;1;0.5', '--radii', '0.7071067811865476,1',
                     '--output-format', 'csv', '--out', str(tmp_path / "circle.csv"))
    assert code == 0
    assert json.loads(out.out)['written'] == [str(tmp_path / "circle-0.csv"), str(tmp_path / "circle-1.csv")]

    svg = tmp_path / "figure.svg"
    code, _ = _run(capsys, 'plot', '1;1;0.5', '--radii', '0.7071067811865476,1',
                   '--level-alpha', '0.5', '--out', str(svg))
    assert code == 0
    assert svg.read_bytes().startswith(b'<?xml')


def test_plot_unwritable_output(capsys, tmp_path):
    code, _ = _run(capsys, 'plot', '1;1;0.5', '--out', str(tmp_path / "no" / "figure.svg"))
    assert code == 1


def test_settings_and_log(capsys, tmp_path):
    log = tmp_path / "runs.csv"
    _run(capsys, 'contact', '1;1;0.5', '--alpha', '0.5', '--tol-contact', '1e-9', '--log', str(log))
    assert cfg.tol_contact == 1e-9
    assert log.read_text().splitlines()[0].startswith('timestamp,command')
