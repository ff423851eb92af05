#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains tests for the newtonforms command line interface
"""

import json

import pytest

from newtonforms import cli
from newtonforms.core import consts, filtration
from newtonforms.commands.check import CheckCommand

from tests.corpus import SPHERE, BRIESKORN, PLANE_CUBIC, DEGENERATE, SUSPENSION

CHECK_ARGS = ['--max-a', '1', '--max-k', '1', '--max-m', '1', '--cutoff', '4', '--trials', '3',
              '--normalization-trials', '2']


def _run(capsys, *argv):
    code = cli.main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(['--version'])
    assert exc.value.code == 0


def test_newton_sphere(capsys):
    code, report = _run(capsys, 'newton', '--poly', SPHERE)
    assert code == consts.ExitCodes.Success
    assert report['exit_code'] == 0
    assert {'normal': [1, 1, 1], 'height': 2, 'compact': True} in report['polyhedron']['facets']
    facets = report['polyhedron']['facets']
    assert [facets[i] for i in report['polyhedron']['compact_facet_indices']] == [
        {'normal': [1, 1, 1], 'height': 2, 'compact': True}]
    assert report['axis_condition'] is True
    assert report['config']['seed'] == consts.DEFAULT_SEED
    assert report['version']


def test_newton_delta1(capsys):
    code, report = _run(capsys, 'newton', '--poly', PLANE_CUBIC, '--delta1-axis', '1')
    assert code == 0
    assert report['delta1']['facets'] == [{'normal': [2, 1], 'height': 3, 'compact': True}]


def test_newton_input_errors(capsys):
    code, report = _run(capsys, 'newton', '--poly', '0', '--nvars', '2')
    assert code == consts.ExitCodes.InputError
    assert report['error_type'] == 'ZeroPolynomialError'

    code, report = _run(capsys, 'newton', '--poly', 'x1 +')
    assert code == consts.ExitCodes.InputError
    assert report['error_type'] == 'PolynomialSyntaxError'


def test_text_format(capsys):
    code = cli.main(['--format', 'text', 'newton', '--poly', SPHERE])
    out = capsys.readouterr().out
    assert code == 0
    assert 'axis_condition: True' in out


def test_resolve_sphere(capsys):
    code, report = _run(capsys, 'resolve', '--poly', SPHERE)
    assert code == 0
    assert len(report['sigma']['cones']) == 3
    assert report['certificate']['regular']
    assert report['certificate']['support_is_orthant']
    assert report['certificate']['refines_input']


def test_resolve_fan_file(capsys, tmp_path):
    path = tmp_path / 'cone.json'
    path.write_text(json.dumps({'dim': 2, 'rays': [[1, 2], [2, 1]], 'cones': [[0, 1]]}))
    code, report = _run(capsys, 'resolve', '--fan', str(path))
    assert code == 0
    assert [1, 1] in report['sigma']['rays']
    assert report['certificate']['subdivision_steps'] == 1
    assert report['certificate']['refines_input'] is None


def test_resolve_malformed_fan(capsys, tmp_path):
    path = tmp_path / 'broken.json'
    path.write_text('{"dim": 2, "rays": [[1, 0]]')
    code, report = _run(capsys, 'resolve', '--fan', str(path))
    assert code == consts.ExitCodes.InputError
    assert report['error_type'] == 'FanError'

    code, report = _run(capsys, 'resolve', '--fan', str(tmp_path / 'missing.json'))
    assert code == consts.ExitCodes.InputError


def test_extend(capsys):
    deformation = 'x1^2 + x2^2 + x3^2 + x4'
    code, report = _run(capsys, 'extend', '--deformation', deformation, '--form', 'x1*x2*x3')
    assert code == 0
    assert report['pass']
    assert any(r['ray'] == [1, 1, 1, 2] for r in report['rays'])

    code, report = _run(capsys, 'extend', '--deformation', deformation, '--extension', '1')
    assert code == consts.ExitCodes.VerificationFailed
    assert not report['pass']

    code, report = _run(capsys, 'extend', '--deformation', deformation, '--poly', 'x1^2 + x2^2 + x3^3',
                        '--form', 'x1*x2*x3')
    assert code == consts.ExitCodes.InputError
    assert report['error_type'] == 'PreconditionError'


def test_check_plane_cubic(capsys):
    code, report = _run(capsys, 'check', '--poly', PLANE_CUBIC, *CHECK_ARGS)
    assert code == 0
    entry = report['polynomials'][0]
    assert entry['nondegeneracy']['status'] == consts.VerdictStatus.Nondegenerate
    assert entry['within_hypothesis']
    assert entry['failures'] == []
    assert report['rounding']['passed']


def _override_config(monkeypatch, overrides):
    original = CheckCommand.config_value

    def config_value(self, section, name=None, default=None):
        if (section, name) in overrides:
            return overrides[(section, name)]
        return original(self, section, name, default=default)

    monkeypatch.setattr(CheckCommand, 'config_value', config_value)


def test_check_degenerate_runs_every_sweep(capsys):
    code, report = _run(capsys, 'check', '--poly', DEGENERATE, *CHECK_ARGS)
    assert code == 0
    entry = report['polynomials'][0]
    assert entry['nondegeneracy']['status'] == consts.VerdictStatus.Degenerate
    assert not entry['within_hypothesis']
    assert entry['lemma1'] and entry['lemma2'] and entry['lemma3']
    assert entry['failures'] == []


def test_check_fails_on_degenerate_when_map_is_not_injective(capsys, monkeypatch):
    class NotInjective(object):
        def to_json(self):
            return {'injective': False}

    monkeypatch.setattr(filtration, 'lemma1_verify', lambda *args, **kwargs: NotInjective())
    code, report = _run(capsys, 'check', '--poly', DEGENERATE, *CHECK_ARGS)
    assert code == consts.ExitCodes.VerificationFailed
    assert 'lemma1' in report['polynomials'][0]['failures']


def test_check_vertex_contact(capsys):
    code, report = _run(capsys, 'check', '--poly', SUSPENSION, *CHECK_ARGS)
    assert code == 0
    entry = report['polynomials'][0]
    assert entry['contact_rule'] == consts.ContactRules.Vertex
    assert entry['contact_divergence'] == [2, 3]
    assert not any(entry['slab'].values())
    assert entry['failures'] == []


def test_check_facet_rule_reports_slab_failures(capsys, monkeypatch):
    _override_config(monkeypatch, {('polyhedral', 'contact_rule'): consts.ContactRules.Facet})
    code, report = _run(capsys, 'check', '--poly', SUSPENSION, '--axis', '2', *CHECK_ARGS)
    assert code == consts.ExitCodes.VerificationFailed
    entry = report['polynomials'][0]
    assert ['1', '1', '0'] in entry['slab']['2']
    assert 'slab' in entry['failures']


def test_check_subdivision_cap(capsys, monkeypatch):
    _override_config(monkeypatch, {('fan', 'subdivision_cap'): 1})
    code, report = _run(capsys, 'check', '--poly', BRIESKORN, *CHECK_ARGS)
    assert code == consts.ExitCodes.InputError
    assert report['error_type'] == 'SubdivisionCapError'


def test_check_is_deterministic(tmp_path):
    outputs = list()
    for name in ('first.json', 'second.json'):
        path = tmp_path / name
        code = cli.main(['--seed', '5', '--output', str(path), 'check', '--poly', PLANE_CUBIC] + CHECK_ARGS)
        assert code == 0
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1]


def test_check_corpus_file(capsys, tmp_path):
    path = tmp_path / 'corpus.txt'
    path.write_text('# plane curves\n{}\n\nx1^2 + x2^3  # cusp\n'.format(PLANE_CUBIC))
    code, report = _run(capsys, 'check', '--corpus', str(path), *CHECK_ARGS)
    assert code == 0
    assert [entry['polynomial'] for entry in report['polynomials']] == ['x1^3 + x2^3 + x1*x2', 'x2^3 + x1^2']


def test_check_empty_corpus(capsys, tmp_path):
    path = tmp_path / 'empty.txt'
    path.write_text('# nothing here\n\n')
    code, report = _run(capsys, 'check', '--corpus', str(path))
    assert code == consts.ExitCodes.InputError
    assert report['error_type'] == 'CommandCancel'


def test_check_rejects_bad_bounds(capsys):
    code, report = _run(capsys, 'check', '--poly', PLANE_CUBIC, '--max-k', '0')
    assert code == consts.ExitCodes.InputError
