#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for `kptau.output` and `kptau.config`."""

import json
import os
from fractions import Fraction

import pytest

from kptau import config, output
from kptau.fock import QPolynomial, monomial_from_dict
from kptau.solver import TauSeries
from kptau.verify import ConstraintReport


@pytest.fixture
def tau():
    return TauSeries('kw', 3, {
        0: QPolynomial.one(),
        3: QPolynomial({monomial_from_dict({1: 3}): Fraction(1, 6),
                        monomial_from_dict({3: 1}): Fraction(1, 24)}),
    }, 'cutjoin')


def test_tau_document(tau):
    document = output.tau_document(tau)
    assert document['schema'] == output.SCHEMA_VERSION
    assert document['components'][1] == {'grade': 3, 'terms': [
        {'monomial': {'1': 3}, 'coeff': '1/6'},
        {'monomial': {'3': 1}, 'coeff': '1/24'}]}
    assert output.parse_tau(output.render_json(document)) == tau


def test_parse_rejects_other_schema(tau):
    document = output.tau_document(tau)
    document['schema'] = 99
    with pytest.raises(ValueError):
        output.parse_tau(json.dumps(document))


def test_tau_csv(tau):
    text = output.render_csv(output.tau_rows(tau))
    assert text.splitlines() == [
        'grade,monomial,coeff', '0,1,1', '3,q1^3,1/6', '3,q3,1/24']


def test_report_document():
    reports = [ConstraintReport('a', 3, QPolynomial()),
               ConstraintReport('b', 3, QPolynomial.one())]
    document = output.report_document('x', reports, {'model': 'kw'})
    assert document['pass'] is False
    assert [c['pass'] for c in document['checks']] == [True, False]
    assert document['checks'][1]['residual'] == [
        {'monomial': {}, 'coeff': '1'}]
    assert output.report_rows(reports)[1:] == [('a', 'true', 3),
                                               ('b', 'false', 3)]


def test_write_atomic(tmpdir, tau):
    path = str(tmpdir.join('out', 'tau.json'))
    output.write_atomic(output.render_json(output.tau_document(tau)), path)
    assert output.read_tau(path) == tau
    assert os.listdir(str(tmpdir.join('out'))) == ['tau.json']


def test_default_settings():
    settings = config.read_settings(paths=[], environ={})
    assert settings.threads == 1
    assert settings.seed == 20
    assert settings.format == 'json'
    assert settings.calibration_grade == 6
    assert settings.max_offset == 3


def test_settings_file_and_environment(tmpdir):
    path = tmpdir.join('kptau.cfg')
    path.write('[kptau]\nthreads = 4\nformat = csv\n')
    settings = config.read_settings(
        paths=[str(path)], environ={config.OUTPUT_DIR_ENV: '/tmp/tau'})
    assert settings.threads == 4
    assert settings.format == 'csv'
    assert settings.output_dir == '/tmp/tau'
    assert settings.calibration_grade == 6


def test_settings_reject_bad_format(tmpdir):
    path = tmpdir.join('kptau.cfg')
    path.write('[kptau]\nformat = xml\n')
    with pytest.raises(ValueError):
        config.read_settings(paths=[str(path)], environ={})
