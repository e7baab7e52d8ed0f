'''
JSON and CSV artifacts. JSON is canonical (schema version 1); CSV tables are
flattened from the same records.
'''

import csv
import io
import json
import os
import tempfile

from .fock import format_monomial, monomial_grade
from .solver import TauSeries

SCHEMA_VERSION = 1


def tau_document(tau):
    document = tau.to_json()
    document['schema'] = SCHEMA_VERSION
    return document


def report_document(suite, reports, extra=None):
    document = {
        'schema': SCHEMA_VERSION,
        'suite': suite,
        'pass': all(r.passed for r in reports),
        'checks': [r.to_json() for r in reports],
    }
    if extra:
        document.update(extra)
    return document


def operators_document(model, operators):
    return {
        'schema': SCHEMA_VERSION,
        'model': str(model),
        'operators': dict(
            (name, {'text': str(op), 'terms': op.to_json()})
            for name, op in operators.items()),
    }


def basis_document(model, basis, extra=None):
    document = {
        'schema': SCHEMA_VERSION,
        'model': str(model),
        'basis': [vector.to_json() for vector in basis],
    }
    if extra:
        document.update(extra)
    return document


def tau_rows(tau):
    rows = [('grade', 'monomial', 'coeff')]
    for d in tau.grades():
        for mono, coeff in tau.components[d].sorted_terms():
            rows.append((monomial_grade(mono), format_monomial(mono),
                         str(coeff)))
    return rows


def report_rows(reports):
    rows = [('id', 'pass', 'max_grade')]
    for report in reports:
        rows.append((report.check_id, 'true' if report.passed else 'false',
                     report.max_grade))
    return rows


def operator_rows(operators):
    rows = [('operator', 'z', 'D', 'coeff')]
    for name, op in operators.items():
        for (n, m), coeff in op.sorted_terms():
            rows.append((name, n, m, str(coeff)))
    return rows


def basis_rows(basis):
    rows = [('index', 'power', 'coeff')]
    for vector in basis:
        for p in sorted(vector.coefficients, reverse=True):
            rows.append((vector.index, p, str(vector.coefficients[p])))
    return rows


def render_json(document):
    return json.dumps(document, indent=2, sort_keys=True) + '\n'


def render_csv(rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue()


def write_atomic(text, path):
    '''
    Write through a temporary file in the target directory so a failed run
    never leaves a partial artifact.
    '''
    directory = os.path.dirname(os.path.abspath(path))
    if not os.path.isdir(directory):
        os.makedirs(directory)
    handle, temp_path = tempfile.mkstemp(dir=directory, suffix='.tmp')
    try:
        with os.fdopen(handle, 'w') as OUT:
            OUT.write(text)
        os.replace(temp_path, path)
    except BaseException:
        if os.path.exists(temp_path):
            os.remove(temp_path)
        raise
    return path


def parse_tau(text):
    '''
    Read a tau JSON document back into a TauSeries.
    '''
    document = json.loads(text)
    if document.get('schema', SCHEMA_VERSION) != SCHEMA_VERSION:
        raise ValueError('Unsupported tau schema {}.'.format(
            document.get('schema')))
    return TauSeries.from_json(document)


def read_tau(path):
    with open(path) as f:
        return parse_tau(f.read())
