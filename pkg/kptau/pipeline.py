'''
Run one CLI command from a RunConfig: compute, verify, render, write.
'''

import logging
import os
import random
from fractions import Fraction

from . import fermion, output
from .diffop import DiffOp, diffop_adjoint, diffop_mul, laurent_mul, residue
from .errors import EngineError
from .fock import QPolynomial
from .grassmannian import miwa_crosscheck, model_basis, verify_basis
from .models import Model, build_model_ops, generic_symbol
from .graded import build_w_operator
from .parallel import set_threads
from .solver import recursion_residual, series_compare, tau_model
from .verify import (ConstraintReport, LaurentResidual,
                     check_cut_and_join_constraint, check_hirota_kp,
                     check_kac_schwarz, check_reduction,
                     check_sec5_identities, check_virasoro)

logger = logging.getLogger(__name__)

COMMANDS = ('tau', 'verify', 'ops', 'grassmannian')
SUITES = ('virasoro', 'hirota', 'reduction', 'sec5', 'miwa', 'cutjoin',
          'kacschwarz', 'engines', 'recursion', 'algebra')
FORMATS = ('json', 'csv', 'text')

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INCONSISTENT = 3


class RunConfig(object):
    '''
    Everything one command needs; built by the CLI from flags and kptau.cfg.
    '''
    def __init__(self, command, model='kw', engine=None, degree=6, order=8,
                 count=4, bindings=None, out_format='json', output=None,
                 threads=1, seed=20, hbar=False, suites=None, which=None,
                 calibration_grade=6, max_offset=3):
        if command not in COMMANDS:
            raise EngineError('Unknown command {!r}.'.format(command))
        if int(degree) < 0:
            raise EngineError('degree must be >= 0.')
        if out_format not in FORMATS:
            raise EngineError('Unknown output format {!r}.'.format(out_format))
        self.command = command
        self.model = Model.parse(model)
        self.engine = engine or default_engine(self.model)
        self.degree = int(degree)
        self.order = int(order)
        self.count = int(count)
        self.bindings = bindings or dict()
        self.out_format = out_format
        self.output = output
        self.threads = int(threads)
        self.seed = int(seed)
        self.hbar = hbar
        self.suites = list(suites or default_suites(self.model))
        for suite in self.suites:
            if suite not in SUITES:
                raise EngineError('Unknown suite {!r}; choose from {}.'.format(
                    suite, ', '.join(SUITES)))
        self.which = which
        self.calibration_grade = calibration_grade
        self.max_offset = max_offset


def default_engine(model):
    return 'fermionic' if model.kind == 'gkm' else 'nodes'


def default_suites(model):
    if model.kind == 'gkm':
        return ['reduction', 'hirota', 'miwa']
    return ['virasoro', 'hirota', 'reduction', 'sec5', 'miwa']


def _render(config, document, rows):
    if config.out_format == 'csv':
        return output.render_csv(rows)
    return output.render_json(document)


def _tau(config):
    return tau_model(config.model, config.engine, config.degree,
                     config.threads)


def run_tau(config):
    tau = _tau(config)
    if config.bindings:
        tau = tau.substitute(config.bindings)
    if config.hbar:
        tau = tau.with_hbar()
    if config.out_format == 'text':
        text = ''.join('{}: {}\n'.format(d, tau.components[d])
                       for d in tau.grades())
    else:
        text = _render(config, output.tau_document(tau), output.tau_rows(tau))
    return EXIT_OK, text


def run_ops(config):
    ops = build_model_ops(config.model).as_dict()
    ops['W'] = generic_symbol(config.model)
    if config.which and config.which != 'all':
        if config.which not in ops:
            raise EngineError('No operator {!r}; choose from {}.'.format(
                config.which, ', '.join(sorted(ops))))
        ops = {config.which: ops[config.which]}
    if config.bindings:
        ops = dict((k, v.substitute(config.bindings)) for k, v in ops.items())
    if config.out_format == 'text':
        if len(ops) == 1:
            return EXIT_OK, '{}\n'.format(list(ops.values())[0])
        return EXIT_OK, ''.join('{} = {}\n'.format(name, ops[name])
                                for name in sorted(ops))
    return EXIT_OK, _render(
        config, output.operators_document(config.model, ops),
        output.operator_rows(ops))


def run_grassmannian(config):
    basis = model_basis(config.model, config.count, config.order,
                        config.bindings)
    b = generic_symbol(config.model)
    if config.bindings:
        b = b.substitute(config.bindings)
    relation = verify_basis(b, basis)
    status = EXIT_OK if relation.passed else EXIT_FAILED
    if config.out_format == 'text':
        text = ''.join('Phi_{} = {}\n'.format(v.index, v) for v in basis)
    else:
        text = _render(
            config,
            output.basis_document(config.model, basis,
                                  {'relation': relation.to_json()}),
            output.basis_rows(basis))
    return status, text


def random_diffop(rng, size=4, span=3):
    terms = dict()
    for _ in range(size):
        key = (rng.randint(-span, span), rng.randint(0, 2))
        terms[key] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    return DiffOp(terms)


def random_laurent(rng, span=12):
    return dict((p, Fraction(rng.randint(-3, 3)))
                for p in range(-span, span + 1) if rng.random() < 0.5)


def check_algebra(seed, trials=20, span=12):
    '''
    Residue pairing, involution and anti-automorphism of the adjoint on
    seeded random operators.
    '''
    rng = random.Random(seed)
    failures = dict()
    for trial in range(trials):
        a, b = random_diffop(rng), random_diffop(rng)
        f, g = random_laurent(rng, span), random_laurent(rng, span)
        left = residue(laurent_mul(f, a.apply_to_laurent(g)))
        right = residue(laurent_mul(g, diffop_adjoint(a).apply_to_laurent(f)))
        if left != right:
            failures[(trial, 'pairing')] = {-1: left - right}
        if diffop_adjoint(diffop_adjoint(a)) != a:
            failures[(trial, 'involution')] = {0: 1}
        if diffop_adjoint(diffop_mul(a, b)) != \
                diffop_mul(diffop_adjoint(b), diffop_adjoint(a)):
            failures[(trial, 'anti-automorphism')] = {0: 1}
    return ConstraintReport('algebra[seed={}]'.format(seed), trials,
                            LaurentResidual(failures))


def _engine_reports(config, tau):
    reports = []
    engines = ['fermionic'] if config.model.kind == 'gkm' else \
        ['nodes', 'fermionic', 'cutjoin']
    for engine in engines:
        if engine == tau.engine:
            continue
        other = tau_model(config.model, engine, config.degree, config.threads)
        if config.bindings:
            other = other.substitute(config.bindings)
        diff = series_compare(tau, other)
        residual = QPolynomial(dict(
            (mono, x - y) for _, mono, x, y in diff.differences))
        reports.append(ConstraintReport(
            'engines[{}={}]'.format(tau.engine, engine), config.degree,
            residual))
    return reports


def run_verify(config):
    tau = _tau(config)
    if config.bindings:
        tau = tau.substitute(config.bindings)
    reports = []
    for suite in config.suites:
        logger.info('Running suite %s.', suite)
        if suite == 'virasoro':
            reports.extend(check_virasoro(tau))
        elif suite == 'hirota':
            reports.append(check_hirota_kp(tau))
        elif suite == 'reduction':
            r = 2 if config.model.kind != 'gkm' else config.model.n + 1
            reports.append(check_reduction(tau, r))
        elif suite == 'sec5':
            reports.extend(check_sec5_identities(min(config.degree, 9)))
        elif suite == 'miwa':
            basis = model_basis(config.model, 1, config.degree,
                                config.bindings)
            reports.append(miwa_crosscheck(tau, basis, config.degree))
        elif suite == 'cutjoin':
            reports.append(check_cut_and_join_constraint(tau))
        elif suite == 'kacschwarz':
            reports.append(check_kac_schwarz(tau, config.threads))
        elif suite == 'engines':
            reports.extend(_engine_reports(config, tau))
        elif suite == 'recursion':
            W = build_w_operator(config.model,
                                 generic=(config.engine == 'fermionic'))
            if config.bindings:
                W = W.substitute(config.bindings)
            residual = recursion_residual(W, tau, config.threads)
            reports.append(ConstraintReport('recursion', tau.degree, residual))
        elif suite == 'algebra':
            reports.append(check_algebra(config.seed))
    document = output.report_document(
        ','.join(config.suites), reports,
        {'model': str(config.model), 'degree': config.degree,
         'engine': config.engine})
    status = EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED
    for report in reports:
        if not report.passed:
            logger.error('Check %s failed.', report.check_id)
    if config.out_format == 'text':
        text = ''.join('{}\t{}\n'.format(r.check_id,
                                         'pass' if r.passed else 'FAIL')
                       for r in reports)
    else:
        text = _render(config, document, output.report_rows(reports))
    return status, text


_RUNNERS = {
    'tau': run_tau,
    'verify': run_verify,
    'ops': run_ops,
    'grassmannian': run_grassmannian,
}


def run(config):
    '''
    Execute the command; returns (exit status, rendered text). With an output
    path the text is written atomically and the path returned instead.
    '''
    set_threads(config.threads)
    if config.command in ('tau', 'verify') and (
            config.engine == 'fermionic' or 'engines' in config.suites):
        fermion.ensure_calibrated(config.calibration_grade, config.max_offset)
    status, text = _RUNNERS[config.command](config)
    if config.output:
        path = output.write_atomic(text, config.output)
        logger.info('Wrote %s.', os.path.abspath(path))
        return status, None
    return status, text
