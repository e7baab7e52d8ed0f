'''
Tau-function series from the single W-constraint L0 tau = W tau, from the
cut-and-join exponentials, and comparisons between engines.
'''

import logging
from fractions import Fraction

from . import fermion
from .cut_and_join import exponential_series
from .errors import EngineError
from .fock import QPolynomial, grade_decompose, format_monomial
from .graded import apply_component, apply_graded, build_w_operator
from .models import Model
from .nodes import L, apply_node

logger = logging.getLogger(__name__)

ENGINES = ('nodes', 'fermionic', 'cutjoin')


class TauSeries(object):
    '''
    Truncated tau-function: components[d] is the homogeneous grade-d part.
    With hbar=False the h^d of each component is implicit in its grade.
    '''
    def __init__(self, model, degree, components, engine, hbar=False):
        self.model = Model.parse(model) if model is not None else None
        self.degree = int(degree)
        self.components = dict(
            (d, P) for d, P in components.items() if P and d <= self.degree)
        self.engine = engine
        self.hbar = hbar

    def component(self, d):
        return self.components.get(d, QPolynomial(cutoff=self.degree))

    def grades(self):
        return sorted(self.components)

    def total(self):
        result = QPolynomial(cutoff=self.degree)
        for d in self.grades():
            result = result + self.components[d]
        return result

    def with_hbar(self):
        '''
        Reinstate h: component d picks up h^d.
        '''
        if self.hbar:
            return self
        return TauSeries(
            self.model, self.degree,
            dict((d, P.shift_h(d)) for d, P in self.components.items()),
            self.engine, hbar=True)

    def substitute(self, bindings):
        return TauSeries(
            self.model, self.degree,
            dict((d, P.substitute(bindings))
                 for d, P in self.components.items()),
            self.engine, self.hbar)

    def only_even_in_n(self):
        return all(c.only_even_in_n() for P in self.components.values()
                   for c in P.coefficients())

    def __eq__(self, other):
        if not isinstance(other, TauSeries):
            return NotImplemented
        return (self.model, self.degree, self.hbar) == \
            (other.model, other.degree, other.hbar) and \
            self.components == other.components

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __str__(self):
        return str(self.total())

    def to_json(self):
        return {
            'model': str(self.model) if self.model else None,
            'degree': self.degree,
            'engine': self.engine,
            'hbar': self.hbar,
            'components': [
                {'grade': d, 'terms': self.components[d].to_json()}
                for d in self.grades()],
        }

    @classmethod
    def from_json(cls, record):
        degree = record['degree']
        return cls(
            record['model'], degree,
            dict((c['grade'], QPolynomial.from_json(c['terms'], degree))
                 for c in record['components']),
            record.get('engine'), record.get('hbar', False))


def _check_grades(W):
    bad = [k for k in W.grades() if k < 1]
    if bad:
        raise EngineError(
            'W has components at grades {}; the recursion needs every '
            'component to raise the grade.'.format(bad))


def oe_solve(W, degree, threads=None, convention=None, model=None,
             engine='nodes'):
    '''
    Solve d tau_d = sum_k W[k] tau_{d-k} with tau_0 = 1, the graded form of
    the ordered exponential acting on 1.
    '''
    _check_grades(W)
    degree = int(degree)
    if degree < 0:
        raise EngineError('degree must be >= 0, not {}.'.format(degree))
    if W.uses_fermions and convention is None:
        convention = fermion.ensure_calibrated()
    components = {0: QPolynomial.one(degree)}
    for d in range(1, degree + 1):
        total = QPolynomial(cutoff=degree)
        for k in W.grades():
            if k > d or d - k not in components:
                continue
            total = total + apply_component(
                W.components[k], components[d - k], threads, convention)
        if total:
            components[d] = total.scale(Fraction(1, d))
        logger.debug('Grade %d: %d terms.', d, len(total.terms))
    return TauSeries(model or W.label, degree, components, engine)


def cut_and_join_exp(model, degree):
    model = Model.parse(model)
    total = exponential_series(model, int(degree), cutoff=int(degree))
    return TauSeries(model, degree, grade_decompose(total), 'cutjoin')


def tau_model(model, engine, degree, threads=None, convention=None):
    '''
    Dispatch a model to one of the three engines.
    '''
    model = Model.parse(model)
    if engine not in ENGINES:
        raise EngineError('Unknown engine {!r}; choose from {}.'.format(
            engine, ', '.join(ENGINES)))
    if engine in ('nodes', 'cutjoin') and model.kind == 'gkm':
        raise EngineError(
            'The {} engine covers kw and bgw only; use fermionic for {}.'.format(
                engine, model))
    logger.info('Computing %s with the %s engine through grade %d.',
                model, engine, degree)
    if engine == 'cutjoin':
        return cut_and_join_exp(model, degree)
    W = build_w_operator(model, generic=(engine == 'fermionic'))
    return oe_solve(W, degree, threads, convention, model, engine)


def recursion_residual(W, tau, threads=None, convention=None):
    '''
    (L0 - W) tau through grade tau.degree; zero for a solution.
    '''
    if W.uses_fermions and convention is None:
        convention = fermion.ensure_calibrated()
    total = tau.total()
    return (apply_node(L(0), total) -
            apply_graded(W, total, tau.degree, threads, convention)
            ).truncate(tau.degree)


class DiffReport(object):
    '''
    Differences between two series; empty when they agree.
    '''
    def __init__(self, differences):
        self.differences = differences

    def __bool__(self):
        return bool(self.differences)

    __nonzero__ = __bool__

    @property
    def first_grade(self):
        if not self.differences:
            return None
        return self.differences[0][0]

    def to_json(self):
        return [
            {'grade': d, 'monomial': format_monomial(m),
             'left': str(a), 'right': str(b)}
            for d, m, a, b in self.differences]

    def __str__(self):
        if not self.differences:
            return 'identical'
        return '; '.join(
            'grade {}: {} {} != {}'.format(d, format_monomial(m), a, b)
            for d, m, a, b in self.differences)


def series_compare(a, b):
    if a.degree != b.degree:
        raise EngineError('Cannot compare series of degree {} and {}.'.format(
            a.degree, b.degree))
    differences = []
    for d in sorted(set(a.components) | set(b.components)):
        left, right = a.component(d), b.component(d)
        for mono in sorted(set(left.terms) | set(right.terms)):
            x, y = left.coefficient(mono), right.coefficient(mono)
            if x != y:
                differences.append((d, mono, x, y))
    return DiffReport(differences)
