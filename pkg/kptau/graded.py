'''
Grade-raising Fock operators: one component per grade k >= 1, stored either
as a combination of node operators or as a generic D_- symbol acted on by
the fermionic engine.
'''

import logging
from fractions import Fraction

from . import fermion
from .diffop import DiffOp
from .errors import EngineError, NotInSubalgebraError
from .fock import QPolynomial
from .models import Model, generic_symbol
from .nodes import node_action, L, M, Q, alpha
from .parallel import parallel_map
from .scalars import N, ParamPoly, ZERO, render_sum

logger = logging.getLogger(__name__)


class GradedOperator(object):
    '''
    components maps grade k to a list of (ParamPoly, NodeOp) pairs or to a
    DiffOp whose z-powers are all -k.
    '''
    def __init__(self, components, label=None):
        clean = dict()
        for k, component in components.items():
            k = int(k)
            if isinstance(component, DiffOp):
                if component.z_powers() - set([-k]):
                    raise NotInSubalgebraError(
                        'Generic component at grade {} has z-powers {}.'.format(
                            k, sorted(component.z_powers())))
                clean[k] = component
            else:
                pairs = [(ParamPoly.coerce(c), op) for c, op in component
                         if ParamPoly.coerce(c)]
                for _, op in pairs:
                    if op.grade_shift != k:
                        raise EngineError(
                            '{} does not raise the grade by {}.'.format(op, k))
                clean[k] = pairs
        self.components = clean
        self.label = label

    @classmethod
    def from_symbol(cls, a, label=None):
        '''
        Split a D_- symbol into generic per-grade components.
        '''
        a = DiffOp.coerce(a)
        a.require_d_minus('W-operator symbol')
        return cls(a.grade_components(), label)

    def grades(self):
        return sorted(self.components)

    def is_generic(self, k):
        return isinstance(self.components[k], DiffOp)

    @property
    def uses_fermions(self):
        return any(self.is_generic(k) for k in self.components)

    def substitute(self, bindings):
        components = dict()
        for k, component in self.components.items():
            if isinstance(component, DiffOp):
                components[k] = component.substitute(bindings)
            else:
                components[k] = [(c.substitute(bindings), op)
                                 for c, op in component]
        return GradedOperator(components, self.label)

    def component_str(self, k):
        component = self.components[k]
        if isinstance(component, DiffOp):
            return 'W({})'.format(component)
        return render_sum([(c, str(op)) for c, op in component])

    def __str__(self):
        return '; '.join('{}: {}'.format(k, self.component_str(k))
                         for k in self.grades())

    def to_json(self):
        records = []
        for k in self.grades():
            component = self.components[k]
            if isinstance(component, DiffOp):
                records.append({'grade': k, 'symbol': component.to_json()})
            else:
                records.append({'grade': k, 'nodes': [
                    dict(op.to_json(), coeff=str(c)) for c, op in component]})
        return {'label': self.label, 'components': records}


def _apply_nodes_to_monomial(task):
    pairs, mono = task
    image = dict()
    for coeff, op in pairs:
        for target, w in node_action(op.kind, op.index, op.odd_reduced, mono):
            image[target] = image.get(target, ZERO) + coeff * w
    return sorted((m, c) for m, c in image.items() if c)


def apply_component(component, P, threads=None, convention=None):
    if isinstance(component, DiffOp):
        return fermion.apply_generic(component, P, convention, threads)
    monos = sorted(P.terms)
    images = parallel_map(_apply_nodes_to_monomial,
                          [(component, mono) for mono in monos], threads)
    terms = dict()
    for mono, image in zip(monos, images):
        coeff = P.terms[mono]
        for target, weight in image:
            terms[target] = terms.get(target, ZERO) + coeff * weight
    return QPolynomial(terms, P.cutoff)


def apply_graded(W, P, grade_cap, threads=None, convention=None):
    '''
    Sum of every component applied to P, keeping output grades <= grade_cap.
    '''
    total = QPolynomial(cutoff=P.cutoff)
    for k in W.grades():
        if k > grade_cap:
            continue
        source = P.truncate(grade_cap - k)
        if not source:
            continue
        logger.debug('Applying grade-%d component to %d terms.', k,
                     len(source.terms))
        total = total + apply_component(
            W.components[k], source, threads, convention)
    return total


def _kw_components():
    return {
        3: [(Fraction(3, 2), M(-3)), (Fraction(1, 8), alpha(-3))],
        6: [(Fraction(-1, 2), Q(-6)), (Fraction(-21, 40), L(-6))],
    }


def _bgw_components():
    shift = (ParamPoly.const(Fraction(1, 4)) - N * N)
    return {
        1: [(Fraction(3, 4), M(-1)), (shift * Fraction(1, 4), alpha(-1))],
        2: [(Fraction(-1, 8), Q(-2)), (shift * Fraction(-1, 8), L(-2))],
    }


def build_w_operator(model, generic=False):
    '''
    The single W-constraint operator of a model. kw and bgw come as node
    combinations unless generic=True; gkm(n) is always a generic symbol.
    '''
    model = Model.parse(model)
    if generic or model.kind == 'gkm':
        return GradedOperator.from_symbol(generic_symbol(model), str(model))
    if model.kind == 'kw':
        return GradedOperator(_kw_components(), 'kw')
    return GradedOperator(_bgw_components(), 'bgw')

