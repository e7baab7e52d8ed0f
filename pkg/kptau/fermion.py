'''
Fermionic engine: the action of W_a for a in D_- on charge-zero states in
the partition basis, and the boson-fermion conversion through Schur
functions.

For a = z^-s P(D) one bead at position x moves to x + s with amplitude
sign * P(x + s + offset) * (-1)^(beads jumped). The pair (offset, sign) is a
convention fixed once by calibrate() against the bosonic node actions.
'''

import logging
from fractions import Fraction
from functools import lru_cache

from .diffop import DiffOp, to_D_form
from .errors import CalibrationError, NotInSubalgebraError
from .fock import QPolynomial, monomials_up_to, monomial_to_partition
from .nodes import NodeOp, apply_node
from .parallel import parallel_map
from .scalars import ParamPoly, ZERO
from .schur import (character_table, format_partition, parse_partition,
                    power_sum_to_schur, schur_to_power_sum, to_beads,
                    from_beads)

logger = logging.getLogger(__name__)


class Convention(object):
    '''
    The calibrated mode offset and overall sign.
    '''
    __slots__ = ('offset', 'sign')

    def __init__(self, offset, sign):
        if sign not in (1, -1):
            raise ValueError('Convention sign must be +1 or -1.')
        self.offset = int(offset)
        self.sign = sign

    def __eq__(self, other):
        return isinstance(other, Convention) and \
            (self.offset, self.sign) == (other.offset, other.sign)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.offset, self.sign))

    def __getstate__(self):
        return (self.offset, self.sign)

    def __setstate__(self, state):
        self.offset, self.sign = state

    def __repr__(self):
        return 'Convention(offset={}, sign={})'.format(self.offset, self.sign)

    def to_json(self):
        return {'offset': self.offset, 'sign': self.sign}


_CONVENTION = None


def current_convention():
    return _CONVENTION


def set_convention(convention):
    global _CONVENTION
    _CONVENTION = convention


def reset_convention():
    set_convention(None)


class FermionState(object):
    '''
    Finite combination of partition states |lambda> with ParamPoly
    coefficients.
    '''
    __slots__ = ('terms',)

    def __init__(self, terms=None):
        clean = dict()
        if terms:
            for shape, coeff in terms.items():
                coeff = ParamPoly.coerce(coeff)
                if coeff:
                    clean[tuple(shape)] = coeff
        self.terms = clean

    @classmethod
    def vacuum(cls):
        return cls({(): 1})

    @classmethod
    def basis(cls, shape, coeff=1):
        return cls({tuple(shape): coeff})

    def __bool__(self):
        return bool(self.terms)

    __nonzero__ = __bool__

    def __eq__(self, other):
        return isinstance(other, FermionState) and self.terms == other.terms

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __add__(self, other):
        terms = dict(self.terms)
        for shape, coeff in other.terms.items():
            terms[shape] = terms.get(shape, ZERO) + coeff
        return FermionState(terms)

    def scale(self, factor):
        factor = ParamPoly.coerce(factor)
        return FermionState(
            dict((s, c * factor) for s, c in self.terms.items()))

    def grades(self):
        return sorted(set(sum(shape) for shape in self.terms))

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda item: (sum(item[0]), tuple(
                          -p for p in item[0])))

    def __str__(self):
        if not self.terms:
            return '0'
        return ' + '.join('({})|{}>'.format(c, format_partition(s))
                          for s, c in self.sorted_terms())

    def to_json(self):
        return [{'partition': format_partition(s), 'coeff': str(c)}
                for s, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, records):
        return cls(dict(
            (parse_partition(r['partition']), ParamPoly.parse(r['coeff']))
            for r in records))


def _evaluate(poly, t):
    total = ZERO
    for m, c in poly.items():
        total = total + c * (Fraction(t) ** m)
    return total


def _bead_moves(shape, s):
    '''
    (target position, sign, new shape) for every admissible move by s.
    '''
    beads = to_beads(shape, len(shape) + s)
    occupied = set(beads)
    moves = []
    for x in beads:
        if x + s in occupied:
            continue
        jumped = sum(1 for y in beads if x < y < x + s)
        moved = [y for y in beads if y != x] + [x + s]
        moves.append((x + s, -1 if jumped % 2 else 1, from_beads(moved)))
    return moves


def _require_convention(convention):
    if convention is None:
        convention = _CONVENTION
    if convention is None:
        raise CalibrationError(
            'The fermionic engine is not calibrated; run calibrate() first.')
    return convention


def onebody_apply(a, state, convention=None):
    '''
    W_a |state> for a in D_-.
    '''
    a = DiffOp.coerce(a)
    a.require_d_minus('W-operator symbol')
    convention = _require_convention(convention)
    result = dict()
    for s, part in sorted(a.grade_components().items()):
        poly = part.d_polynomial(-s)
        for shape, coeff in state.terms.items():
            for target, sign, bigger in _bead_moves(shape, s):
                amplitude = _evaluate(poly, target + convention.offset)
                if not amplitude:
                    continue
                value = coeff * amplitude * (sign * convention.sign)
                result[bigger] = result.get(bigger, ZERO) + value
    return FermionState(result)


@lru_cache(maxsize=None)
def _schur_terms(shape):
    return tuple(sorted(schur_to_power_sum(shape).items()))


@lru_cache(maxsize=None)
def _monomial_in_schur(mono):
    return tuple(sorted(power_sum_to_schur(monomial_to_partition(mono)).items()))


def fermion_to_boson(state, cutoff=None):
    '''
    |lambda> -> s_lambda(q) with q_k read as the power sums p_k.
    '''
    terms = dict()
    for shape, coeff in state.terms.items():
        for mono, weight in _schur_terms(shape):
            terms[mono] = terms.get(mono, ZERO) + coeff * weight
    return QPolynomial(terms, cutoff)


def boson_to_fermion(P):
    '''
    Expand every power-sum monomial p_mu in the Schur basis.
    '''
    terms = dict()
    for mono, coeff in P.terms.items():
        for shape, chi in _monomial_in_schur(mono):
            terms[shape] = terms.get(shape, ZERO) + coeff * chi
    return FermionState(terms)


def _apply_to_monomial(task):
    a, mono, convention = task
    state = FermionState(dict(
        (shape, chi) for shape, chi in _monomial_in_schur(mono)))
    return sorted(fermion_to_boson(
        onebody_apply(a, state, convention)).terms.items())


def apply_generic(a, P, convention=None, threads=None):
    '''
    The bosonized action of W_a on a QPolynomial, one monomial per task.
    '''
    convention = _require_convention(convention)
    a = DiffOp.coerce(a)
    a.require_d_minus('W-operator symbol')
    monos = sorted(P.terms)
    images = parallel_map(
        _apply_to_monomial, [(a, mono, convention) for mono in monos],
        threads)
    terms = dict()
    for mono, image in zip(monos, images):
        coeff = P.terms[mono]
        for target, weight in image:
            terms[target] = terms.get(target, ZERO) + coeff * weight
    return QPolynomial(terms, P.cutoff)


def node_symbol(op):
    '''
    The D-algebra symbol a with W_a equal to the node operator.
    '''
    n = op.index
    if op.kind == 'alpha':
        return DiffOp.monomial(n, 0, -1)
    if op.kind == 'L':
        return -to_D_form(n + 1, 1) - DiffOp.monomial(n, 0, Fraction(n + 1, 2))
    if op.kind == 'M':
        return -to_D_form(n + 2, 2) \
            - to_D_form(n + 1, 1) * (n + 2) \
            - DiffOp.monomial(n, 0, Fraction((n + 1) * (n + 2), 6))
    return -to_D_form(n + 3, 3) \
        - to_D_form(n + 2, 2) * Fraction(3 * (n + 3), 2) \
        - to_D_form(n + 1, 1) * Fraction(3 * (n + 2) * (n + 3), 5) \
        - DiffOp.monomial(n, 0, Fraction((n + 1) * (n + 2) * (n + 3), 20))


_SPIN_OF_DEGREE = {0: 'alpha', 1: 'L', 2: 'M', 3: 'Q'}


def decompose_symbol(a):
    '''
    Rewrite a in D_- with D-degree <= 3 as node symbols:
    {grade s: [(coeff, NodeOp at index -s), ...]} with the spin-4 node first.
    '''
    a = DiffOp.coerce(a)
    a.require_d_minus('symbol')
    result = dict()
    for s, part in sorted(a.grade_components().items()):
        remainder = part
        combination = []
        top = max(m for _, m in part.terms)
        if top > 3:
            raise NotInSubalgebraError(
                'z^-{} part has D-degree {}; nodes stop at spin 4.'.format(
                    s, top))
        for m in range(top, -1, -1):
            lead = remainder.d_polynomial(-s).get(m, ZERO)
            if not lead:
                continue
            op = NodeOp(_SPIN_OF_DEGREE[m], -s)
            coeff = -lead
            combination.append((coeff, op))
            remainder = remainder - node_symbol(op) * coeff
        if remainder:
            raise NotInSubalgebraError(
                'Leftover {} after node decomposition.'.format(remainder))
        result[s] = combination
    return result


def w_image(a):
    '''
    The bosonic W-image of a, as node combinations per grade.
    '''
    return decompose_symbol(a)


class CalibrationReport(object):
    '''
    Outcome of calibrate(): the chosen convention, the number of identities
    checked for it and the first failure of every rejected candidate.
    '''
    def __init__(self, convention, checks, rejected, grade):
        self.convention = convention
        self.checks = checks
        self.rejected = rejected
        self.grade = grade

    def to_json(self):
        return {
            'convention': self.convention.to_json(),
            'grade': self.grade,
            'checks': self.checks,
            'rejected': [
                {'offset': c.offset, 'sign': c.sign, 'failure': failure}
                for c, failure in self.rejected],
        }


def calibration_identities(grade):
    '''
    (label, symbol, node) triples, Heisenberg first so the sign is fixed
    before any offset-dependent identity runs.
    '''
    identities = []
    for k in range(1, grade + 1):
        op = NodeOp('alpha', -k)
        identities.append(
            ('W(-z^-{}) = q{}'.format(k, k), node_symbol(op), op))
    for kind in ('L', 'M', 'Q'):
        for n in range(-1, -7, -1):
            op = NodeOp(kind, n)
            identities.append(
                ('W({}) = {}'.format(node_symbol(op), op), node_symbol(op),
                 op))
    return identities


def _first_failure(convention, identities, states):
    checks = 0
    for label, symbol, op in identities:
        for mono in states:
            P = QPolynomial.from_monomial(mono)
            fermionic = fermion_to_boson(
                onebody_apply(symbol, boson_to_fermion(P), convention))
            if fermionic != apply_node(op, P):
                return checks, '{} fails on {}'.format(label, P)
            checks += 1
    return checks, None


def calibrate(grade=6, max_offset=3):
    '''
    Fix the mode offset and sign by matching W of the node symbols with the
    bosonic node actions on every monomial of grade <= `grade`. The chosen
    convention becomes the module default.
    '''
    identities = calibration_identities(grade)
    states = monomials_up_to(grade)
    rejected = []
    for sign in (-1, 1):
        for offset in sorted(range(-max_offset, max_offset + 1), key=abs):
            candidate = Convention(offset, sign)
            checks, failure = _first_failure(candidate, identities, states)
            if failure is None:
                set_convention(candidate)
                logger.info('Calibrated fermionic convention %r after %d '
                            'checks.', candidate, checks)
                return CalibrationReport(candidate, checks, rejected, grade)
            logger.debug('Rejected %r: %s.', candidate, failure)
            rejected.append((candidate, failure))
    first = rejected[0][1] if rejected else 'no candidates'
    raise CalibrationError(
        'No fermionic convention reproduces the node actions; first failure: '
        '{}.'.format(first))


def ensure_calibrated(grade=6, max_offset=3):
    '''
    Return the current convention, calibrating on first use.
    '''
    if _CONVENTION is None:
        calibrate(grade, max_offset)
    return _CONVENTION


__all__ = [
    'Convention', 'FermionState', 'CalibrationReport', 'onebody_apply',
    'apply_generic', 'fermion_to_boson', 'boson_to_fermion', 'calibrate',
    'ensure_calibrated', 'node_symbol', 'decompose_symbol', 'w_image',
    'character_table', 'current_convention', 'reset_convention',
]
