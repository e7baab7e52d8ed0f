'''
Independent checks on tau series and on the odd-reduced operator identities.
Every check returns a ConstraintReport whose residual must vanish exactly.
'''

import logging
from fractions import Fraction
from math import factorial

from .cut_and_join import bgw_constant, d_tilde, join_sum, w_bgw, w_kw
from .errors import ConventionError, EngineError, NotInSubalgebraError
from .fermion import decompose_symbol
from .fock import QPolynomial, monomial_from_dict, monomials_up_to
from .graded import GradedOperator, apply_graded
from .models import Model, build_model_ops, strip_hbar
from .nodes import L, M, Q, apply_node

logger = logging.getLogger(__name__)


class ConstraintReport(object):
    '''
    Outcome of one exact check; passed iff the residual is identically 0.
    '''
    def __init__(self, check_id, max_grade, residual, details=None):
        self.check_id = check_id
        self.max_grade = max_grade
        self.residual = residual
        self.details = details or dict()

    @property
    def passed(self):
        return not self.residual

    def to_json(self):
        record = {'id': self.check_id, 'pass': self.passed,
                  'max_grade': self.max_grade}
        if not self.passed:
            record['residual'] = self.residual.to_json()
        if self.details:
            record['details'] = self.details
        return record

    def __repr__(self):
        return 'ConstraintReport({}, {})'.format(
            self.check_id, 'pass' if self.passed else 'FAIL')


class LaurentResidual(object):
    '''
    Residual of a Laurent-series check: {label: {power: coefficient}}.
    '''
    def __init__(self, parts):
        self.parts = dict((k, v) for k, v in parts.items() if v)

    def __bool__(self):
        return bool(self.parts)

    __nonzero__ = __bool__

    def to_json(self):
        return dict(
            (str(label), dict((str(p), str(c)) for p, c in sorted(v.items())))
            for label, v in sorted(self.parts.items()))


def _zero(cutoff=None):
    return QPolynomial(cutoff=cutoff)


def _virasoro_terms(model, m):
    '''
    (scale, k, const) with the constraint scale L_2m - k d/dq_k + const.
    '''
    if model.kind == 'kw':
        if m < -1:
            raise EngineError('kw Virasoro constraints start at m = -1.')
        return 1, 2 * m + 3, Fraction(1, 8) if m == 0 else 0
    if model.kind == 'bgw':
        if m < 0:
            raise EngineError('bgw Virasoro constraints start at m = 0.')
        return Fraction(1, 2), 2 * m + 1, bgw_constant() if m == 0 else 0
    raise EngineError('No Virasoro constraints implemented for {}.'.format(
        model))


def check_virasoro(tau, model=None, m_range=None):
    '''
    For every output grade e inside the truncation:
    kw:  L_2m tau_(e+2m) - (2m+3) dq_(2m+3) tau_(e+2m+3) + [m=0]/8 tau_e
    bgw: 1/2 L_2m tau_(e+2m) - (2m+1) dq_(2m+1) tau_(e+2m+1)
         + [m=0](1/16 - N^2/4) tau_e
    '''
    model = Model.parse(model or tau.model)
    if m_range is None:
        first = -1 if model.kind == 'kw' else 0
        m_range = [m for m in range(first, 4)
                   if _virasoro_terms(model, m)[1] <= tau.degree]
    reports = []
    for m in m_range:
        scale, k, constant = _virasoro_terms(model, m)
        top = tau.degree - k
        if top < 0:
            raise EngineError(
                'Virasoro m={} needs degree >= {}; the series stops at '
                '{}.'.format(m, k, tau.degree))
        residual = _zero()
        for e in range(0, top + 1):
            out = apply_node(L(2 * m), tau.component(e + 2 * m)).scale(scale)
            out = out - tau.component(e + k).derivative(k).scale(k)
            if constant:
                out = out + tau.component(e).scale(constant)
            residual = residual + out
        report = ConstraintReport(
            'virasoro[m={}]'.format(m), top, residual)
        logger.info('%s on %s through output grade %d: %s', report.check_id,
                    model, top, 'pass' if report.passed else 'FAIL')
        reports.append(report)
    return reports


def dt(P, k):
    '''
    d/dt_k with t_k = q_k / k.
    '''
    return P.derivative(k).scale(k)


def hirota_residual(P, max_grade):
    '''
    Half of (D1^4 + 3 D2^2 - 4 D1 D3) tau.tau, through max_grade.
    '''
    t1 = dt(P, 1)
    t11 = dt(t1, 1)
    t111 = dt(t11, 1)
    t1111 = dt(t111, 1)
    t2 = dt(P, 2)
    t22 = dt(t2, 2)
    t3 = dt(P, 3)
    t13 = dt(t3, 1)
    residual = P * t1111 - (t1 * t111).scale(4) + (t11 * t11).scale(3) \
        + (P * t22).scale(3) - (t2 * t2).scale(3) \
        - (P * t13).scale(4) + (t1 * t3).scale(4)
    return residual.truncate(max_grade)


def _exp_q1(degree):
    return QPolynomial(dict(
        (monomial_from_dict({1: d}), Fraction(1, factorial(d)))
        for d in range(degree + 1)))


def hirota_self_check(degree=8):
    '''
    The time convention must make exp(q1) and s_(2) = q1^2/2 + q2/2 KP
    tau-functions.
    '''
    schur_two = QPolynomial({monomial_from_dict({1: 2}): Fraction(1, 2),
                             monomial_from_dict({2: 1}): Fraction(1, 2)})
    for label, P in (('exp(q1)', _exp_q1(degree)), ('s_(2)', schur_two)):
        residual = hirota_residual(P, max(degree - 4, 0))
        if residual:
            raise ConventionError(
                'Hirota convention check fails on {}: {}.'.format(
                    label, residual))
    return True


def check_hirota_kp(tau, degree=None):
    degree = tau.degree if degree is None else min(degree, tau.degree)
    hirota_self_check()
    top = degree - 4
    if top < 0:
        raise EngineError('The Hirota check needs degree >= 4.')
    residual = hirota_residual(tau.total().truncate(degree), top)
    return ConstraintReport('hirota-kp', top, residual,
                            {'convention': 't_k = q_k/k'})


def check_reduction(tau, r, expect_zero=None):
    '''
    d tau / dq_(rk) = c_k tau through the truncation, c_k read off grade 0.
    KdV models (kw, bgw, gkm:1) default to expecting every c_k = 0.
    '''
    if r < 2:
        raise EngineError('Reduction order must be >= 2, not {}.'.format(r))
    if expect_zero is None:
        expect_zero = tau.model is not None and tau.model.is_kdv
    residual = _zero()
    constants = dict()
    for j in range(r, tau.degree + 1, r):
        c = tau.component(j).coefficient(monomial_from_dict({j: 1}))
        constants[j] = str(c)
        if expect_zero:
            c = 0
        for e in range(0, tau.degree - j + 1):
            residual = residual + tau.component(e + j).derivative(j) \
                - tau.component(e).scale(c)
    return ConstraintReport(
        'reduction[r={}]'.format(r), tau.degree, residual,
        {'constants': constants})


def _node_sum(pairs, state):
    total = QPolynomial(cutoff=state.cutoff)
    for coeff, apply in pairs:
        total = total + apply(state).scale(coeff)
    return total


def _odd(kind, n):
    return lambda P: apply_node(kind(n, True), P)


def _chain(*ops):
    def run(P):
        for op in reversed(ops):
            P = op(P)
        return P
    return run


def _dt_odd(k):
    return lambda P: d_tilde(P, k)


def _constant_times(mono_exponents, coeff=1):
    mono = QPolynomial({monomial_from_dict(mono_exponents): coeff})
    return lambda P: mono * P


def sec5_identities(degree):
    '''
    (label, left, right) operator pairs on odd monomials of grade <= degree.
    The infinite m-sums stop once the modes exceed the state grade.
    '''
    ms = range(0, degree + 1)
    identities = [
        ('Q[-2] = 2 sum L[-2m-2] L[2m]',
         [(1, _odd(Q, -2))],
         [(2, _chain(_odd(L, -2 * m - 2), _odd(L, 2 * m))) for m in ms]),
        ('1/2 Q[-6] + 21/40 L[-6] = sum L[-2m-6] L[2m] + 1/8 L[-6]',
         [(Fraction(1, 2), _odd(Q, -6)), (Fraction(21, 40), _odd(L, -6))],
         [(1, _chain(_odd(L, -2 * m - 6), _odd(L, 2 * m)))
          for m in range(-1, degree + 1)] +
         [(Fraction(1, 8), _odd(L, -6))]),
        ('sum L[-2m-2] dt[2m+1] = M[-1] - 1/2 join(1)',
         [(1, _chain(_odd(L, -2 * m - 2), _dt_odd(2 * m + 1))) for m in ms],
         [(1, _odd(M, -1)), (Fraction(-1, 2), lambda P: join_sum(P, 1))]),
        ('sum L[-2m-6] dt[2m+3] = M[-3] - 1/2 join(3) - 1/3 q1^3',
         [(1, _chain(_odd(L, -2 * m - 6), _dt_odd(2 * m + 3)))
          for m in range(-1, degree + 1)],
         [(1, _odd(M, -3)), (Fraction(-1, 2), lambda P: join_sum(P, 3)),
          (Fraction(-1, 3), _constant_times({1: 3}))]),
        ('WN = 1/4 M[-1] + 1/4 join(1) + (1/16 - N^2/4) q1',
         [(1, w_bgw)],
         [(Fraction(1, 4), _odd(M, -1)),
          (Fraction(1, 4), lambda P: join_sum(P, 1)),
          (bgw_constant(), _constant_times({1: 1}))]),
        ('3 W1 = 1/2 M[-3] + 1/2 join(3) + 1/3 q1^3 + 1/8 q3',
         [(3, w_kw)],
         [(Fraction(1, 2), _odd(M, -3)),
          (Fraction(1, 2), lambda P: join_sum(P, 3)),
          (Fraction(1, 3), _constant_times({1: 3})),
          (Fraction(1, 8), _constant_times({3: 1}))]),
    ]
    return identities


def check_sec5_identities(degree):
    reports = []
    states = monomials_up_to(degree, odd_only=True)
    for label, left, right in sec5_identities(degree):
        residual = _zero()
        for mono in states:
            P = QPolynomial.from_monomial(mono)
            residual = residual + _node_sum(left, P) - _node_sum(right, P)
        reports.append(ConstraintReport(label, degree, residual,
                                        {'states': len(states)}))
    return reports


def check_cut_and_join_constraint(tau):
    '''
    kw: (L0 - 3 W1) tau = 0; bgw: (L0 - WN) tau = 0, both in the odd
    reduction and graded: d tau_d = 3 W1 tau_(d-3), resp. WN tau_(d-1).
    '''
    model = tau.model
    if model is None or model.kind not in ('kw', 'bgw'):
        raise EngineError('No cut-and-join constraint for {}.'.format(model))
    if model.kind == 'kw':
        action, step, scale = w_kw, 3, 3
    else:
        action, step, scale = w_bgw, 1, 1
    residual = _zero()
    for d in range(1, tau.degree + 1):
        residual = residual + apply_node(L(0, True), tau.component(d)) \
            - action(tau.component(d - step)).scale(scale)
    return ConstraintReport('cut-and-join[{}]'.format(model), tau.degree,
                            residual)


def annihilator_operator(model):
    '''
    The graded W-image of P*: node combinations when every grade has
    D-degree <= 3, a generic symbol otherwise.
    '''
    P_star = build_model_ops(model).P_star
    if Model.parse(model).kind == 'bgw':
        P_star = strip_hbar(P_star)
    try:
        return GradedOperator(decompose_symbol(P_star), 'P*')
    except NotInSubalgebraError:
        return GradedOperator.from_symbol(P_star, 'P*')


def check_kac_schwarz(tau, threads=None):
    '''
    W(P_N*) tau_N = 0 grade by grade.
    '''
    model = tau.model
    if model is None or model.kind != 'bgw':
        raise EngineError(
            'The Kac-Schwarz annihilator check covers bgw only.')
    W = annihilator_operator(model)
    residual = apply_graded(W, tau.total(), tau.degree, threads)
    return ConstraintReport('kac-schwarz[bgw]', tau.degree, residual,
                            {'operator': str(W)})

