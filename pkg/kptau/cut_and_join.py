'''
Cut-and-join operators in the odd variables q_1, q_3, q_5, ...

With dt_k = k d/dq_k:

    join(s) = sum_{i+j>s} q_i q_j dt_{i+j-s}
    cut(s)  = sum q_{i+j+s} dt_i dt_j

the sums running over odd i, j. The KW and BGW operators are

    W1 = 1/3 join(3) + 1/6 cut(3) + 1/6 q1^3 + 1/24 q3
    WN = 1/2 join(1) + 1/4 cut(1) + (1/16 - N^2/4) q1
'''

from fractions import Fraction

from .errors import EngineError
from .fock import QPolynomial, monomial_from_dict
from .models import Model
from .nodes import compositions
from .scalars import N, ParamPoly


def _odd(k):
    return k % 2 == 1


def _odd_variables(P):
    return sorted(set(k for mono in P.terms for k, _ in mono if _odd(k)))


def d_tilde(P, k):
    return P.derivative(k).scale(k)


def join_sum(P, s):
    total = QPolynomial(cutoff=P.cutoff)
    for k in _odd_variables(P):
        lowered = d_tilde(P, k)
        if not lowered:
            continue
        for i, j in compositions(k + s, 2, _odd):
            total = total + lowered.multiply_var(i).multiply_var(j)
    return total


def cut_sum(P, s):
    total = QPolynomial(cutoff=P.cutoff)
    variables = _odd_variables(P)
    for j in variables:
        once = d_tilde(P, j)
        if not once:
            continue
        for i in variables:
            twice = d_tilde(once, i)
            if twice:
                total = total + twice.multiply_var(i + j + s)
    return total


def bgw_constant():
    '''
    The q1 coefficient 1/16 - N^2/4 of the BGW operator.
    '''
    return ParamPoly.const(Fraction(1, 16)) - N * N * Fraction(1, 4)


def w_kw(P):
    creation = QPolynomial({
        monomial_from_dict({1: 3}): Fraction(1, 6),
        monomial_from_dict({3: 1}): Fraction(1, 24),
    }, P.cutoff)
    return join_sum(P, 3).scale(Fraction(1, 3)) \
        + cut_sum(P, 3).scale(Fraction(1, 6)) \
        + creation * P


def w_bgw(P):
    return join_sum(P, 1).scale(Fraction(1, 2)) \
        + cut_sum(P, 1).scale(Fraction(1, 4)) \
        + P.multiply_var(1).scale(bgw_constant())


def cut_and_join_operator(model):
    '''
    (action, grade step) of the cut-and-join operator of kw or bgw.
    '''
    model = Model.parse(model)
    if model.kind == 'kw':
        return w_kw, 3
    if model.kind == 'bgw':
        return w_bgw, 1
    raise EngineError(
        'No cut-and-join form for {}; use kw or bgw.'.format(model))


def exponential_series(model, degree, cutoff=None):
    '''
    exp(W)1 through the given grade, summed as W^k 1 / k!.
    '''
    action, step = cut_and_join_operator(model)
    term = QPolynomial.one(cutoff)
    total = QPolynomial.one(cutoff)
    k = 0
    while (k + 1) * step <= degree:
        k += 1
        term = action(term).scale(Fraction(1, k))
        total = total + term
    return total
