'''
Model descriptors and the Kac-Schwarz operators of the monomial GKM and the
generalized BGW model.
'''

import logging
from fractions import Fraction

from .diffop import D, DiffOp, diffop_adjoint, diffop_mul, z
from .errors import ConsistencyError, EngineError
from .scalars import HBAR, N, ParamPoly

logger = logging.getLogger(__name__)


class Model(object):
    '''
    One of kw, bgw or gkm(n). kw is the n = 1 member of the GKM family but
    keeps its own name because it has a node and a cut-and-join form.
    '''
    def __init__(self, kind, n=None):
        if kind not in ('kw', 'bgw', 'gkm'):
            raise EngineError('Unknown model {!r}.'.format(kind))
        if kind == 'gkm':
            if n is None or int(n) < 1:
                raise EngineError('gkm needs an integer n >= 1.')
            n = int(n)
        elif kind == 'kw':
            n = 1
        else:
            n = None
        self.kind = kind
        self.n = n

    @classmethod
    def parse(cls, text):
        if isinstance(text, Model):
            return text
        text = text.strip().lower()
        if text.startswith('gkm'):
            _, _, rest = text.partition(':')
            try:
                return cls('gkm', int(rest))
            except ValueError:
                raise EngineError('Model {!r} must read gkm:<n>.'.format(text))
        return cls(text)

    def __eq__(self, other):
        return isinstance(other, Model) and \
            (self.kind, self.n) == (other.kind, other.n)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.kind, self.n))

    def __str__(self):
        if self.kind == 'gkm':
            return 'gkm:{}'.format(self.n)
        return self.kind

    def __repr__(self):
        return 'Model({!r})'.format(str(self))

    @property
    def is_kdv(self):
        return self.kind in ('kw', 'bgw') or self.n == 1


class ModelOperators(object):
    '''
    The operators K, X, P, their adjoints and the D_- operator R of a model.
    '''
    names = ('K', 'X', 'P', 'K_star', 'P_star', 'R')

    def __init__(self, model, K, X, P, K_star, P_star, R):
        self.model = model
        self.K = K
        self.X = X
        self.P = P
        self.K_star = K_star
        self.P_star = P_star
        self.R = R

    def as_dict(self):
        return dict((name, getattr(self, name)) for name in self.names)

    def get(self, name):
        if name not in self.names:
            raise EngineError('No operator {!r}; choose from {}.'.format(
                name, ', '.join(self.names)))
        return getattr(self, name)


def gkm_k(n):
    return z(1) + DiffOp.polynomial_in_d(-n - 1, {1: 1, 0: Fraction(-n, 2)})


def gkm_r_direct(n):
    '''
    R_n expanded straight from the closed form
    -D - 1/(n+1) {z - z^(-n-1)(D - n/2)} {(z - z^(-n-1)(D - n/2))^(n+1) - z^(n+1)}.
    '''
    k_star = z(1) - DiffOp.polynomial_in_d(-n - 1, {1: 1, 0: Fraction(-n, 2)})
    bracket = k_star ** (n + 1) - z(n + 1)
    return -D - diffop_mul(k_star, bracket) * Fraction(1, n + 1)


def _require_d_minus(model, R):
    if not R.in_d_minus():
        raise ConsistencyError(
            'R for {} is not in D_-; leftover z-powers {}.'.format(
                model, sorted(p for p in R.z_powers() if p > -1)))


def _gkm_ops(model):
    n = model.n
    K = gkm_k(n)
    X = z(n + 1) * Fraction(1, n + 1)
    P = K ** (n + 1) * Fraction(1, n + 1) - X
    K_star = diffop_adjoint(K)
    P_star = diffop_adjoint(P)
    R = -D - diffop_mul(K_star, P_star)
    _require_d_minus(model, R)
    logger.debug('Built R for %s with %d terms.', model, len(R.terms))
    return ModelOperators(model, K, X, P, K_star, P_star, R)


def _bgw_ops(model):
    h_inv = HBAR.shift_h(-2)
    quarter_h2 = HBAR * HBAR * Fraction(1, 4)
    K = z(1) * h_inv + D * Fraction(1, 2)
    X = z(2) * h_inv * h_inv
    P = DiffOp.polynomial_in_d(-2, {2: 1, 1: -1, 0: Fraction(1, 4)}) * quarter_h2 \
        + DiffOp.monomial(-1, 1, HBAR) \
        - z(-2) * (N * N * quarter_h2)
    K_star = diffop_adjoint(K)
    P_star = diffop_adjoint(P)
    R = -D - diffop_mul(P_star, K_star) - P_star * Fraction(1, 4) - 1
    _require_d_minus(model, R)
    check_hbar_grading(R)
    return ModelOperators(model, K, X, P, K_star, P_star, R)


def check_hbar_grading(op):
    '''
    Every z^-k coefficient must carry exactly h^k.
    '''
    for (n, m), coeff in op.terms.items():
        if coeff.h_exponents() != set([-n]):
            raise ConsistencyError(
                'Term z^{}*D^{} has h-powers {} instead of h^{}.'.format(
                    n, m, sorted(coeff.h_exponents()), -n))


def strip_hbar(op):
    '''
    Drop the h^k carried by each z^-k part; the grade records it instead.
    '''
    check_hbar_grading(op)
    return DiffOp(dict(
        ((n, m), coeff.shift_h(n)) for (n, m), coeff in op.terms.items()))


def build_model_ops(model):
    model = Model.parse(model)
    if model.kind == 'bgw':
        return _bgw_ops(model)
    return _gkm_ops(model)


def generic_symbol(model):
    '''
    The h-free D_- operator whose W-image drives the ordered exponential.
    '''
    R = build_model_ops(model).R
    if Model.parse(model).kind == 'bgw':
        return strip_hbar(R)
    return R


def closed_form_r_bgw():
    '''
    R_N as it reads when K_N* is taken without the -1/2 that the residue
    adjoint of D/2 carries. It differs from build_model_ops('bgw').R by
    P_N*/2, an annihilator of the BGW tau-function.
    '''
    h = HBAR
    c = (ParamPoly.const(Fraction(1, 4)) - N * N)
    return DiffOp({
        (-1, 2): h * Fraction(-3, 4),
        (-1, 0): h * c * Fraction(-1, 4),
        (-2, 3): h * h * Fraction(1, 8),
        (-2, 2): h * h * Fraction(-3, 16),
        (-2, 1): h * h * (c * Fraction(1, 8) + Fraction(1, 16)),
        (-2, 0): h * h * (N * N * Fraction(1, 16) - Fraction(1, 64)),
    })
