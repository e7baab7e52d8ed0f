'''
Canonical basis vectors of the Sato Grassmannian point fixed by a D_- operator b.

Phi_1 solves (D + b) Phi_1 = 0 and Phi_j solves
(D + b) Phi_j = (j - 1) Phi_j + sum_{i>=2} c_i Phi_{j-i+1},
in the echelon gauge where Phi_j = z^(j-1) + (negative powers only).
'''

import logging
from fractions import Fraction

from .diffop import DiffOp
from .errors import ConsistencyError
from .models import generic_symbol
from .scalars import ONE, ParamPoly, ZERO, render_sum
from .verify import ConstraintReport, LaurentResidual

logger = logging.getLogger(__name__)

MIWA_SIGNS = dict()


class BasisVector(object):
    '''
    z^(j-1) + sum_{p<0} coefficients[p] z^p, known for p >= -order.
    '''
    def __init__(self, index, coefficients, order, constants=None):
        self.index = index
        self.order = order
        self.coefficients = dict(
            (p, ParamPoly.coerce(c)) for p, c in coefficients.items()
            if ParamPoly.coerce(c) and p >= -order)
        self.constants = constants or dict()

    @property
    def leading_power(self):
        return self.index - 1

    def coefficient(self, p):
        return self.coefficients.get(p, ZERO)

    def laurent(self):
        return dict(self.coefficients)

    def tail(self):
        '''
        {i: phi_i} with the z^-i coefficients.
        '''
        return dict((-p, c) for p, c in self.coefficients.items() if p < 0)

    def __str__(self):
        pairs = []
        for p in sorted(self.coefficients, reverse=True):
            factor = '1' if p == 0 else ('z' if p == 1 else 'z^{}'.format(p))
            pairs.append((self.coefficients[p], '' if p == 0 else factor))
        return render_sum(pairs)

    def to_json(self):
        return {
            'index': self.index,
            'order': self.order,
            'coefficients': [{'power': p, 'coeff': str(self.coefficients[p])}
                             for p in sorted(self.coefficients, reverse=True)],
            'constants': dict((str(i), str(c))
                              for i, c in sorted(self.constants.items())),
        }


def _symbol_polynomials(b):
    return dict((s, part.d_polynomial(-s))
                for s, part in b.grade_components().items())


def _evaluate(poly, x):
    total = ZERO
    for m, c in poly.items():
        total = total + c * (Fraction(x) ** m)
    return total


def grassmannian_basis(b, count, order):
    '''
    Phi_1 .. Phi_count of the point stabilized by D + b, to order z^-order.
    '''
    b = DiffOp.coerce(b)
    b.require_d_minus('Grassmannian operator')
    polys = _symbol_polynomials(b)
    basis = []
    for j in range(1, count + 1):
        f = {j - 1: ONE}
        constants = dict()
        for p in range(j - 2, -1, -1):
            constants[j - p] = _evaluate(polys.get(j - 1 - p, {}), j - 1)
        for p in range(-1, -order - 1, -1):
            rhs = ZERO
            for i, c in constants.items():
                if c:
                    rhs = rhs + c * basis[j - i].coefficient(p)
            for s, poly in polys.items():
                upper = f.get(p + s)
                if upper:
                    rhs = rhs - _evaluate(poly, p + s) * upper
            denominator = p - j + 1
            if denominator == 0:
                raise ConsistencyError(
                    'Phi_{} is not solvable at order z^{}.'.format(j, p))
            f[p] = rhs / denominator
        basis.append(BasisVector(j, f, order, constants))
        logger.debug('Built Phi_%d with %d coefficients.', j, len(f))
    return basis


def _apply(b, vector):
    series = vector.laurent()
    image = b.apply_to_laurent(series)
    for p, c in series.items():
        image[p] = image.get(p, ZERO) + c * p
    return image


def verify_basis(b, basis):
    '''
    Re-check (D + b) Phi_j - (j - 1) Phi_j in span(Phi_1 .. Phi_(j-1)) by
    echelon reduction of the Laurent image.
    '''
    b = DiffOp.coerce(b)
    failures = dict()
    for vector in basis:
        j, order = vector.index, vector.order
        image = _apply(b, vector)
        for p, c in vector.laurent().items():
            image[p] = image.get(p, ZERO) - c * (j - 1)
        for p in range(j - 2, -1, -1):
            lead = image.get(p, ZERO)
            if lead:
                for q, c in basis[p].laurent().items():
                    image[q] = image.get(q, ZERO) - lead * c
        leftover = dict((p, c) for p, c in image.items() if c and p >= -order)
        if leftover:
            failures[j] = leftover
    return ConstraintReport('basis-relation', len(basis),
                            LaurentResidual(failures))


def model_basis(model, count, order, bindings=None):
    b = generic_symbol(model)
    if bindings:
        b = b.substitute(bindings)
    return grassmannian_basis(b, count, order)


def miwa_crosscheck(tau, basis, order=None):
    '''
    tau(q_k = sigma z^-k) against Phi_1 through z^-order; sigma is tried as
    -1 then +1 and the matching sign is recorded per model.
    '''
    phi = basis[0]
    order = min(order if order is not None else phi.order, phi.order,
                tau.degree)
    expected = dict((p, c) for p, c in phi.laurent().items() if p >= -order)
    residuals = dict()
    for sign in (-1, 1):
        specialized = tau.total().truncate(order).miwa_specialize(sign)
        difference = dict()
        for p in set(specialized) | set(expected):
            delta = specialized.get(p, ZERO) - expected.get(p, ZERO)
            if delta:
                difference[p] = delta
        if not difference:
            MIWA_SIGNS[str(tau.model)] = sign
            logger.info('Miwa cross-check for %s matches with sign %+d.',
                        tau.model, sign)
            return ConstraintReport('miwa', order, LaurentResidual({}),
                                    {'sign': sign})
        residuals[sign] = difference
    return ConstraintReport('miwa', order, LaurentResidual(residuals),
                            {'sign': None})


def check_orthogonality(A, B):
    '''
    res_z(A_i B_j) = 0 for i <= order(B) and j <= order(A).
    '''
    failures = dict()
    for a in A:
        if a.index > B[0].order:
            continue
        for v in B:
            if v.index > a.order:
                continue
            value = ZERO
            for p, c in a.laurent().items():
                value = value + c * v.coefficient(-1 - p)
            if value:
                failures[(a.index, v.index)] = {-1: value}
    return ConstraintReport('orthogonality', len(A), LaurentResidual(failures))
