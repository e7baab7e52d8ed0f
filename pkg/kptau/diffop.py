'''
The algebra of differential operators on the circle, stored in the normal
form sum c_{n,m} z^n D^m with D = z d/dz and every D to the right of z.
'''

from fractions import Fraction

from .errors import NotInSubalgebraError
from .scalars import ParamPoly, ZERO, render_sum


def binomial(n, k):
    if k < 0 or k > n:
        return 0
    result = 1
    for i in range(k):
        result = result * (n - i) // (i + 1)
    return result


def shifted_power(shift, power):
    '''
    Coefficients of (D + shift)^power as a dict {m: coefficient}.
    '''
    return dict(
        (k, binomial(power, k) * Fraction(shift) ** (power - k))
        for k in range(power + 1)
    )


class DiffOp(object):
    '''
    Immutable element of D. terms maps (n, m) to a ParamPoly.
    '''
    __slots__ = ('terms',)

    def __init__(self, terms=None):
        clean = dict()
        if terms:
            for key, coeff in terms.items():
                coeff = ParamPoly.coerce(coeff)
                if coeff:
                    n, m = key
                    if m < 0:
                        raise ValueError('Negative powers of D: {}.'.format(
                            key))
                    clean[(int(n), int(m))] = coeff
        self.terms = clean

    @classmethod
    def monomial(cls, n=0, m=0, coeff=1):
        return cls({(n, m): coeff})

    @classmethod
    def scalar(cls, value):
        return cls({(0, 0): value})

    @classmethod
    def polynomial_in_d(cls, n, coefficients):
        '''
        z^n * p(D) for p given as {m: coefficient}.
        '''
        return cls(dict(((n, m), c) for m, c in coefficients.items()))

    @classmethod
    def coerce(cls, value):
        if isinstance(value, DiffOp):
            return value
        return cls.scalar(value)

    def __bool__(self):
        return bool(self.terms)

    __nonzero__ = __bool__

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            try:
                other = DiffOp.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __add__(self, other):
        other = DiffOp.coerce(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, ZERO) + coeff
        return DiffOp(terms)

    __radd__ = __add__

    def __neg__(self):
        return DiffOp(dict((k, -c) for k, c in self.terms.items()))

    def __sub__(self, other):
        return self + (-DiffOp.coerce(other))

    def __rsub__(self, other):
        return DiffOp.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, DiffOp):
            return DiffOp(dict(
                (k, c * ParamPoly.coerce(other))
                for k, c in self.terms.items()))
        return diffop_mul(self, other)

    def __rmul__(self, other):
        return DiffOp(dict(
            (k, ParamPoly.coerce(other) * c) for k, c in self.terms.items()))

    def __pow__(self, k):
        result = DiffOp.scalar(1)
        for _ in range(k):
            result = diffop_mul(result, self)
        return result

    def adjoint(self):
        return diffop_adjoint(self)

    def z_powers(self):
        return set(n for n, _ in self.terms)

    def in_d_minus(self):
        return all(n <= -1 for n in self.z_powers())

    def require_d_minus(self, what='operator'):
        if not self.in_d_minus():
            raise NotInSubalgebraError(
                '{} is not in D_-: z-powers {}.'.format(
                    what, sorted(self.z_powers())))

    def grade_components(self):
        '''
        Split into {k: z^-k part}; the z^-k part raises the Fock grade by k.
        '''
        components = dict()
        for (n, m), coeff in self.terms.items():
            components.setdefault(-n, dict())[(n, m)] = coeff
        return dict((k, DiffOp(t)) for k, t in components.items())

    def d_polynomial(self, n):
        '''
        The coefficients {m: c} of z^n in this operator.
        '''
        return dict((m, c) for (p, m), c in self.terms.items() if p == n)

    def substitute(self, bindings):
        return DiffOp(dict(
            (k, c.substitute(bindings)) for k, c in self.terms.items()))

    def apply_to_laurent(self, series):
        '''
        Act on a Laurent polynomial {power: coefficient}: z^n D^m z^k = k^m z^(n+k).
        '''
        result = dict()
        for power, value in series.items():
            for (n, m), coeff in self.terms.items():
                weight = Fraction(power) ** m
                if not weight:
                    continue
                target = n + power
                result[target] = result.get(target, ZERO) + \
                    coeff * value * weight
        return dict((p, c) for p, c in result.items() if c)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: (
            -item[0][0], -item[0][1]))

    def __str__(self):
        pairs = []
        for (n, m), coeff in self.sorted_terms():
            factors = []
            if n == 1:
                factors.append('z')
            elif n:
                factors.append('z^{}'.format(n))
            if m == 1:
                factors.append('D')
            elif m:
                factors.append('D^{}'.format(m))
            pairs.append((coeff, '*'.join(factors)))
        return render_sum(pairs)

    def __repr__(self):
        return 'DiffOp({!r})'.format(str(self))

    def to_json(self):
        return [
            {'z': n, 'D': m, 'coeff': str(coeff)}
            for (n, m), coeff in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, records):
        return cls(dict(
            ((record['z'], record['D']), ParamPoly.parse(record['coeff']))
            for record in records))


def diffop_mul(a, b):
    '''
    Normal-form product using D^p z^c = z^c (D + c)^p.
    '''
    terms = dict()
    for (n1, m1), c1 in a.terms.items():
        for (n2, m2), c2 in b.terms.items():
            coeff = c1 * c2
            for k, binom in shifted_power(n2, m1).items():
                if not binom:
                    continue
                key = (n1 + n2, k + m2)
                terms[key] = terms.get(key, ZERO) + coeff * binom
    return DiffOp(terms)


def diffop_adjoint(a):
    '''
    Residue-pairing adjoint: (z^n D^k)* = z^-1 (-D)^k z^(n+1)
    = (-1)^k z^n (D + n + 1)^k.
    '''
    terms = dict()
    for (n, k), coeff in a.terms.items():
        sign = -1 if k % 2 else 1
        for j, binom in shifted_power(n + 1, k).items():
            if not binom:
                continue
            terms[(n, j)] = terms.get((n, j), ZERO) + coeff * (sign * binom)
    return DiffOp(terms)


def falling_factorial(k):
    '''
    Coefficients of D(D-1)...(D-k+1) as {m: c}.
    '''
    poly = {0: Fraction(1)}
    for i in range(k):
        shifted = dict()
        for m, c in poly.items():
            shifted[m + 1] = shifted.get(m + 1, 0) + c
            shifted[m] = shifted.get(m, 0) - i * c
        poly = dict((m, c) for m, c in shifted.items() if c)
    return poly


def to_D_form(n, k):
    '''
    z^n d^k/dz^k in D-form: z^(n-k) D(D-1)...(D-k+1).
    '''
    return DiffOp.polynomial_in_d(n - k, falling_factorial(k))


def residue(series):
    return series.get(-1, ZERO)


def laurent_mul(f, g):
    result = dict()
    for p, a in f.items():
        for q, b in g.items():
            result[p + q] = result.get(p + q, ZERO) + a * b
    return dict((p, c) for p, c in result.items() if c)


def z(power=1):
    return DiffOp.monomial(power, 0)


D = DiffOp.monomial(0, 1)
