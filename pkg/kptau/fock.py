'''
The bosonic Fock space: sparse polynomials in q_1, q_2, ... over ParamPoly,
graded by deg q_k = k.

A monomial is a tuple of (k, exponent) pairs sorted by k, so q1^3*q3 is
((1, 3), (3, 1)) and the constant monomial is ().
'''

import regex as re

from .errors import CutoffError
from .scalars import ParamPoly, ZERO, parampoly_op, render_sum

_MONOMIAL_FACTOR = re.compile(r'^q(\d+)(?:\^(\d+))?$')

UNIT = ()


def monomial_grade(mono):
    return sum(k * e for k, e in mono)


def monomial_from_dict(exponents):
    return tuple(sorted(
        (int(k), int(e)) for k, e in exponents.items() if int(e)))


def monomial_times_var(mono, k, power=1):
    exponents = dict(mono)
    exponents[k] = exponents.get(k, 0) + power
    return tuple(sorted(exponents.items()))


def monomial_derivative(mono, k):
    '''
    d/dq_k of a monomial: returns (exponent, reduced monomial), exponent 0 when
    q_k is absent.
    '''
    exponents = dict(mono)
    e = exponents.get(k, 0)
    if not e:
        return 0, None
    if e == 1:
        del exponents[k]
    else:
        exponents[k] = e - 1
    return e, tuple(sorted(exponents.items()))


def is_odd_monomial(mono):
    return all(k % 2 for k, _ in mono)


def format_monomial(mono):
    if not mono:
        return '1'
    return '*'.join(
        'q{}'.format(k) if e == 1 else 'q{}^{}'.format(k, e) for k, e in mono)


def parse_monomial(text):
    text = text.strip()
    if text in ('', '1'):
        return UNIT
    exponents = dict()
    for factor in text.split('*'):
        match = _MONOMIAL_FACTOR.match(factor.strip())
        if not match:
            raise ValueError('Cannot read monomial factor {!r}.'.format(factor))
        k = int(match.group(1))
        exponents[k] = exponents.get(k, 0) + int(match.group(2) or 1)
    return monomial_from_dict(exponents)


def monomial_sort_key(mono):
    return (monomial_grade(mono), tuple(k for k, _ in mono),
            tuple(-e for _, e in mono))


def partitions(n, largest=None, parts=None):
    '''
    Partitions of n as weakly decreasing tuples, optionally restricted to the
    given allowed parts.
    '''
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        if parts is not None and first not in parts:
            continue
        for rest in partitions(n - first, first, parts):
            yield (first,) + rest


def partition_to_monomial(parts):
    exponents = dict()
    for k in parts:
        exponents[k] = exponents.get(k, 0) + 1
    return monomial_from_dict(exponents)


def monomial_to_partition(mono):
    parts = []
    for k, e in sorted(mono, reverse=True):
        parts.extend([k] * e)
    return tuple(parts)


def monomials_up_to(grade, odd_only=False):
    '''
    All monomials of grade <= the given grade, in canonical order.
    '''
    allowed = None
    result = []
    for d in range(grade + 1):
        if odd_only:
            allowed = set(range(1, d + 1, 2))
        for parts in partitions(d, parts=allowed):
            result.append(partition_to_monomial(parts))
    return result


class QPolynomial(object):
    '''
    Sparse polynomial in q_1..q_K with ParamPoly coefficients. The cutoff K
    bounds the variables any operator may create.
    '''
    __slots__ = ('terms', 'cutoff')

    def __init__(self, terms=None, cutoff=None):
        clean = dict()
        if terms:
            for mono, coeff in terms.items():
                coeff = ParamPoly.coerce(coeff)
                if coeff:
                    clean[mono] = coeff
        self.terms = clean
        self.cutoff = cutoff
        if cutoff is not None:
            for mono in clean:
                for k, _ in mono:
                    if k > cutoff:
                        raise CutoffError(
                            'q{} exceeds the variable cutoff {}.'.format(
                                k, cutoff))

    @classmethod
    def one(cls, cutoff=None):
        return cls({UNIT: 1}, cutoff)

    @classmethod
    def variable(cls, k, coeff=1, cutoff=None):
        return cls({((k, 1),): coeff}, cutoff)

    @classmethod
    def from_monomial(cls, mono, coeff=1, cutoff=None):
        return cls({mono: coeff}, cutoff)

    def _combined_cutoff(self, other):
        cutoffs = [c for c in (self.cutoff, other.cutoff) if c is not None]
        return max(cutoffs) if cutoffs else None

    def __bool__(self):
        return bool(self.terms)

    __nonzero__ = __bool__

    def __eq__(self, other):
        if not isinstance(other, QPolynomial):
            if other == 0:
                return not self.terms
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, QPolynomial):
            other = QPolynomial({UNIT: other})
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            terms[mono] = terms.get(mono, ZERO) + coeff
        return QPolynomial(terms, self._combined_cutoff(other))

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(
            dict((m, -c) for m, c in self.terms.items()), self.cutoff)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor):
        factor = ParamPoly.coerce(factor)
        return QPolynomial(
            dict((m, c * factor) for m, c in self.terms.items()), self.cutoff)

    def __mul__(self, other):
        if not isinstance(other, QPolynomial):
            return self.scale(other)
        terms = dict()
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = dict(m1)
                for k, e in m2:
                    mono[k] = mono.get(k, 0) + e
                key = tuple(sorted(mono.items()))
                terms[key] = terms.get(key, ZERO) + c1 * c2
        return QPolynomial(terms, self._combined_cutoff(other))

    def __rmul__(self, other):
        return self.scale(other)

    def multiply_var(self, k):
        if self.cutoff is not None and k > self.cutoff:
            raise CutoffError('q{} exceeds the variable cutoff {}.'.format(
                k, self.cutoff))
        return QPolynomial(
            dict((monomial_times_var(m, k), c) for m, c in self.terms.items()),
            self.cutoff)

    def derivative(self, k):
        '''
        d/dq_k.
        '''
        terms = dict()
        for mono, coeff in self.terms.items():
            e, reduced = monomial_derivative(mono, k)
            if e:
                terms[reduced] = terms.get(reduced, ZERO) + coeff * e
        return QPolynomial(terms, self.cutoff)

    def coefficient(self, mono):
        return self.terms.get(mono, ZERO)

    def grades(self):
        return sorted(set(monomial_grade(m) for m in self.terms))

    def homogeneous_part(self, d):
        return QPolynomial(
            dict((m, c) for m, c in self.terms.items()
                 if monomial_grade(m) == d), self.cutoff)

    def truncate(self, max_grade):
        return QPolynomial(
            dict((m, c) for m, c in self.terms.items()
                 if monomial_grade(m) <= max_grade), self.cutoff)

    def is_homogeneous(self, d=None):
        grades = self.grades()
        if not grades:
            return True
        return len(grades) == 1 and (d is None or grades[0] == d)

    def odd_part(self):
        return QPolynomial(
            dict((m, c) for m, c in self.terms.items() if is_odd_monomial(m)),
            self.cutoff)

    def has_even_variables(self):
        return not all(is_odd_monomial(m) for m in self.terms)

    def substitute(self, bindings):
        return QPolynomial(
            dict((m, parampoly_op('substitute', c, bindings))
                 for m, c in self.terms.items()),
            self.cutoff)

    def shift_h(self, k):
        return QPolynomial(
            dict((m, c.shift_h(k)) for m, c in self.terms.items()),
            self.cutoff)

    def coefficients(self):
        return list(self.terms.values())

    def miwa_specialize(self, sign):
        '''
        Substitute q_k = sign * z^-k. Returns a Laurent dict {-grade: coeff}.
        '''
        series = dict()
        for mono, coeff in self.terms.items():
            degree = 0
            factor = 1
            for k, e in mono:
                degree += k * e
                factor *= sign ** e
            series[-degree] = series.get(-degree, ZERO) + coeff * factor
        return dict((p, c) for p, c in series.items() if c)

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda item: monomial_sort_key(item[0]))

    def __str__(self):
        return render_sum([
            (coeff, '' if not mono else format_monomial(mono))
            for mono, coeff in self.sorted_terms()])

    def __repr__(self):
        return 'QPolynomial({!r})'.format(str(self))

    def to_json(self):
        return [
            {'monomial': dict((str(k), e) for k, e in mono),
             'coeff': str(coeff)}
            for mono, coeff in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, records, cutoff=None):
        return cls(dict(
            (monomial_from_dict(record['monomial']),
             ParamPoly.parse(record['coeff']))
            for record in records), cutoff)


def grade_decompose(P):
    '''
    Split P into its homogeneous components {grade: QPolynomial}.
    '''
    pieces = dict()
    for mono, coeff in P.terms.items():
        pieces.setdefault(monomial_grade(mono), dict())[mono] = coeff
    return dict((d, QPolynomial(t, P.cutoff)) for d, t in pieces.items())
