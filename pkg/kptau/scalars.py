'''
Exact scalars: rationals and the small parameter ring Q[N, h, 1/h].

Rationals are fractions.Fraction throughout. ParamPoly is a sparse
polynomial in the formal parameters N and h (the time parameter hbar), keyed
by exponent pairs (e_N, e_h). The h exponent may be negative because the BGW
operator K_N carries 1/h.
'''

from fractions import Fraction

import regex as re


PARAMETERS = ('N', 'h')

_TERM = re.compile(r'[+-](?:[^+\-]|(?<=\^)-)+')
_FACTOR = re.compile(r'^(N|h)(?:\^(-?\d+))?$')


def rational_normalize(p, q):
    '''
    Return p/q in lowest terms with a positive denominator. Raises
    ZeroDivisionError for q == 0.
    '''
    if q == 0:
        raise ZeroDivisionError('Rational with zero denominator: {}/0'.format(p))
    return Fraction(int(p), int(q))


def as_rational(value):
    '''
    Coerce int, Fraction or "p/q" strings to a Fraction.
    '''
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError('Cannot read {!r} as an exact rational.'.format(value))


class ParamPoly(object):
    '''
    Immutable polynomial in N and h with rational coefficients.
    '''
    __slots__ = ('terms', '_hash')

    def __init__(self, terms=None):
        clean = dict()
        if terms:
            for exps, coeff in terms.items():
                if coeff:
                    clean[exps] = Fraction(coeff)
        self.terms = clean
        self._hash = None

    @classmethod
    def const(cls, value):
        return cls({(0, 0): as_rational(value)})

    @classmethod
    def monomial(cls, e_n=0, e_h=0, coeff=1):
        if e_n < 0:
            raise ValueError('Negative powers of N are not supported.')
        return cls({(e_n, e_h): as_rational(coeff)})

    @classmethod
    def coerce(cls, value):
        if isinstance(value, ParamPoly):
            return value
        return cls.const(value)

    def __bool__(self):
        return bool(self.terms)

    __nonzero__ = __bool__

    def is_constant(self):
        return not self.terms or list(self.terms) == [(0, 0)]

    def constant(self):
        '''
        The rational value of a constant ParamPoly.
        '''
        if not self.is_constant():
            raise ValueError('{} is not a constant.'.format(self))
        return self.terms.get((0, 0), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, ParamPoly):
            try:
                other = ParamPoly.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other):
        other = ParamPoly.coerce(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = terms.get(exps, 0) + coeff
        return ParamPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly(dict((e, -c) for e, c in self.terms.items()))

    def __sub__(self, other):
        return self + (-ParamPoly.coerce(other))

    def __rsub__(self, other):
        return ParamPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ParamPoly()
            return ParamPoly(
                dict((e, c * other) for e, c in self.terms.items()))
        other = ParamPoly.coerce(other)
        terms = dict()
        for (n1, h1), c1 in self.terms.items():
            for (n2, h2), c2 in other.terms.items():
                key = (n1 + n2, h1 + h2)
                terms[key] = terms.get(key, 0) + c1 * c2
        return ParamPoly(terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * (Fraction(1) / as_rational(other))

    __div__ = __truediv__

    def __pow__(self, k):
        result = ParamPoly.const(1)
        for _ in range(k):
            result = result * self
        return result

    def substitute(self, bindings):
        '''
        Replace N and/or h by rational values. Unbound parameters are kept.
        '''
        values = dict((k, as_rational(v)) for k, v in bindings.items())
        for name in values:
            if name not in PARAMETERS:
                raise ValueError('Unknown parameter {}.'.format(name))
        terms = dict()
        for (e_n, e_h), coeff in self.terms.items():
            if 'N' in values:
                coeff = coeff * values['N'] ** e_n
                e_n = 0
            if 'h' in values:
                coeff = coeff * values['h'] ** e_h
                e_h = 0
            terms[(e_n, e_h)] = terms.get((e_n, e_h), 0) + coeff
        return ParamPoly(terms)

    def h_exponents(self):
        return set(e_h for _, e_h in self.terms)

    def shift_h(self, k):
        '''
        Multiply by h**k.
        '''
        return ParamPoly(
            dict(((e_n, e_h + k), c) for (e_n, e_h), c in self.terms.items()))

    def only_even_in_n(self):
        return all(e_n % 2 == 0 for e_n, _ in self.terms)

    def sort_key(self):
        return tuple(sorted(self.terms.items()))

    def __repr__(self):
        return 'ParamPoly({!r})'.format(str(self))

    def __str__(self):
        if not self.terms:
            return '0'
        pieces = []
        for (e_n, e_h) in sorted(self.terms):
            coeff = self.terms[(e_n, e_h)]
            factors = []
            for name, exp in (('N', e_n), ('h', e_h)):
                if exp == 1:
                    factors.append(name)
                elif exp:
                    factors.append('{}^{}'.format(name, exp))
            sign = '-' if coeff < 0 else '+'
            magnitude = abs(coeff)
            if factors and magnitude == 1:
                body = '*'.join(factors)
            else:
                body = '*'.join([str(magnitude)] + factors)
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ('-' if first_sign == '-' else '') + first_body
        for sign, body in pieces[1:]:
            text += ' {} {}'.format(sign, body)
        return text

    def is_compound(self):
        return len(self.terms) > 1

    @classmethod
    def parse(cls, text):
        '''
        Parse the canonical rendering back into a ParamPoly.
        '''
        compact = text.replace(' ', '')
        if not compact:
            raise ValueError('Empty parameter polynomial.')
        if compact[0] not in '+-':
            compact = '+' + compact
        terms = dict()
        consumed = 0
        for match in _TERM.finditer(compact):
            if match.start() != consumed:
                raise ValueError('Cannot parse {!r}.'.format(text))
            consumed = match.end()
            token = match.group(0)
            sign = -1 if token[0] == '-' else 1
            coeff = Fraction(sign)
            e_n = e_h = 0
            for factor in token[1:].split('*'):
                factor_match = _FACTOR.match(factor)
                if factor_match:
                    exp = int(factor_match.group(2) or 1)
                    if factor_match.group(1) == 'N':
                        e_n += exp
                    else:
                        e_h += exp
                else:
                    coeff *= Fraction(factor)
            terms[(e_n, e_h)] = terms.get((e_n, e_h), 0) + coeff
        if consumed != len(compact):
            raise ValueError('Cannot parse {!r}.'.format(text))
        return cls(terms)


ZERO = ParamPoly()
ONE = ParamPoly.const(1)
N = ParamPoly.monomial(e_n=1)
HBAR = ParamPoly.monomial(e_h=1)


def parampoly_op(kind, a, b):
    '''
    Dispatch for add / mul / substitute.
    '''
    if kind == 'add':
        return ParamPoly.coerce(a) + ParamPoly.coerce(b)
    elif kind == 'mul':
        return ParamPoly.coerce(a) * ParamPoly.coerce(b)
    elif kind == 'substitute':
        return ParamPoly.coerce(a).substitute(b)
    raise ValueError('Unknown ParamPoly operation: {}.'.format(kind))


def parse_bindings(items):
    '''
    Read "N=1/2" style strings into a bindings dict.
    '''
    bindings = dict()
    for item in items:
        try:
            name, value = item.split('=', 1)
        except ValueError:
            raise ValueError('Binding {!r} is not of the form NAME=VALUE.'.format(
                item))
        name = name.strip()
        if name in ('hbar', 'ħ'):
            name = 'h'
        if name not in PARAMETERS:
            raise ValueError('Unknown parameter {!r}.'.format(name))
        try:
            bindings[name] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError('{!r} is not an exact rational.'.format(value))
    return bindings


def render_sum(pairs):
    '''
    Render [(ParamPoly, "factor*string"), ...] as a signed sum. An empty
    factor string marks the constant term.
    '''
    if not pairs:
        return '0'
    text = ''
    for index, (coeff, factors) in enumerate(pairs):
        coeff = ParamPoly.coerce(coeff)
        if coeff.is_compound():
            sign = '+'
            body = '({})'.format(coeff)
            if factors:
                body += '*' + factors
        else:
            value = coeff.terms and list(coeff.terms.values())[0] or 0
            sign = '-' if value < 0 else '+'
            magnitude = -coeff if value < 0 else coeff
            if factors and magnitude == 1:
                body = factors
            elif factors:
                body = '{}*{}'.format(magnitude, factors)
            else:
                body = str(magnitude)
        if index == 0:
            text = ('-' if sign == '-' else '') + body
        else:
            text += ' {} {}'.format(sign, body)
    return text
