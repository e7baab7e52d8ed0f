'''
Node operators on the Fock space: the Heisenberg modes alpha_n, the Virasoro
operators L_n, the spin-3 operators M_n and the spin-4 operators Q_n, plus
their odd-reduced variants (every term touching an even variable q_2k or
d/dq_2k removed).
'''

from fractions import Fraction
from functools import lru_cache
from itertools import product

from .fock import QPolynomial, monomial_derivative, monomial_times_var
from .scalars import ZERO

KINDS = ('alpha', 'L', 'M', 'Q')
SPIN = {'alpha': 1, 'L': 2, 'M': 3, 'Q': 4}


class NodeOp(object):
    '''
    Immutable descriptor of a node operator.
    '''
    __slots__ = ('kind', 'index', 'odd_reduced')

    def __init__(self, kind, index, odd_reduced=False):
        if kind not in KINDS:
            raise ValueError('Unknown node kind {!r}.'.format(kind))
        self.kind = kind
        self.index = int(index)
        self.odd_reduced = bool(odd_reduced)

    def key(self):
        return (self.kind, self.index, self.odd_reduced)

    def __eq__(self, other):
        return isinstance(other, NodeOp) and self.key() == other.key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.key())

    def __getstate__(self):
        return self.key()

    def __setstate__(self, state):
        self.kind, self.index, self.odd_reduced = state

    def odd(self):
        return NodeOp(self.kind, self.index, True)

    @property
    def grade_shift(self):
        return -self.index

    def __str__(self):
        return '{}{}[{}]'.format(
            self.kind, 'odd' if self.odd_reduced else '', self.index)

    def __repr__(self):
        return 'NodeOp({!r}, {}, {})'.format(
            self.kind, self.index, self.odd_reduced)

    def to_json(self):
        return {'kind': self.kind, 'index': self.index,
                'odd_reduced': self.odd_reduced}


def alpha(n, odd=False):
    return NodeOp('alpha', n, odd)


def L(n, odd=False):
    return NodeOp('L', n, odd)


def M(n, odd=False):
    return NodeOp('M', n, odd)


def Q(n, odd=False):
    return NodeOp('Q', n, odd)


def _add(target, mono, value):
    total = target.get(mono, 0) + value
    if total:
        target[mono] = total
    else:
        target.pop(mono, None)


def derive(state, k, factor=1):
    '''
    factor * d/dq_k on a {monomial: rational} state.
    '''
    result = dict()
    for mono, c in state.items():
        e, reduced = monomial_derivative(mono, k)
        if e:
            _add(result, reduced, c * e * factor)
    return result


def multiply(state, k):
    return dict(
        (monomial_times_var(mono, k), c) for mono, c in state.items())


def scaled_derive(state, k):
    '''
    The annihilation mode alpha_k = k d/dq_k.
    '''
    return derive(state, k, k)


def _accumulate(total, state, factor=1):
    for mono, c in state.items():
        _add(total, mono, c * factor)


def compositions(total, parts, allowed=None):
    '''
    Ordered tuples of `parts` positive integers summing to total.
    '''
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        if allowed is not None and not allowed(first):
            continue
        for rest in compositions(total - first, parts - 1, allowed):
            yield (first,) + rest


def _is_odd(k):
    return k % 2 == 1


def _binomial(n, k):
    result = 1
    for i in range(k):
        result = result * (n - i) // (i + 1)
    return result


def normal_ordered_sum(mono, r, n, weight=None, odd=False):
    '''
    sum over a_1 + ... + a_r = n (all a_i nonzero) of
    weight(a) * :alpha_a1 ... alpha_ar: acting on one monomial.

    Normal ordering puts every annihilation mode (a > 0) to the right, so the
    derivatives act first. The weight must be symmetric in its arguments.
    '''
    allowed = _is_odd if odd else None
    variables = [k for k, _ in mono]
    if odd:
        variables = [k for k in variables if _is_odd(k)]
    result = dict()
    for creations in range(r + 1):
        annihilations = r - creations
        positions = _binomial(r, creations)
        for down in product(variables, repeat=annihilations):
            state = {mono: Fraction(1)}
            for k in down:
                state = scaled_derive(state, k)
                if not state:
                    break
            if not state:
                continue
            up_total = sum(down) - n
            if creations == 0:
                if up_total != 0:
                    continue
                ups_list = [()]
            elif up_total < creations:
                continue
            else:
                ups_list = compositions(up_total, creations, allowed)
            for ups in ups_list:
                factor = positions
                if weight is not None:
                    factor *= weight(tuple(down) + tuple(-u for u in ups))
                    if not factor:
                        continue
                created = state
                for u in ups:
                    created = multiply(created, u)
                _accumulate(result, created, factor)
    return result


def _alpha_action(mono, n, odd):
    state = {mono: Fraction(1)}
    if n == 0 or (odd and not _is_odd(abs(n))):
        return dict()
    if n < 0:
        return multiply(state, -n)
    return scaled_derive(state, n)


def _virasoro_action(mono, n, odd):
    state = {mono: Fraction(1)}
    result = dict()
    # sum_{i>0, i+n>0} (i+n) q_i d/dq_{i+n}
    for k, _ in mono:
        i = k - n
        if i <= 0:
            continue
        if odd and not (_is_odd(i) and _is_odd(k)):
            continue
        _accumulate(result, multiply(scaled_derive(state, k), i))
    # 1/2 sum_{i+j=n} ij d^2/dq_i dq_j
    if n > 0:
        for i in range(1, n):
            j = n - i
            if odd and not (_is_odd(i) and _is_odd(j)):
                continue
            _accumulate(
                result, scaled_derive(scaled_derive(state, j), i),
                Fraction(1, 2))
    # 1/2 sum_{i+j=-n} q_i q_j
    if n < 0:
        for i in range(1, -n):
            j = -n - i
            if odd and not (_is_odd(i) and _is_odd(j)):
                continue
            _accumulate(result, multiply(multiply(state, i), j),
                        Fraction(1, 2))
    return result


def _spin3_action(mono, n, odd):
    '''
    The expanded four-sum form of M_n.
    '''
    state = {mono: Fraction(1)}
    result = dict()
    present = [k for k, _ in mono]

    def keep(*indices):
        return not odd or all(_is_odd(x) for x in indices)

    # sum (i+j+n) q_i q_j d/dq_{i+j+n}
    for k in present:
        total = k - n
        if total < 2:
            continue
        for i, j in compositions(total, 2):
            if not keep(i, j, k):
                continue
            _accumulate(result,
                        multiply(multiply(scaled_derive(state, k), i), j))
    # sum ij q_{i+j-n} d^2/dq_i dq_j
    for i in present:
        for j in present:
            target = i + j - n
            if target <= 0 or not keep(i, j, target):
                continue
            _accumulate(
                result,
                multiply(scaled_derive(scaled_derive(state, j), i), target))
    # 1/3 sum ij(n-i-j) d^3
    if n >= 3:
        for i, j, k in compositions(n, 3):
            if not keep(i, j, k):
                continue
            _accumulate(
                result,
                scaled_derive(scaled_derive(scaled_derive(state, k), j), i),
                Fraction(1, 3))
    # 1/3 sum q_i q_j q_{-n-i-j}
    if n <= -3:
        for i, j, k in compositions(-n, 3):
            if not keep(i, j, k):
                continue
            _accumulate(result, multiply(multiply(multiply(state, i), j), k),
                        Fraction(1, 3))
    return result


def _pair_weight(indices):
    a, b = indices
    return Fraction((a + 1) * (b + 1))


def _spin4_action(mono, n, odd):
    '''
    Q_n = 1/4 sum :aaaa: - 1/4 sum (a+1)(b+1) :ab: + (n+2)(n+3)/10 L_n.
    '''
    result = dict()
    _accumulate(result, normal_ordered_sum(mono, 4, n, odd=odd),
                Fraction(1, 4))
    _accumulate(result, normal_ordered_sum(mono, 2, n, _pair_weight, odd),
                Fraction(-1, 4))
    scale = Fraction((n + 2) * (n + 3), 10)
    if scale:
        _accumulate(result, _virasoro_action(mono, n, odd), scale)
    return result


_ACTIONS = {
    'alpha': _alpha_action,
    'L': _virasoro_action,
    'M': _spin3_action,
    'Q': _spin4_action,
}


@lru_cache(maxsize=None)
def node_action(kind, index, odd, mono):
    '''
    The action of one node on one monomial as a tuple of (monomial, rational).
    '''
    action = _ACTIONS[kind](mono, index, odd)
    return tuple(sorted(action.items()))


def apply_node(op, P):
    '''
    Apply a node operator to a QPolynomial. Raises CutoffError when the
    result needs a variable beyond P.cutoff.
    '''
    terms = dict()
    for mono, coeff in P.terms.items():
        for target, w in node_action(op.kind, op.index, op.odd_reduced, mono):
            terms[target] = terms.get(target, ZERO) + coeff * w
    return QPolynomial(terms, P.cutoff)


def apply_combination(combination, P):
    '''
    Apply sum c_i * node_i for a list of (coefficient, NodeOp) pairs.
    '''
    total = QPolynomial(cutoff=P.cutoff)
    for coeff, op in combination:
        total = total + apply_node(op, P).scale(coeff)
    return total
