'''
Partitions, Maya (bead) diagrams and the Schur / power-sum change of basis.

A partition of length l is encoded by the bead positions x_i = lambda_i - i,
i = 1..L for any padding L >= l; every position below -L is occupied by the
Dirac sea. Multiplying by p_k moves one bead up by k with sign (-1) to the
number of beads jumped over, which is the Murnaghan-Nakayama rule.
'''

from fractions import Fraction
from functools import lru_cache
from math import factorial

import regex as re

from .fock import partition_to_monomial, partitions

_PARTITION = re.compile(r'^\[\s*(\d+(?:\s*,\s*\d+)*)?\s*\]$')


def canonical_partition(parts):
    parts = tuple(sorted((int(p) for p in parts if int(p)), reverse=True))
    if parts and parts[-1] < 0:
        raise ValueError('Partitions have non-negative parts: {}.'.format(
            parts))
    return parts


def format_partition(parts):
    return '[{}]'.format(','.join(str(p) for p in parts))


def parse_partition(text):
    match = _PARTITION.match(text.strip())
    if not match:
        raise ValueError('Cannot read partition {!r}.'.format(text))
    if not match.group(1):
        return ()
    return canonical_partition(p for p in match.group(1).split(','))


def to_beads(parts, length):
    '''
    Bead positions of a partition padded to `length` rows, top row first.
    '''
    padded = list(parts) + [0] * (length - len(parts))
    return [padded[i] - (i + 1) for i in range(length)]


def from_beads(beads):
    '''
    Inverse of to_beads for any padding.
    '''
    ordered = sorted(beads, reverse=True)
    return canonical_partition(x + i + 1 for i, x in enumerate(ordered))


def _jumped(beads, low, high):
    return sum(1 for y in beads if low < y < high)


def add_strips(parts, k):
    '''
    All (sign, nu) with nu / lambda a border strip of size k; sign is
    (-1)^(height of the strip).
    '''
    beads = to_beads(parts, len(parts) + k)
    occupied = set(beads)
    result = []
    for x in beads:
        if x + k in occupied:
            continue
        sign = -1 if _jumped(beads, x, x + k) % 2 else 1
        moved = [y for y in beads if y != x] + [x + k]
        result.append((sign, from_beads(moved)))
    return result


def remove_strips(parts, k):
    '''
    All (sign, nu) with lambda / nu a border strip of size k.
    '''
    length = len(parts)
    beads = to_beads(parts, length)
    occupied = set(beads)
    result = []
    for x in beads:
        target = x - k
        if target < -length or target in occupied:
            continue
        sign = -1 if _jumped(beads, target, x) % 2 else 1
        moved = [y for y in beads if y != x] + [target]
        result.append((sign, from_beads(moved)))
    return result


@lru_cache(maxsize=None)
def murnaghan_nakayama(shape, cycle_type):
    '''
    chi^shape(cycle_type) by recursive rim-hook removal.
    '''
    if not cycle_type:
        return 1 if not shape else 0
    head, rest = cycle_type[0], cycle_type[1:]
    return sum(sign * murnaghan_nakayama(smaller, rest)
               for sign, smaller in remove_strips(shape, head))


@lru_cache(maxsize=None)
def character_table(n):
    '''
    {lambda: {mu: chi^lambda(mu)}} for |lambda| = |mu| = n, built by
    expanding p_mu |0> with bead moves.
    '''
    table = dict((shape, dict()) for shape in partitions(n))
    for cycle_type in partitions(n):
        state = {(): 1}
        for k in cycle_type:
            moved = dict()
            for shape, c in state.items():
                for sign, bigger in add_strips(shape, k):
                    moved[bigger] = moved.get(bigger, 0) + sign * c
            state = dict((s, c) for s, c in moved.items() if c)
        for shape, value in state.items():
            table[shape][cycle_type] = value
    return table


def z_mu(cycle_type):
    '''
    The centralizer order prod_k k^m_k * m_k!.
    '''
    counts = dict()
    for k in cycle_type:
        counts[k] = counts.get(k, 0) + 1
    result = 1
    for k, m in counts.items():
        result *= k ** m * factorial(m)
    return result


def schur_to_power_sum(shape):
    '''
    s_lambda = sum_mu chi^lambda(mu) p_mu / z_mu as {monomial: Fraction}.
    '''
    shape = canonical_partition(shape)
    row = character_table(sum(shape))[shape]
    return dict(
        (partition_to_monomial(mu), Fraction(chi, z_mu(mu)))
        for mu, chi in row.items() if chi)


def power_sum_to_schur(cycle_type):
    '''
    p_mu = sum_lambda chi^lambda(mu) s_lambda as {partition: int}.
    '''
    cycle_type = canonical_partition(cycle_type)
    table = character_table(sum(cycle_type))
    return dict(
        (shape, row[cycle_type]) for shape, row in table.items()
        if row.get(cycle_type))
