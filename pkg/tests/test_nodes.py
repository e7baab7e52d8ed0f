#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for `kptau.nodes`."""

from fractions import Fraction

import pytest

from kptau.fock import (QPolynomial, is_odd_monomial, monomial_from_dict,
                        monomials_up_to)
from kptau.nodes import (L, M, NodeOp, Q, alpha, apply_combination,
                         apply_node, compositions)

STATES = [QPolynomial.from_monomial(m) for m in monomials_up_to(8)]
FREE_BOSON_STATES = [QPolynomial.from_monomial(m) for m in monomials_up_to(10)]
ODD_STATES = [QPolynomial.from_monomial(m)
              for m in monomials_up_to(7, odd_only=True)]
MODES = range(-4, 5)


def q(exponents, coeff=1):
    return QPolynomial.from_monomial(monomial_from_dict(exponents), coeff)


def commutator(a, b, P):
    return apply_node(a, apply_node(b, P)) - apply_node(b, apply_node(a, P))


def test_nodeop_descriptor():
    op = L(-2)
    assert op == NodeOp('L', -2)
    assert op.grade_shift == 2
    assert str(op.odd()) == 'Lodd[-2]'
    assert op.odd() != op
    with pytest.raises(ValueError):
        NodeOp('W', 1)


def test_compositions():
    assert list(compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]
    assert list(compositions(4, 2, lambda k: k % 2)) == [(1, 3), (3, 1)]


@pytest.mark.parametrize('op, expected', [
    (alpha(-2), q({2: 1})),
    (L(-2), q({1: 2}, Fraction(1, 2))),
    (M(-3), q({1: 3}, Fraction(1, 3))),
    (Q(-2), QPolynomial()),
    (L(0), QPolynomial()),
    (alpha(0), QPolynomial()),
])
def test_action_on_one(op, expected):
    assert apply_node(op, QPolynomial.one()) == expected


def test_heisenberg_on_variables():
    assert apply_node(alpha(-3), q({1: 1})) == q({1: 1, 3: 1})
    assert apply_node(alpha(3), q({3: 1})) == QPolynomial.one().scale(3)


def test_l0_counts_grade():
    for P in STATES:
        assert apply_node(L(0), P) == P.scale(P.grades()[0])


@pytest.mark.parametrize('m', MODES)
def test_heisenberg(m):
    for n in MODES:
        central = m if m + n == 0 else 0
        for P in FREE_BOSON_STATES:
            assert commutator(alpha(m), alpha(n), P) == P.scale(central)


@pytest.mark.parametrize('m', MODES)
def test_virasoro_algebra(m):
    for n in MODES:
        central = Fraction(m ** 3 - m, 12) if m + n == 0 else 0
        for P in STATES:
            expected = apply_node(L(m + n), P).scale(m - n) + \
                P.scale(central)
            assert commutator(L(m), L(n), P) == expected, (m, n)


@pytest.mark.parametrize('m', MODES)
def test_virasoro_moves_heisenberg(m):
    for n in MODES:
        for P in STATES:
            expected = apply_node(alpha(m + n), P).scale(-n)
            assert commutator(L(m), alpha(n), P) == expected, (m, n)


@pytest.mark.parametrize('op', [
    L(-2, True), L(2, True), M(-1, True), M(-3, True), Q(-2, True),
    Q(-6, True), L(0, True)])
def test_odd_reduction_keeps_odd_states(op):
    for P in ODD_STATES:
        image = apply_node(op, P)
        assert all(is_odd_monomial(mono) for mono in image.terms)


@pytest.mark.parametrize('kind', [L, M, Q])
@pytest.mark.parametrize('n', [-6, -3, -2, -1, 0, 1, 2, 4])
def test_odd_reduction_is_odd_part_of_full_action(kind, n):
    for P in ODD_STATES:
        assert apply_node(kind(n, True), P) == \
            apply_node(kind(n), P).odd_part()


def test_odd_l0_matches_l0_on_odd_states():
    for P in ODD_STATES:
        assert apply_node(L(0, True), P) == apply_node(L(0), P)


def test_odd_spin4_on_q1():
    assert apply_node(Q(-2, True), q({1: 1})) == q({1: 3}) + q({3: 1}, 2)


def test_apply_combination():
    combination = [(Fraction(3, 2), M(-3)), (Fraction(1, 8), alpha(-3))]
    assert apply_combination(combination, QPolynomial.one()) == \
        q({1: 3}, Fraction(1, 2)) + q({3: 1}, Fraction(1, 8))
