#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for `kptau.solver`, `kptau.graded` and `kptau.cut_and_join`."""

from fractions import Fraction
from math import factorial

import pytest

from kptau.cut_and_join import (cut_and_join_operator, cut_sum,
                                exponential_series, join_sum, w_bgw, w_kw)
from kptau.diffop import DiffOp
from kptau.errors import EngineError, NotInSubalgebraError
from kptau.fock import QPolynomial, monomial_from_dict
from kptau.graded import (GradedOperator, _apply_nodes_to_monomial,
                          apply_graded, build_w_operator)
from kptau.nodes import L, M, alpha
from kptau.parallel import parallel_map, set_threads
from kptau.scalars import N, ParamPoly
from kptau.solver import (TauSeries, cut_and_join_exp, oe_solve,
                          recursion_residual, series_compare, tau_model)


def q(exponents, coeff=1):
    return QPolynomial.from_monomial(monomial_from_dict(exponents), coeff)


@pytest.fixture(scope='module')
def kw_nodes():
    return tau_model('kw', 'nodes', 12)


@pytest.fixture(scope='module')
def bgw_nodes():
    return tau_model('bgw', 'nodes', 10)


def test_commutative_generator_gives_exponential():
    W = GradedOperator({1: [(2, alpha(-1))]})
    tau = oe_solve(W, 5)
    for d in range(6):
        assert tau.component(d) == q({1: d}, Fraction(2 ** d, factorial(d)))


def test_kw_first_terms(kw_nodes):
    assert kw_nodes.component(3) == \
        q({1: 3}, Fraction(1, 6)) + q({3: 1}, Fraction(1, 24))
    assert kw_nodes.grades() == [0, 3, 6, 9, 12]


def test_bgw_first_terms(bgw_nodes):
    c = ParamPoly.const(Fraction(1, 4)) - N * N
    assert bgw_nodes.component(1) == q({1: 1}, c * Fraction(1, 4))
    assert bgw_nodes.component(2) == \
        q({1: 2}, c * (c + 2) * Fraction(1, 32))


def test_bgw_depends_on_n_squared(bgw_nodes):
    assert bgw_nodes.only_even_in_n()


def test_kw_engines_agree(kw_nodes, calibrated):
    cut_join = tau_model('kw', 'cutjoin', 12)
    fermionic = tau_model('gkm:1', 'fermionic', 12)
    assert not series_compare(kw_nodes, cut_join)
    assert not series_compare(kw_nodes, fermionic)


def test_bgw_engines_agree(bgw_nodes, calibrated):
    cut_join = tau_model('bgw', 'cutjoin', 10)
    fermionic = tau_model('bgw', 'fermionic', 10)
    assert not series_compare(bgw_nodes, cut_join)
    assert not series_compare(bgw_nodes, fermionic)
    assert cut_join.only_even_in_n()
    assert fermionic.only_even_in_n()


def test_only_odd_variables(kw_nodes, bgw_nodes):
    assert not kw_nodes.total().has_even_variables()
    assert not bgw_nodes.total().has_even_variables()


@pytest.mark.parametrize('model', ['kw', 'bgw'])
def test_recursion_residual_vanishes(model):
    tau = tau_model(model, 'nodes', 6)
    assert not recursion_residual(build_w_operator(model), tau)


def test_gkm_series_is_graded(calibrated):
    tau = tau_model('gkm:2', 'fermionic', 6)
    assert tau.component(0) == QPolynomial.one()
    for d in tau.grades():
        assert tau.component(d).is_homogeneous(d)


def test_engine_choice_errors():
    with pytest.raises(EngineError):
        tau_model('gkm:2', 'nodes', 4)
    with pytest.raises(EngineError):
        tau_model('gkm:2', 'cutjoin', 4)
    with pytest.raises(EngineError):
        tau_model('kw', 'matrix', 4)
    with pytest.raises(EngineError):
        oe_solve(GradedOperator({0: [(1, L(0))]}), 3)
    with pytest.raises(EngineError):
        oe_solve(build_w_operator('kw'), -1)


def test_graded_operator_validation():
    with pytest.raises(EngineError):
        GradedOperator({2: [(1, M(-3))]})
    with pytest.raises(NotInSubalgebraError):
        GradedOperator({2: DiffOp.monomial(-3, 1)})
    W = GradedOperator.from_symbol(DiffOp.monomial(-1, 1) + DiffOp.monomial(-2, 0))
    assert W.grades() == [1, 2]
    assert W.uses_fermions


def test_apply_graded_respects_cap():
    W = build_w_operator('kw')
    image = apply_graded(W, QPolynomial.one(), 4)
    assert image == q({1: 3}, Fraction(1, 2)) + q({3: 1}, Fraction(1, 8))


def test_series_json_and_hbar(bgw_nodes):
    assert TauSeries.from_json(bgw_nodes.to_json()) == bgw_nodes
    with_h = bgw_nodes.with_hbar()
    assert with_h.hbar
    assert with_h.component(2).coefficients()[0].h_exponents() == set([2])
    assert with_h.with_hbar() is with_h


def test_series_compare_reports_first_grade(kw_nodes):
    other = TauSeries('kw', kw_nodes.degree, dict(kw_nodes.components),
                      'nodes')
    other.components[6] = other.components[6] + q({3: 2})
    diff = series_compare(kw_nodes, other)
    assert diff.first_grade == 6
    assert 'grade 6' in str(diff)
    with pytest.raises(EngineError):
        series_compare(kw_nodes, tau_model('kw', 'nodes', 3))


def test_join_and_cut():
    assert join_sum(q({1: 1}), 1) == q({1: 2})
    assert cut_sum(q({1: 2}), 1) == q({3: 1}, 2)
    assert join_sum(QPolynomial.one(), 3) == 0


def test_cut_and_join_actions_on_one():
    assert w_kw(QPolynomial.one()) == \
        q({1: 3}, Fraction(1, 6)) + q({3: 1}, Fraction(1, 24))
    assert w_bgw(QPolynomial.one()) == \
        q({1: 1}, ParamPoly.const(Fraction(1, 16)) - N * N * Fraction(1, 4))


def test_cut_and_join_exponential():
    assert exponential_series('kw', 3) == QPolynomial.one() + \
        q({1: 3}, Fraction(1, 6)) + q({3: 1}, Fraction(1, 24))
    assert cut_and_join_exp('kw', 3).grades() == [0, 3]
    with pytest.raises(EngineError):
        cut_and_join_operator('gkm:2')


def test_parallel_map_keeps_order():
    assert parallel_map(abs, [-1, 2, -3, 4], threads=2, min_tasks=1) == \
        [1, 2, 3, 4]
    with pytest.raises(ValueError):
        set_threads(0)


def test_pool_matches_inline():
    tau = tau_model('kw', 'nodes', 6)
    component = build_w_operator('kw').components[3]
    tasks = [(component, mono) for mono in sorted(tau.total().terms)]
    assert parallel_map(_apply_nodes_to_monomial, tasks, threads=2,
                        min_tasks=1) == \
        [_apply_nodes_to_monomial(task) for task in tasks]
