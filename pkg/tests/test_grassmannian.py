#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for `kptau.grassmannian`."""

import random
from fractions import Fraction

import pytest

from kptau.diffop import DiffOp
from kptau.grassmannian import (BasisVector, check_orthogonality,
                                grassmannian_basis, miwa_crosscheck,
                                model_basis, verify_basis)
from kptau.models import generic_symbol
from kptau.scalars import ParamPoly
from kptau.solver import tau_model


def test_trivial_point():
    basis = grassmannian_basis(DiffOp(), 4, 6)
    for j, vector in enumerate(basis, 1):
        assert vector.laurent() == {j - 1: 1}
        assert vector.leading_power == j - 1


def test_kw_first_coefficients():
    phi = model_basis('kw', 1, 6)[0]
    assert phi.coefficient(0) == 1
    assert phi.coefficient(-3) == Fraction(-5, 24)
    assert phi.coefficient(-1) == 0


def test_bgw_first_coefficients():
    phi = model_basis('bgw', 1, 4, {'N': 0})[0]
    assert phi.coefficient(-1) == Fraction(-1, 16)
    assert phi.coefficient(-2) == Fraction(9, 512)


@pytest.mark.parametrize('model, bindings', [
    ('kw', None), ('bgw', None), ('bgw', {'N': 0}), ('gkm:2', None)])
def test_basis_relation(model, bindings):
    b = generic_symbol(model)
    if bindings:
        b = b.substitute(bindings)
    basis = grassmannian_basis(b, 4, 8)
    assert verify_basis(b, basis).passed


def test_basis_relation_detects_damage():
    b = generic_symbol('kw')
    basis = grassmannian_basis(b, 3, 8)
    coefficients = dict(basis[1].coefficients)
    coefficients[-4] = coefficients.get(-4, ParamPoly()) + 1
    damaged = BasisVector(2, coefficients, 8)
    assert not verify_basis(b, [basis[0], damaged, basis[2]]).passed


def test_miwa_kw():
    tau = tau_model('kw', 'nodes', 8)
    report = miwa_crosscheck(tau, model_basis('kw', 1, 8), 8)
    assert report.passed
    assert report.details['sign'] == -1


def test_miwa_bgw_at_zero_n():
    bindings = {'N': Fraction(0)}
    tau = tau_model('bgw', 'nodes', 8).substitute(bindings)
    report = miwa_crosscheck(tau, model_basis('bgw', 1, 8, bindings), 8)
    assert report.passed


def test_miwa_mismatch_reports_both_signs():
    tau = tau_model('kw', 'nodes', 6)
    report = miwa_crosscheck(tau, grassmannian_basis(DiffOp(), 1, 6), 6)
    assert not report.passed
    assert report.details['sign'] is None
    assert sorted(report.residual.parts) == [-1, 1]


def _dual_pair(count, order, seed):
    rng = random.Random(seed)
    a = dict(((i, j), Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
             for i in range(1, count + 1) for j in range(1, order + 1))
    A = [BasisVector(i, dict([(i - 1, 1)] + [(-j, a[(i, j)])
                                             for j in range(1, order + 1)]),
                     order) for i in range(1, count + 1)]
    B = [BasisVector(j, dict([(j - 1, 1)] + [(-i, -a[(i, j)])
                                             for i in range(1, count + 1)]),
                     order) for j in range(1, count + 1)]
    return A, B


@pytest.mark.parametrize('seed', [3, 4, 5])
def test_orthogonality(seed):
    A, B = _dual_pair(4, 4, seed)
    assert check_orthogonality(A, B).passed


def test_orthogonality_detects_perturbation():
    A, B = _dual_pair(3, 3, 9)
    coefficients = dict(B[1].coefficients)
    coefficients[-1] = coefficients.get(-1, ParamPoly()) + 1
    B[1] = BasisVector(2, coefficients, 3)
    assert not check_orthogonality(A, B).passed


def test_basis_vector_json():
    vector = BasisVector(2, {1: 1, -2: Fraction(3, 4)}, 4, {2: Fraction(1)})
    record = vector.to_json()
    assert record['coefficients'] == [{'power': 1, 'coeff': '1'},
                                      {'power': -2, 'coeff': '3/4'}]
    assert str(vector) == 'z + 3/4*z^-2'
    assert vector.tail() == {2: Fraction(3, 4)}
