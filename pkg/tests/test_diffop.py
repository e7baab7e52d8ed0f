#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for `kptau.diffop` and `kptau.models`."""

import random
from fractions import Fraction

import pytest
import sympy

from kptau.diffop import (D, DiffOp, diffop_adjoint, diffop_mul,
                          laurent_mul, residue, to_D_form, z)
from kptau.errors import EngineError, NotInSubalgebraError
from kptau.models import (Model, build_model_ops, closed_form_r_bgw,
                          generic_symbol, gkm_r_direct, strip_hbar)
from kptau.pipeline import check_algebra, random_diffop, random_laurent
from kptau.scalars import HBAR, N


def op(terms):
    return DiffOp(dict((key, Fraction(c)) for key, c in terms.items()))


def test_mul_leibniz():
    assert diffop_mul(D, z(1)) == op({(1, 1): 1, (1, 0): 1})


def test_mul_acts_like_composition():
    a = DiffOp.monomial(-1, 1)
    product = diffop_mul(a, a)
    assert product == op({(-2, 2): 1, (-2, 1): -1})
    for k in range(-4, 5):
        series = {k: 1}
        assert product.apply_to_laurent(series) == \
            a.apply_to_laurent(a.apply_to_laurent(series))


def test_mul_associative():
    rng = random.Random(7)
    for _ in range(10):
        a, b, c = [random_diffop(rng) for _ in range(3)]
        assert diffop_mul(diffop_mul(a, b), c) == \
            diffop_mul(a, diffop_mul(b, c))


@pytest.mark.parametrize('a, expected', [
    (z(-3), z(-3)),
    (DiffOp.monomial(-1, 1), op({(-1, 1): -1})),
    (DiffOp.monomial(-3, 1), op({(-3, 1): -1, (-3, 0): 2})),
])
def test_adjoint_examples(a, expected):
    assert diffop_adjoint(a) == expected


def test_adjoint_residue_pairing():
    rng = random.Random(11)
    for _ in range(20):
        a = random_diffop(rng)
        f, g = random_laurent(rng), random_laurent(rng)
        assert residue(laurent_mul(f, a.apply_to_laurent(g))) == \
            residue(laurent_mul(g, diffop_adjoint(a).apply_to_laurent(f)))


@pytest.mark.parametrize('seed', [1, 20, 300])
def test_algebra_suite(seed):
    assert check_algebra(seed).passed


def test_random_laurent_span():
    rng = random.Random(5)
    powers = set()
    for _ in range(40):
        powers.update(random_laurent(rng, 12))
    assert max(abs(p) for p in powers) == 12
    assert all(abs(p) <= 3 for p in random_laurent(rng, 3))
    assert check_algebra(7, trials=5, span=3).passed


@pytest.mark.parametrize('n, k, expected', [
    (0, 1, op({(-1, 1): 1})),
    (1, 1, op({(0, 1): 1})),
    (0, 2, op({(-2, 2): 1, (-2, 1): -1})),
])
def test_to_D_form(n, k, expected):
    assert to_D_form(n, k) == expected


def test_kw_operator_product():
    ops = build_model_ops('kw')
    expected = op({
        (0, 1): -1,
        (-3, 2): Fraction(3, 2), (-3, 1): -3, (-3, 0): Fraction(5, 8),
        (-6, 3): Fraction(-1, 2), (-6, 2): Fraction(15, 4),
        (-6, 1): Fraction(-59, 8), (-6, 0): Fraction(45, 16),
    })
    assert diffop_mul(ops.K_star, ops.P_star) == expected


def test_kw_r():
    R = build_model_ops(Model('gkm', 1)).R
    assert R == op({
        (-3, 2): Fraction(-3, 2), (-3, 1): 3, (-3, 0): Fraction(-5, 8),
        (-6, 3): Fraction(1, 2), (-6, 2): Fraction(-15, 4),
        (-6, 1): Fraction(59, 8), (-6, 0): Fraction(-45, 16),
    })
    assert build_model_ops('kw').X == z(2) * Fraction(1, 2)


@pytest.mark.parametrize('n', [1, 2, 3])
def test_gkm_r_closed_form(n):
    R = build_model_ops(Model('gkm', n)).R
    assert R == gkm_r_direct(n)
    assert R.in_d_minus()
    assert min(R.grade_components()) >= 1


def test_bgw_p_star():
    expected = DiffOp.polynomial_in_d(
        -2, {2: 1, 1: -1, 0: Fraction(1, 4)}) * (HBAR * HBAR * Fraction(1, 4)) \
        - DiffOp.monomial(-1, 1, HBAR) \
        - z(-2) * (N * N * HBAR * HBAR * Fraction(1, 4))
    assert build_model_ops('bgw').P_star == expected


def test_bgw_r_against_closed_form():
    ops = build_model_ops('bgw')
    assert ops.R.in_d_minus()
    assert ops.R - closed_form_r_bgw() == ops.P_star * Fraction(1, 2)


def test_strip_hbar():
    R = generic_symbol('bgw')
    assert all(c.h_exponents() <= set([0]) for c in R.terms.values())
    assert sorted(R.grade_components()) == [1, 2]
    with pytest.raises(ValueError):
        strip_hbar(DiffOp.monomial(-1, 0, 1))


def test_model_parse():
    assert Model.parse('gkm:2') == Model('gkm', 2)
    assert str(Model.parse(' BGW ')) == 'bgw'
    assert Model.parse('kw').n == 1
    with pytest.raises(EngineError):
        Model.parse('gkm:x')
    with pytest.raises(EngineError):
        Model.parse('hermitian')


def test_require_d_minus():
    with pytest.raises(NotInSubalgebraError):
        (z(-1) + D).require_d_minus()


def _sympy_apply(a, expr, var):
    """Apply a constant-coefficient DiffOp to a sympy expression in var."""
    result = 0
    for (n, m), coeff in a.terms.items():
        term = expr
        for _ in range(m):
            term = var * sympy.diff(term, var)
        value = coeff.constant()
        result += sympy.Rational(value.numerator, value.denominator) * \
            var ** n * term
    return result


def test_mul_against_sympy():
    var = sympy.Symbol('z')
    rng = random.Random(5)
    for _ in range(5):
        a, b = random_diffop(rng), random_diffop(rng)
        product = diffop_mul(a, b)
        for k in range(-3, 4):
            expected = _sympy_apply(a, _sympy_apply(b, var ** k, var), var)
            assert sympy.simplify(
                _sympy_apply(product, var ** k, var) - expected) == 0


@pytest.mark.parametrize('n, k', [(0, 1), (2, 2), (-1, 3)])
def test_to_D_form_against_sympy(n, k):
    var = sympy.Symbol('z')
    for power in range(-2, 5):
        expected = var ** n * sympy.diff(var ** power, var, k)
        assert sympy.simplify(
            _sympy_apply(to_D_form(n, k), var ** power, var) - expected) == 0
