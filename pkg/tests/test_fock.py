#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for `kptau.fock`."""

from fractions import Fraction

import pytest

from kptau.errors import CutoffError
from kptau.fock import (QPolynomial, format_monomial, grade_decompose,
                        monomial_from_dict, monomial_grade, monomials_up_to,
                        parse_monomial, partitions)


def q(exponents, coeff=1, cutoff=None):
    return QPolynomial.from_monomial(monomial_from_dict(exponents), coeff,
                                     cutoff)


def test_monomial_text():
    mono = monomial_from_dict({3: 1, 1: 3})
    assert mono == ((1, 3), (3, 1))
    assert format_monomial(mono) == 'q1^3*q3'
    assert parse_monomial('q1^3*q3') == mono
    assert parse_monomial('1') == ()
    assert monomial_grade(mono) == 6
    with pytest.raises(ValueError):
        parse_monomial('x2')


def test_partitions_count():
    assert [len(list(partitions(n))) for n in range(8)] == \
        [1, 1, 2, 3, 5, 7, 11, 15]
    assert len(monomials_up_to(6, odd_only=True)) == 1 + 1 + 1 + 2 + 2 + 3 + 4


def test_arithmetic_and_str():
    P = q({1: 3}, Fraction(1, 6)) + q({3: 1}, Fraction(1, 24))
    assert str(P) == '1/6*q1^3 + 1/24*q3'
    assert P - P == 0
    assert (P * P).grades() == [6]
    assert P.derivative(1) == q({1: 2}, Fraction(1, 2))


def test_cutoff_is_enforced():
    P = QPolynomial.one(cutoff=3)
    assert P.multiply_var(3) == q({3: 1})
    with pytest.raises(CutoffError):
        P.multiply_var(4)
    with pytest.raises(CutoffError):
        q({5: 1}, cutoff=4)


def test_grades_and_truncation():
    P = QPolynomial.one() + q({1: 1}) + q({2: 1}) + q({1: 2})
    assert P.grades() == [0, 1, 2]
    assert P.truncate(1) == QPolynomial.one() + q({1: 1})
    assert sorted(grade_decompose(P)) == [0, 1, 2]
    assert P.odd_part() == QPolynomial.one() + q({1: 1}) + q({1: 2})
    assert P.has_even_variables()


def test_miwa_specialize():
    P = q({1: 3}, Fraction(1, 6)) + q({3: 1}, Fraction(1, 24))
    assert P.miwa_specialize(-1) == {-3: Fraction(-5, 24)}
    assert P.miwa_specialize(1) == {-3: Fraction(5, 24)}


def test_json_records():
    P = q({1: 3}, Fraction(1, 6))
    assert P.to_json() == [{'monomial': {'1': 3}, 'coeff': '1/6'}]
    assert QPolynomial.from_json(P.to_json()) == P
