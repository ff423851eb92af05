#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains tests for monomial filtrations, multiplication maps and normalization
"""

import pytest
from hypothesis import given, settings, strategies as st

from newtonforms.core import consts, exceptions, exactpoly, polyhedral, filtration
from newtonforms.core.exactpoly import Poly
from newtonforms.core.filtration import MonomialSumSpace

from tests.corpus import poly, SPHERE, BRIESKORN, PLANE_CUBIC


def _sphere_space(dilation=1, k=1):
    return MonomialSumSpace(dilation, polyhedral.newton_polyhedron(poly(SPHERE)), [(k, k, k)])


def test_in_sum_space():
    space = _sphere_space()
    report = filtration.in_sum_space(poly('x1*x2*x3'), space)
    assert report.holds
    assert report.certificates == {(1, 1, 1): consts.Certificates.Dilate}

    report = filtration.in_sum_space(poly('x2', 3), space)
    assert not report.holds
    assert report.failures == [(0, 1, 0)]

    assert filtration.in_sum_space(Poly.zero(3), space).holds
    with pytest.raises(exceptions.VariableCountError):
        filtration.in_sum_space(poly('x1'), space)


def test_ideal_certificate():
    space = _sphere_space(dilation=3)
    report = filtration.in_sum_space(poly('x1*x2*x3 + x1^6'), space)
    assert report.certificates == {(1, 1, 1): consts.Certificates.Ideal, (6, 0, 0): consts.Certificates.Dilate}
    assert _sphere_space(dilation=0).certify((0, 0, 0)) == consts.Certificates.Dilate


def test_split_by_support():
    np = polyhedral.newton_polyhedron(poly(SPHERE))
    inside, outside = filtration.split_by_support(poly('x1^2 + x1 + x2*x3'), 1, np)
    assert inside == poly('x1^2 + x2*x3', 3)
    assert outside == poly('x1', 3)
    inside, outside = filtration.split_by_support(poly('x1 + 1', 3), -1, np)
    assert outside.is_zero()


def test_quotient_basis():
    np = polyhedral.newton_polyhedron(poly(PLANE_CUBIC))
    basis = filtration.quotient_basis(polyhedral.build_delta1(np, 1), 1, 1, 1)
    assert basis.exponents == [(0, 0), (0, 1), (0, 2)]
    assert basis.index()[(0, 2)] == 2


def test_lemma1_plane_cubic():
    report = filtration.lemma1_verify(poly(PLANE_CUBIC), 1, 1, 1)
    assert len(report.source) == 3
    assert len(report.target) == 6
    assert report.rank == 3
    assert report.injective
    assert report.kernel_vector is None
    assert report.to_json()['source_dimension'] == 3


def test_lemma1_empty_source():
    report = filtration.lemma1_verify(poly(SPHERE), 0, 1, 1)
    assert len(report.source) == 0
    assert len(report.target) == 3
    assert report.injective


@pytest.mark.parametrize('text', [SPHERE, BRIESKORN, PLANE_CUBIC])
def test_lemma1_sweep(text):
    f = poly(text)
    for axis in range(1, f.nvars + 1):
        for a in range(3):
            for k in range(1, 3):
                assert filtration.lemma1_verify(f, a, k, axis).injective


def test_lemma1_preconditions():
    with pytest.raises(exceptions.PreconditionError):
        filtration.lemma1_verify(poly(SPHERE), -1, 1, 1)
    with pytest.raises(exceptions.PreconditionError):
        filtration.lemma1_verify(poly(SPHERE), 1, 0, 1)
    with pytest.raises(exceptions.PreconditionError):
        filtration.lemma1_verify(poly('x1*x2 + x1^2'), 1, 1, 1)


def test_lemma23_example():
    f = poly(SPHERE)
    report = filtration.lemma23_verify(f, poly('x1*x2', 3), 2, 2)
    assert report.premise.holds
    assert report.conclusion.holds
    assert report.within_hypothesis
    assert not report.counterexample
    assert report.to_json()['variant'] == consts.IdealKinds.AllAxes


def test_lemma23_outside_hypothesis():
    report = filtration.lemma23_verify(poly(SPHERE), poly('x1*x2', 3), 2, 3)
    assert not report.within_hypothesis
    assert not report.counterexample


def test_lemma2_single_axis():
    report = filtration.lemma2_verify(poly(SPHERE), poly('x1*x2', 3), 2, 1, axis=3)
    assert report.variant == consts.IdealKinds.SingleAxis
    assert report.holds
    with pytest.raises(exceptions.VariableCountError):
        filtration.lemma2_verify(poly(SPHERE), poly('x1', 3), 2, 1, axis=4)


@pytest.mark.parametrize('text', [SPHERE, PLANE_CUBIC])
def test_lemma3_trials(text):
    report = filtration.lemma3_trials(poly(text), trials=15, seed=7)
    assert report.trials + report.skipped == 15
    assert report.passed
    assert report.to_json()['name'] == 'lemma3'


def test_lemma3_trials_deterministic():
    first = filtration.lemma3_trials(poly(PLANE_CUBIC), trials=10, seed=3).to_json()
    second = filtration.lemma3_trials(poly(PLANE_CUBIC), trials=10, seed=3).to_json()
    assert first == second


def test_normalize_representative():
    f = poly(SPHERE)
    h = poly('x1*x2*x3')
    assert filtration.normalize_representative(f, h, Poly.zero(3), 1) == h
    improved = filtration.normalize_representative(f, h + f, Poly.constant(1, 3), 1)
    assert improved == h


def test_normalize_preconditions():
    f = poly(SPHERE)
    with pytest.raises(exceptions.PreconditionError):
        filtration.normalize_representative(f, poly('x1*x2*x3'), Poly.zero(3), 0)
    with pytest.raises(exceptions.PreconditionError):
        filtration.normalize_representative(f, poly('x1', 3), Poly.zero(3), 1)
    with pytest.raises(exceptions.PreconditionError):
        filtration.normalize_representative(f, poly('x1^2', 3), Poly.zero(3), 1)


@pytest.mark.parametrize('text,m', [(SPHERE, 1), (SPHERE, 2), (BRIESKORN, 1), (PLANE_CUBIC, 2)])
def test_normalization_trials(text, m):
    report = filtration.normalization_trials(poly(text), m, trials=10, seed=11)
    assert report.trials + report.skipped == 10
    assert report.passed


def test_logform_basis():
    assert filtration.logform_basis(poly(SPHERE), 1, 3) == [(1, 1, 1)]
    assert filtration.logform_basis(poly(BRIESKORN), 1, 3) == [(1, 1, 1)]
    assert filtration.logform_basis(poly(SPHERE), 1, 2) == []
    basis = filtration.logform_basis(poly(PLANE_CUBIC), 2, 5)
    assert (2, 2) in basis and (2, 3) in basis
    with pytest.raises(exceptions.PreconditionError):
        filtration.logform_basis(poly(SPHERE), 0, 3)


@settings(max_examples=60, deadline=None)
@given(st.tuples(*[st.integers(0, 5)] * 3), st.tuples(*[st.integers(0, 5)] * 3),
       st.integers(0, 3), st.integers(0, 3))
def test_filtration_compatible_with_products(b, c, a1, a2):
    np = polyhedral.newton_polyhedron(poly(BRIESKORN))
    p = Poly.monomial(b)
    q = Poly.monomial(c)
    if not (filtration.in_sum_space(p, MonomialSumSpace(a1, np)).holds and
            filtration.in_sum_space(q, MonomialSumSpace(a2, np)).holds):
        return
    assert filtration.in_sum_space(p * q, MonomialSumSpace(a1 + a2, np)).holds
    assert exactpoly.dot((15, 10, 6), [x + y for x, y in zip(b, c)]) >= 30 * (a1 + a2)
