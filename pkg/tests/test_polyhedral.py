#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains tests for Newton polyhedra and the relaxed polyhedra of the coordinate hyperplanes
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from newtonforms.core import consts, exceptions, exactpoly, polyhedral
from newtonforms.core.polyhedral import HalfSpace

from tests.corpus import poly, CORPUS, SPHERE, BRIESKORN, PLANE_CUBIC, DEGENERATE, SUSPENSION


def _compact(np):
    return sorted((h.normal, h.height) for h in np.compact_facets())


def test_dd_facets_homogenized_circle():
    facets = polyhedral.dd_facets([(2, 0, 1), (0, 2, 1), (1, 0, 0), (0, 1, 0)], homogenized=True)
    assert HalfSpace((1, 1), 2) in facets


def test_dd_facets_orthant():
    facets = polyhedral.dd_facets([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert sorted(h.normal for h in facets) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_dd_facets_rejects_flat_cone():
    with pytest.raises(exceptions.PolyhedronError):
        polyhedral.dd_facets([(1, 0, 0), (0, 1, 0)])
    with pytest.raises(exceptions.EmptyGeneratorError):
        polyhedral.dd_facets([(1, 0, 0)], homogenized=True)


def test_dd_facets_plane_cubic():
    generators = [(3, 0, 1), (1, 1, 1), (0, 3, 1), (1, 0, 0), (0, 1, 0)]
    compact = sorted((h.normal, h.height) for h in polyhedral.dd_facets(generators, homogenized=True)
                     if h.is_compact())
    assert compact == [((1, 2), 3), ((2, 1), 3)]


def test_dd_facets_empty():
    with pytest.raises(exceptions.EmptyGeneratorError):
        polyhedral.dd_facets([])


def test_newton_polyhedron_examples():
    np = polyhedral.newton_polyhedron(poly(SPHERE))
    assert _compact(np) == [((1, 1, 1), 2)]
    assert set(np.vertices) == {(2, 0, 0), (0, 2, 0), (0, 0, 2)}

    np = polyhedral.newton_polyhedron(poly(BRIESKORN))
    assert _compact(np) == [((15, 10, 6), 30)]
    assert set(np.vertices) == {(2, 0, 0), (0, 3, 0), (0, 0, 5)}

    np = polyhedral.newton_polyhedron(poly(PLANE_CUBIC))
    assert _compact(np) == [((1, 2), 3), ((2, 1), 3)]
    assert set(np.vertices) == {(3, 0), (1, 1), (0, 3)}


def test_newton_polyhedron_zero():
    with pytest.raises(exceptions.ZeroPolynomialError):
        polyhedral.newton_polyhedron(exactpoly.Poly.zero(2))


@pytest.mark.parametrize('text', CORPUS)
def test_oracle_equivalence(text):
    f = poly(text)
    np = polyhedral.newton_polyhedron(f)
    assert sorted(np.facets) == sorted(polyhedral.oracle_facets(f.support(), f.nvars))


@pytest.mark.parametrize('text', CORPUS)
def test_facet_vertex_duality(text):
    f = poly(text)
    np = polyhedral.newton_polyhedron(f)
    for vertex in np.vertices:
        tight = [h for h in np.facets if h.is_tight(vertex)]
        assert len(tight) >= f.nvars
    for point in f.support():
        assert all(h.contains(point) for h in np.facets)
    for facet in np.compact_facets():
        assert all(x > 0 for x in facet.normal)
        assert facet.height > 0


def test_compact_face_lattice():
    faces = polyhedral.compact_face_lattice(polyhedral.newton_polyhedron(poly(SPHERE)))
    assert sorted(face.dimension for face in faces) == [0, 0, 0, 1, 1, 1, 2]

    faces = polyhedral.compact_face_lattice(polyhedral.newton_polyhedron(poly(PLANE_CUBIC)))
    assert sorted(face.dimension for face in faces) == [0, 0, 0, 1, 1]

    np = polyhedral.newton_polyhedron(poly(DEGENERATE))
    faces = polyhedral.compact_face_lattice(np)
    assert _compact(np) == [((3, 3, 2), 6)]
    edge = [face for face in faces if set(face.vertices) == {(2, 0, 0), (0, 2, 0)}]
    assert edge and edge[0].dimension == 1
    assert exactpoly.dot((3, 3, 2), (1, 1, 0)) == 6


def test_height():
    np = polyhedral.newton_polyhedron(poly(SPHERE))
    assert polyhedral.height(np, (1, 1, 1)) == 2
    assert polyhedral.height(np, (1, 0, 0)) == 0
    assert polyhedral.height(polyhedral.newton_polyhedron(poly(BRIESKORN)), (15, 10, 6)) == 30
    with pytest.raises(exceptions.PreconditionError):
        polyhedral.height(np, (1, -1, 0))


def test_member():
    sphere = polyhedral.newton_polyhedron(poly(SPHERE))
    cubic = polyhedral.newton_polyhedron(poly(PLANE_CUBIC))
    assert polyhedral.member(sphere, (1, 1, 1), 1)
    assert polyhedral.member(sphere, (0, 0, 0), 0)
    assert not polyhedral.member(cubic, (0, 2), 1)
    assert polyhedral.member(cubic, (Fraction(3, 2), 0), Fraction(1, 2))
    with pytest.raises(exceptions.VariableCountError):
        polyhedral.member(cubic, (1, 1, 1), 1)


def test_filtration_value():
    assert polyhedral.filtration_value(polyhedral.newton_polyhedron(poly(SPHERE)), (1, 1, 1)) == Fraction(3, 2)
    assert polyhedral.filtration_value(polyhedral.newton_polyhedron(poly(PLANE_CUBIC)), (1, 1)) == 1
    assert polyhedral.filtration_value(polyhedral.newton_polyhedron(poly(BRIESKORN)), (2, 0, 0)) == 1


@settings(max_examples=80, deadline=None)
@given(st.tuples(*[st.integers(0, 6)] * 3), st.tuples(*[st.integers(0, 6)] * 3),
       st.fractions(min_value=0, max_value=4, max_denominator=6))
def test_membership_and_submultiplicativity(b, c, a):
    np = polyhedral.newton_polyhedron(poly(BRIESKORN))
    value_b = polyhedral.filtration_value(np, b)
    assert polyhedral.member(np, b, a) == (value_b >= a)
    total = tuple(x + y for x, y in zip(b, c))
    assert polyhedral.filtration_value(np, total) >= value_b + polyhedral.filtration_value(np, c)


def test_build_delta1():
    region = polyhedral.build_delta1(polyhedral.newton_polyhedron(poly(PLANE_CUBIC)), 1)
    assert [(h.normal, h.height) for h in region.halfspaces] == [((2, 1), 3)]

    region = polyhedral.build_delta1(polyhedral.newton_polyhedron(poly(SPHERE)), 1)
    assert [(h.normal, h.height) for h in region.halfspaces] == [((1, 1, 1), 2)]

    with pytest.raises(exceptions.VariableCountError):
        polyhedral.build_delta1(polyhedral.newton_polyhedron(poly(SPHERE)), 4)


@pytest.mark.parametrize('text', CORPUS)
def test_delta1_contains_delta(text):
    f = poly(text)
    np = polyhedral.newton_polyhedron(f)
    for axis in range(1, f.nvars + 1):
        region = polyhedral.build_delta1(np, axis)
        for b in polyhedral.enumerate_complement(region, 2, extra_bounds=[(axis, 3)]):
            assert not polyhedral.member(np, b, 2)
        assert polyhedral.delta1_facets_cover(np, axis)


def test_enumerate_complement():
    region = polyhedral.build_delta1(polyhedral.newton_polyhedron(poly(PLANE_CUBIC)), 1)
    assert polyhedral.enumerate_complement(region, 1, [(1, 1)]) == [(0, 0), (0, 1), (0, 2)]
    assert polyhedral.enumerate_complement(region, 2, [(1, 1)]) == [(0, j) for j in range(6)]
    assert polyhedral.enumerate_complement(region, 0, [(1, 1)]) == []


def test_enumerate_complement_cap():
    np = polyhedral.newton_polyhedron(poly(BRIESKORN))
    with pytest.raises(exceptions.EnumerationOverflowError):
        polyhedral.enumerate_complement(np, 50, cap=100)


@pytest.mark.parametrize('text', CORPUS)
def test_slab_equality(text):
    f = poly(text)
    np = polyhedral.newton_polyhedron(f)
    for axis in range(1, f.nvars + 1):
        assert polyhedral.slab_check(np, axis, random_points=200, seed=axis) == []


def test_polyhedron_json():
    np = polyhedral.newton_polyhedron(poly(SPHERE))
    data = polyhedral.polyhedron_to_json(np, with_faces=True)
    assert {'normal': [1, 1, 1], 'height': 2, 'compact': True} in data['facets']
    assert len(data['compact_faces']) == 7
    region = polyhedral.delta1_to_json(polyhedral.build_delta1(np, 2))
    assert region['axis'] == 2


def test_contact_rules_on_vertex_contact():
    np = polyhedral.newton_polyhedron(poly(SUSPENSION))
    assert _compact(np) == [((3, 2, 4), 6), ((3, 4, 2), 6)]

    region = polyhedral.build_delta1(np, 2)
    assert [(h.normal, h.height) for h in region.halfspaces] == [((3, 4, 2), 6)]
    assert [(h.normal, h.height) for h in region.low_dimensional_contacts] == [((3, 2, 4), 6)]
    assert (1, 1, 0) in polyhedral.slab_check(np, 2, random_points=50, seed=2)

    region = polyhedral.build_delta1(np, 2, contact_rule=consts.ContactRules.Vertex)
    assert len(region.halfspaces) == 2
    assert polyhedral.slab_check(np, 2, random_points=50, seed=2, contact_rule=consts.ContactRules.Vertex) == []
