#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains tests for dual fans and regular subdivisions
"""

import pytest

from newtonforms.core import exceptions, polyhedral, fan as fan_lib
from newtonforms.core.fan import Cone, Fan

from tests.corpus import poly, CORPUS, SPHERE, PLANE_CUBIC


def _dual(text):
    return fan_lib.dual_fan(polyhedral.newton_polyhedron(poly(text)))


def test_sphere_dual_fan():
    fan = _dual(SPHERE)
    assert len(fan.cones) == 3
    assert Cone([(0, 1, 0), (0, 0, 1), (1, 1, 1)]) in fan.cones
    assert fan_lib.is_regular(fan)
    assert fan_lib.check_support(fan)


def test_plane_cubic_dual_fan():
    fan = _dual(PLANE_CUBIC)
    assert sorted(cone.rays for cone in fan.cones) == [((0, 1), (1, 2)), ((1, 0), (2, 1)), ((1, 2), (2, 1))]
    assert fan.max_multiplicity() == 3


def test_multiplicity():
    assert fan_lib.cone_multiplicity(Cone([(1, 2), (2, 1)])) == 3
    assert fan_lib.cone_multiplicity(Cone([(1, 0, 0), (0, 1, 0), (1, 1, 1)])) == 1
    assert fan_lib.cone_multiplicity([(1, 1, 0)]) == 1
    assert fan_lib.cone_multiplicity([(2, 0, 1), (0, 2, 1)]) == 2
    with pytest.raises(exceptions.FanError):
        fan_lib.cone_multiplicity([(1, 1), (2, 2)])


def test_regularize_single_cone():
    fan = Fan(2, [[(1, 2), (2, 1)]])
    assert fan_lib.subdivision_point(fan.cones[0]) == (1, 1)
    result = fan_lib.regularize(fan)
    assert sorted(cone.rays for cone in result.cones) == [((1, 1), (1, 2)), ((1, 1), (2, 1))]
    assert result.subdivision_steps == 1
    assert fan_lib.is_regular(result)


def test_parallelepiped_points():
    points = fan_lib.parallelepiped_points(Cone([(1, 2), (2, 1)]))
    assert [point for point, _ in points] == [(1, 1), (2, 2)]


def test_star_subdivide():
    fan = Fan(2, [[(1, 0), (0, 1)]])
    result = fan_lib.star_subdivide(fan, (1, 1))
    assert len(result.cones) == 2
    assert result.subdivision_steps == 1
    assert fan_lib.check_support(result)
    assert fan_lib.refines(result, fan)


def test_triangulate_square_cone():
    fan = Fan(3, [[(1, 0, 0), (0, 1, 0), (1, 0, 1), (0, 1, 1)]])
    assert not fan.is_simplicial()
    result = fan_lib.triangulate(fan)
    assert len(result.cones) == 2
    assert result.is_simplicial()
    assert set(result.rays()) == set(fan.rays())


@pytest.mark.parametrize('text', CORPUS)
def test_regularize_corpus(text):
    dual = _dual(text)
    regular = fan_lib.regularize(dual)
    assert fan_lib.is_regular(regular)
    assert fan_lib.check_support(regular)
    assert fan_lib.refines(regular, dual)
    assert set(dual.rays()) <= set(regular.rays())
    assert fan_lib.regularize(regular) == regular


def test_refines_rejects_coarser():
    fine = fan_lib.regularize(_dual(PLANE_CUBIC))
    coarse = _dual(PLANE_CUBIC)
    assert fan_lib.refines(fine, coarse)
    assert not fan_lib.refines(coarse, fine)
    with pytest.raises(exceptions.FanError):
        fan_lib.refines(fine, Fan(2, [[(1, 2), (2, 1)]]))


def test_subdivision_cap():
    with pytest.raises(exceptions.SubdivisionCapError):
        fan_lib.regularize(Fan(2, [[(1, 0), (1, 7)]]), cap=1)


def test_make_ray():
    assert fan_lib.make_ray([1, 2, 0]) == (1, 2, 0)
    for direction in ([0, 0], [-1, 2], [2, 2]):
        with pytest.raises(exceptions.FanError):
            fan_lib.make_ray(direction)


def test_fan_json():
    fan = fan_lib.regularize(_dual(PLANE_CUBIC))
    data = fan_lib.fan_to_json(fan)
    assert data['dim'] == 2
    assert fan_lib.fan_from_json(data) == fan


@pytest.mark.parametrize('data', [
    {'dim': 2, 'rays': [[1, 0]], 'cones': [[3]]},
    {'rays': [[1, 0]], 'cones': [[0]]},
    {'dim': 2, 'rays': [[1, 0]], 'cones': []},
    {'dim': 2, 'rays': [['a', 0]], 'cones': [[0]]}
])
def test_fan_json_malformed(data):
    with pytest.raises(exceptions.FanError):
        fan_lib.fan_from_json(data)
