#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains dual fans of Newton polyhedra and their regular (unimodular) subdivisions
"""

from __future__ import print_function, division, absolute_import

import logging
import itertools
from math import gcd
from functools import reduce

import sympy

from newtonforms.core import consts, exceptions
from newtonforms.core import exactpoly, polyhedral

logger = logging.getLogger('newtonforms')


def make_ray(direction):
    """
    Validates and returns a ray direction: a primitive, nonzero, nonnegative integer tuple
    """

    direction = tuple(int(x) for x in direction)
    if not any(direction):
        raise exceptions.FanError('Ray direction must be nonzero')
    if any(x < 0 for x in direction):
        raise exceptions.FanError('Ray {} leaves the nonnegative orthant'.format(direction))
    if reduce(gcd, direction, 0) != 1:
        raise exceptions.FanError('Ray {} is not primitive'.format(direction))
    return direction


def unit_ray(index, dimension):
    return tuple(1 if j == index - 1 else 0 for j in range(dimension))


def is_coordinate_ray(ray):
    return sum(ray) == 1


class Cone(object):
    """
    Simplicial or not, a cone is given by its primitive rays (kept sorted)
    """

    def __init__(self, rays):
        rays = sorted(set(make_ray(r) for r in rays))
        if not rays:
            raise exceptions.FanError('A cone needs at least one ray')
        self._rays = tuple(rays)
        self._inverse = None

    @property
    def rays(self):
        return self._rays

    @property
    def dimension(self):
        return polyhedral.rank(self._rays)

    def is_simplicial(self):
        return self.dimension == len(self._rays)

    def multiplicity(self):
        return cone_multiplicity(self)

    def coordinates(self, point):
        """
        Returns the exact coordinates of a point in the ray basis of a full-dimensional simplicial cone
        :return: list(Fraction)
        """

        if self._inverse is None:
            matrix = sympy.Matrix([list(r) for r in self._rays]).T
            inverse = matrix.inv()
            self._inverse = [[polyhedral.to_fraction(inverse[i, j]) for j in range(inverse.cols)]
                             for i in range(inverse.rows)]
        return [sum(row[j] * point[j] for j in range(len(point))) for row in self._inverse]

    def contains(self, point):
        return all(x >= 0 for x in self.coordinates(point))

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        return self._rays == other.rays

    def __lt__(self, other):
        return self._rays < other.rays

    def __hash__(self):
        return hash(self._rays)

    def __repr__(self):
        return 'Cone({})'.format(list(self._rays))


class Fan(object):
    """
    Fan stored by its maximal cones; faces are computed on demand
    """

    def __init__(self, dimension, cones, subdivision_steps=0):
        self._dimension = dimension
        self._cones = tuple(sorted(set(c if isinstance(c, Cone) else Cone(c) for c in cones)))
        self._subdivision_steps = subdivision_steps
        for cone in self._cones:
            if any(len(r) != dimension for r in cone.rays):
                raise exceptions.FanError('Cone {} does not live in dimension {}'.format(cone, dimension))

    @property
    def dimension(self):
        return self._dimension

    @property
    def cones(self):
        return self._cones

    @property
    def subdivision_steps(self):
        return self._subdivision_steps

    def rays(self):
        return sorted(set(r for cone in self._cones for r in cone.rays))

    def is_simplicial(self):
        return all(cone.is_simplicial() for cone in self._cones)

    def max_multiplicity(self):
        return max(cone_multiplicity(cone) for cone in self._cones)

    def __eq__(self, other):
        if not isinstance(other, Fan):
            return NotImplemented
        return self._dimension == other.dimension and self._cones == other.cones

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._dimension, self._cones))

    def __repr__(self):
        return 'Fan(dim={}, cones={})'.format(self._dimension, len(self._cones))


# =================================================================================================
# DUAL FAN
# =================================================================================================

def dual_fan(np):
    """
    Returns the fan dual to a Newton polyhedron: one maximal cone per vertex, spanned by the normals of
    the facets through the vertex
    :param np: NewtonPolyhedron
    :return: Fan
    """

    n = np.nvars
    cones = list()
    for vertex in np.vertices:
        generators = [tuple(q - p for q, p in zip(other, vertex)) for other in np.vertices if other != vertex]
        generators += [unit_ray(i, n) for i in range(1, n + 1)]
        rays = polyhedral.cone_halfspaces(generators)
        cones.append(Cone(rays))

    logger.debug('Dual fan with {} maximal cones'.format(len(cones)))

    return Fan(n, cones)


# =================================================================================================
# MULTIPLICITY
# =================================================================================================

def cone_multiplicity(cone):
    """
    Returns the lattice index of a simplicial cone: gcd of the k x k minors of its ray matrix
    :param cone: Cone or list of rays
    :return: int
    """

    rays = cone.rays if isinstance(cone, Cone) else [tuple(r) for r in cone]
    k = len(rays)
    dimension = len(rays[0])
    matrix = sympy.Matrix([list(r) for r in rays])
    if matrix.rank() != k:
        raise exceptions.FanError('Rays {} are linearly dependent'.format(list(rays)))

    if k == dimension:
        return abs(int(matrix.det()))

    minors = list()
    for columns in itertools.combinations(range(dimension), k):
        minors.append(abs(int(matrix.extract(list(range(k)), list(columns)).det())))
    return reduce(gcd, minors, 0)


# =================================================================================================
# SUBDIVISION
# =================================================================================================

def _facet_ray_sets(cone):
    sets = list()
    for normal in polyhedral.cone_halfspaces(cone.rays):
        sets.append(frozenset(r for r in cone.rays if exactpoly.dot(normal, r) == 0))
    return sets


def _pulling(face_rays, dimension, facet_sets):
    if len(face_rays) == dimension:
        return [face_rays]
    apex = min(face_rays)
    pieces = list()
    sub_faces = set()
    for facet in facet_sets:
        sub_face = face_rays & facet
        if sub_face != face_rays and polyhedral.rank(sub_face) == dimension - 1:
            sub_faces.add(sub_face)
    for sub_face in sorted(sub_faces, key=sorted):
        if apex in sub_face:
            continue
        for piece in _pulling(sub_face, dimension - 1, facet_sets):
            pieces.append(piece | {apex})
    return pieces


def triangulate(fan):
    """
    Pulling triangulation of the non-simplicial cones, always pulling the lexicographically least ray
    so that shared faces are triangulated alike
    :param fan: Fan
    :return: Fan
    """

    cones = list()
    for cone in fan.cones:
        if cone.is_simplicial():
            cones.append(cone)
            continue
        dimension = cone.dimension
        for piece in _pulling(frozenset(cone.rays), dimension, _facet_ray_sets(cone)):
            cones.append(Cone(piece))

    return Fan(fan.dimension, cones, subdivision_steps=fan.subdivision_steps)


def parallelepiped_points(cone):
    """
    Returns the nonzero lattice points of the half-open fundamental parallelepiped of a full-dimensional
    simplicial cone, with their coordinates in the ray basis
    :param cone: Cone
    :return: list(tuple(tuple(int), list(Fraction)))
    """

    n = len(cone.rays[0])

    def _reduce(point):
        coords = cone.coordinates(point)
        floors = [x.numerator // x.denominator for x in coords]
        reduced = tuple(p - sum(f * r[j] for f, r in zip(floors, cone.rays)) for j, p in enumerate(point))
        return reduced

    origin = (0,) * n
    seen = {origin}
    frontier = [origin]
    while frontier:
        new_frontier = list()
        for point in frontier:
            for i in range(n):
                shifted = _reduce(tuple(p + (1 if j == i else 0) for j, p in enumerate(point)))
                if shifted not in seen:
                    seen.add(shifted)
                    new_frontier.append(shifted)
        frontier = new_frontier

    seen.discard(origin)
    return [(point, cone.coordinates(point)) for point in sorted(seen)]


def subdivision_point(cone):
    """
    Returns the parallelepiped point minimal for (sum of ray coordinates, lexicographic order)
    """

    points = parallelepiped_points(cone)
    if not points:
        return None
    return min(points, key=lambda item: (sum(item[1]), item[0]))[0]


def star_subdivide(fan, ray):
    """
    Star subdivision of a simplicial fan at a primitive ray
    :param fan: Fan
    :param ray: tuple(int)
    :return: Fan
    """

    ray = make_ray(ray)
    cones = list()
    for cone in fan.cones:
        if ray in cone.rays or not cone.is_simplicial():
            cones.append(cone)
            continue
        coords = cone.coordinates(ray)
        if any(x < 0 for x in coords):
            cones.append(cone)
            continue
        for index, weight in enumerate(coords):
            if weight > 0:
                cones.append(Cone(cone.rays[:index] + (ray,) + cone.rays[index + 1:]))

    return Fan(fan.dimension, cones, subdivision_steps=fan.subdivision_steps + 1)


def regularize(fan, cap=None):
    """
    Returns a regular simplicial refinement of the fan containing every input ray
    :param fan: Fan
    :param cap: int, maximum number of star subdivisions
    :return: Fan
    """

    cap = cap or consts.DEFAULT_SUBDIVISION_CAP
    current = triangulate(fan)
    for cone in current.cones:
        if cone.dimension != fan.dimension:
            raise exceptions.FanError('Cone {} is not full-dimensional'.format(cone))

    steps = 0
    while True:
        bad = [(cone_multiplicity(cone), cone) for cone in current.cones]
        bad = [item for item in bad if item[0] > 1]
        if not bad:
            break
        if steps >= cap:
            raise exceptions.SubdivisionCapError('Subdivision cap of {} steps exceeded'.format(cap))
        worst = max(item[0] for item in bad)
        cone = min(c for m, c in bad if m == worst)
        point = subdivision_point(cone)
        logger.debug('Star subdivision of {} (multiplicity {}) at {}'.format(cone, worst, point))
        current = star_subdivide(current, polyhedral.primitive(point))
        steps += 1

    return Fan(current.dimension, current.cones, subdivision_steps=fan.subdivision_steps + steps)


# =================================================================================================
# CHECKS
# =================================================================================================

def check_support(fan):
    """
    Wall pairing test for support equal to the nonnegative orthant: every maximal cone is full-dimensional,
    walls inside the orthant are shared by exactly two maximal cones, walls in a coordinate hyperplane by one
    :param fan: Fan
    :return: bool
    """

    n = fan.dimension
    walls = dict()
    for cone in fan.cones:
        if cone.dimension != n:
            return False
        for wall in _facet_ray_sets(cone):
            walls[wall] = walls.get(wall, 0) + 1

    for wall, count in walls.items():
        on_boundary = any(all(r[i] == 0 for r in wall) for i in range(n))
        if count != (1 if on_boundary else 2):
            return False

    return True


def refines(fine, coarse):
    """
    Returns whether every maximal cone of fine lies in some cone of coarse
    :param fine: Fan
    :param coarse: Fan
    :return: bool
    """

    if fine.dimension != coarse.dimension:
        raise exceptions.FanError('Fans live in different dimensions')
    if not check_support(fine) or not check_support(coarse):
        raise exceptions.FanError('Fans do not both have the nonnegative orthant as support')

    coarse_normals = [polyhedral.cone_halfspaces(cone.rays) for cone in coarse.cones]
    for cone in fine.cones:
        if not any(all(exactpoly.dot(normal, r) >= 0 for normal in normals for r in cone.rays)
                   for normals in coarse_normals):
            return False

    return True


def is_regular(fan):
    return fan.is_simplicial() and all(cone_multiplicity(cone) == 1 for cone in fan.cones)


# =================================================================================================
# SERIALIZATION
# =================================================================================================

def fan_to_json(fan):
    rays = fan.rays()
    index = {r: i for i, r in enumerate(rays)}
    return {
        'dim': fan.dimension,
        'rays': [list(r) for r in rays],
        'cones': [[index[r] for r in cone.rays] for cone in fan.cones]
    }


def fan_from_json(data):
    try:
        dimension = int(data['dim'])
        rays = [tuple(int(x) for x in r) for r in data['rays']]
        cones = [[rays[int(i)] for i in cone] for cone in data['cones']]
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise exceptions.FanError('Malformed fan JSON: {}'.format(exc))
    if not cones:
        raise exceptions.FanError('Fan JSON has no cones')

    return Fan(dimension, cones)
