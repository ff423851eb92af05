#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the exact polyhedral engine: double description kernel, Newton polyhedra, compact
face lattices, the relaxed polyhedra cut out by the facets meeting a coordinate hyperplane, filtration
values and bounded lattice point enumeration
"""

from __future__ import print_function, division, absolute_import

import random
import logging
import itertools
from math import gcd
from fractions import Fraction
from functools import reduce

import cdd
import sympy

from newtonforms.core import consts, exceptions
from newtonforms.core import exactpoly

logger = logging.getLogger('newtonforms')


# =================================================================================================
# LINEAR ALGEBRA HELPERS
# =================================================================================================

def to_fraction(value):
    if hasattr(value, 'p') and hasattr(value, 'q'):
        return Fraction(int(value.p), int(value.q))
    return Fraction(value)


def primitive(vector):
    """
    Returns the primitive integer vector on the ray spanned by the given rational vector
    :param vector: list(int or Fraction)
    :return: tuple(int)
    """

    values = [to_fraction(x) for x in vector]
    denominator = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in values), 1)
    integers = [int(x * denominator) for x in values]
    divisor = reduce(gcd, (abs(x) for x in integers), 0)
    if divisor == 0:
        raise exceptions.PolyhedronError('Zero vector has no primitive representative')
    return tuple(x // divisor for x in integers)


def rank(rows):
    """
    Exact rank of a list of rational row vectors
    """

    rows = [list(row) for row in rows]
    if not rows:
        return 0
    return sympy.Matrix(rows).rank()


def affine_rank(points):
    """
    Returns the dimension of the affine hull of the given points (-1 for no points)
    """

    points = list(points)
    if not points:
        return -1
    base = points[0]
    return rank([[a - b for a, b in zip(point, base)] for point in points[1:]])


def _is_nonnegative(vector):
    return all(x >= 0 for x in vector)


def _as_fractions(point):
    return [Fraction(x) for x in point]


# =================================================================================================
# TYPES
# =================================================================================================

class HalfSpace(object):
    """
    Half-space {r : <normal, r> >= height}
    """

    __slots__ = ('_normal', '_height')

    def __init__(self, normal, height):
        normal = tuple(int(x) for x in normal)
        if not any(normal):
            raise exceptions.PolyhedronError('Half-space normal must be nonzero')
        if reduce(gcd, (abs(x) for x in normal), 0) != 1:
            raise exceptions.PolyhedronError('Half-space normal {} is not primitive'.format(normal))
        self._normal = normal
        self._height = int(height)

    @property
    def normal(self):
        return self._normal

    @property
    def height(self):
        return self._height

    def value(self, point):
        return exactpoly.dot(self._normal, point)

    def contains(self, point, dilation=1):
        return self.value(point) >= Fraction(dilation) * self._height

    def is_tight(self, point):
        return self.value(point) == self._height

    def is_compact(self):
        return all(x > 0 for x in self._normal)

    def __eq__(self, other):
        if not isinstance(other, HalfSpace):
            return NotImplemented
        return (self._normal, self._height) == (other.normal, other.height)

    def __hash__(self):
        return hash((self._normal, self._height))

    def __lt__(self, other):
        return (self._normal, self._height) < (other.normal, other.height)

    def __repr__(self):
        return 'HalfSpace({}, {})'.format(self._normal, self._height)


class CompactFace(object):
    def __init__(self, dimension, vertices, facets):
        self._dimension = dimension
        self._vertices = tuple(sorted(vertices))
        self._facets = tuple(sorted(facets))

    @property
    def dimension(self):
        return self._dimension

    @property
    def vertices(self):
        return self._vertices

    @property
    def facets(self):
        return self._facets

    def weight(self):
        """
        Returns an integer vector v >= 0 and the value c such that the face is the minimizing set of
        <v, .> over the polyhedron (sum of the normals of the facets containing the face)
        """

        normal = [sum(h.normal[i] for h in self._facets) for i in range(len(self._vertices[0]))]
        height = sum(h.height for h in self._facets)
        return tuple(normal), height

    def __eq__(self, other):
        if not isinstance(other, CompactFace):
            return NotImplemented
        return self._vertices == other.vertices

    def __hash__(self):
        return hash(self._vertices)

    def __repr__(self):
        return 'CompactFace(dim={}, vertices={})'.format(self._dimension, list(self._vertices))


class NewtonPolyhedron(object):
    def __init__(self, nvars, vertices, facets, support=None, require_compact=True):
        self._nvars = nvars
        self._vertices = tuple(sorted(tuple(v) for v in vertices))
        self._facets = tuple(sorted(facets))
        self._support = tuple(sorted(support or self._vertices))

        for facet in self._facets:
            if not _is_nonnegative(facet.normal):
                raise exceptions.PolyhedronError(
                    'Supporting normal {} of a Newton polyhedron must be nonnegative'.format(facet.normal))
        if require_compact and not self.compact_facets():
            raise exceptions.PolyhedronError('Newton polyhedron has no compact facet')
        for vertex in self._vertices:
            tight = [h for h in self._facets if h.is_tight(vertex)]
            if len(tight) < nvars or rank([h.normal for h in tight]) < nvars:
                raise exceptions.PolyhedronError('Point {} is not a vertex of the polyhedron'.format(vertex))

    @property
    def nvars(self):
        return self._nvars

    @property
    def vertices(self):
        return self._vertices

    @property
    def facets(self):
        return self._facets

    @property
    def support(self):
        return self._support

    def compact_facets(self):
        return [h for h in self._facets if h.is_compact()]

    def compact_facet_indices(self):
        return [index for index, h in enumerate(self._facets) if h.is_compact()]

    def bounding_halfspaces(self):
        """
        Returns the facets of positive height; together with r >= 0 they cut out the polyhedron. With
        the axis condition these are exactly the compact facets
        """

        return [h for h in self._facets if h.height > 0]

    def contains(self, point, dilation=1):
        return member(self, point, dilation)

    def __repr__(self):
        return 'NewtonPolyhedron(nvars={}, vertices={}, facets={})'.format(
            self._nvars, list(self._vertices), list(self._facets))


class Delta1Region(object):
    """
    Polyhedron cut out in the nonnegative orthant by the compact facets of a Newton polyhedron which
    meet the coordinate hyperplane {r_axis = 0} in codimension one
    """

    def __init__(self, axis, halfspaces, nvars, low_dimensional_contacts=None):
        self._axis = axis
        self._halfspaces = tuple(sorted(halfspaces))
        self._nvars = nvars
        self._low_dimensional_contacts = tuple(sorted(low_dimensional_contacts or list()))

        for halfspace in self._halfspaces:
            if not halfspace.is_compact():
                raise exceptions.PolyhedronError(
                    'Relaxed polyhedron needs strictly positive normals, got {}'.format(halfspace.normal))

    @property
    def axis(self):
        return self._axis

    @property
    def halfspaces(self):
        return self._halfspaces

    @property
    def nvars(self):
        return self._nvars

    @property
    def low_dimensional_contacts(self):
        return self._low_dimensional_contacts

    def bounding_halfspaces(self):
        return list(self._halfspaces)

    def contains(self, point, dilation=1):
        return member(self, point, dilation)

    def __repr__(self):
        return 'Delta1Region(axis={}, halfspaces={})'.format(self._axis, list(self._halfspaces))


# =================================================================================================
# DOUBLE DESCRIPTION
# =================================================================================================

def _cdd_inequalities(rows):
    """
    Runs the double description conversion of a V-representation with exact arithmetic
    :param rows: list(list(int)), cdd generator rows [1, point...] or [0, ray...]
    :return: list(tuple(Fraction)), irredundant inequality rows [b, a...] meaning b + <a, x> >= 0
    """

    matrix = cdd.Matrix(rows, number_type='fraction')
    matrix.rep_type = cdd.RepType.GENERATOR
    inequalities = cdd.Polyhedron(matrix).get_inequalities()
    if inequalities.lin_set:
        raise exceptions.PolyhedronError('Generators do not span a full-dimensional cone')
    inequalities.canonicalize()

    return [tuple(Fraction(x) for x in inequalities[i]) for i in range(inequalities.row_size)]


def dd_facets(generators, homogenized=False):
    """
    Returns the irredundant facet description of the cone generated by the given vectors
    :param generators: list(list(int))
    :param homogenized: bool, when True the last coordinate is the homogenizing one and facets are returned
        as half-spaces <v, r> >= c of the dehomogenized polyhedron (the facet at infinity is dropped)
    :return: list(HalfSpace)
    """

    generators = sorted(set(tuple(int(x) for x in g) for g in generators))
    if not generators:
        raise exceptions.EmptyGeneratorError('Cannot compute facets of an empty generator set')
    generators = [g for g in generators if any(g)]
    if not generators:
        raise exceptions.EmptyGeneratorError('Generator set only contains the zero vector')
    dimension = len(generators[0])

    if homogenized:
        points = [g[:-1] for g in generators if g[-1] > 0]
        rows = [[1] + list(p) for p in points] + [[0] + list(g[:-1]) for g in generators if g[-1] == 0]
    else:
        points = [(0,) * dimension]
        rows = [[1] + list(points[0])] + [[0] + list(g) for g in generators]
    if not points:
        raise exceptions.EmptyGeneratorError('Homogenized generators contain no point')

    halfspaces = set()
    for row in _cdd_inequalities(rows):
        if not any(row[1:]):
            continue
        normal = primitive(row[1:])
        halfspaces.add(HalfSpace(normal, min(exactpoly.dot(normal, p) for p in points)))

    logger.debug('Double description: {} generators -> {} facets'.format(len(generators), len(halfspaces)))

    return sorted(halfspaces)


def cone_halfspaces(rays):
    """
    Returns the facet normals (as tuples) of the full-dimensional cone generated by the given rays
    """

    return [h.normal for h in dd_facets(rays)]


# =================================================================================================
# NEWTON POLYHEDRON
# =================================================================================================

def newton_polyhedron(f, require_compact=True):
    """
    Returns the Newton polyhedron of a polynomial
    :param f: Poly
    :param require_compact: bool, when False polyhedra without compact facets (only usable for their dual
        fan) are accepted
    :return: NewtonPolyhedron
    """

    if f.is_zero():
        raise exceptions.ZeroPolynomialError('The zero polynomial has no Newton polyhedron')
    if not exactpoly.axis_condition(f):
        logger.warning('Polynomial "{}" does not meet every coordinate axis'.format(exactpoly.to_text(f)))

    n = f.nvars
    support = f.support()
    generators = [tuple(a) + (1,) for a in support]
    for i in range(n):
        generators.append(tuple(1 if j == i else 0 for j in range(n)) + (0,))

    facets = dd_facets(generators, homogenized=True)

    vertices = list()
    for point in support:
        tight = [h.normal for h in facets if h.is_tight(point)]
        if len(tight) >= n and rank(tight) == n:
            vertices.append(point)

    np = NewtonPolyhedron(n, vertices, facets, support=support, require_compact=require_compact)
    if f.coeff((0,) * n) == 0 and exactpoly.axis_condition(f):
        for facet in np.compact_facets():
            if facet.height <= 0:
                raise exceptions.PolyhedronError('Compact facet {} has nonpositive height'.format(facet))

    return np


def oracle_facets(points, nvars):
    """
    Brute-force facet enumeration of conv(points) + R_+^n: every hyperplane spanned by some points and
    coordinate directions is kept when it supports the polyhedron in dimension n - 1
    :param points: list(tuple(int))
    :param nvars: int
    :return: list(HalfSpace)
    """

    points = sorted(set(tuple(p) for p in points))
    directions = [tuple(1 if j == i else 0 for j in range(nvars)) for i in range(nvars)]
    found = set()
    for count in range(1, nvars + 1):
        for chosen in itertools.combinations(points, count):
            for chosen_dirs in itertools.combinations(directions, nvars - count):
                rows = [[a - b for a, b in zip(p, chosen[0])] for p in chosen[1:]] + [list(d) for d in chosen_dirs]
                if rows and rank(rows) != nvars - 1:
                    continue
                if not rows and nvars != 1:
                    continue
                if rows:
                    kernel = sympy.Matrix(rows).nullspace()
                    if len(kernel) != 1:
                        continue
                    normal = primitive(list(kernel[0]))
                else:
                    normal = (1,)
                if not _is_nonnegative(normal):
                    normal = tuple(-x for x in normal)
                    if not _is_nonnegative(normal):
                        continue
                height = exactpoly.dot(normal, chosen[0])
                if any(exactpoly.dot(normal, p) < height for p in points):
                    continue
                tight_points = [p for p in points if exactpoly.dot(normal, p) == height]
                tight_dirs = [d for d in directions if exactpoly.dot(normal, d) == 0]
                span = [[a - b for a, b in zip(p, tight_points[0])] for p in tight_points[1:]]
                span += [list(d) for d in tight_dirs]
                if (rank(span) if span else 0) != nvars - 1:
                    continue
                found.add(HalfSpace(normal, height))

    return sorted(found)


def compact_face_lattice(np):
    """
    Returns all compact faces of the polyhedron, sorted by dimension and vertex set
    :param np: NewtonPolyhedron
    :return: list(CompactFace)
    """

    n = np.nvars
    facet_vertices = [frozenset(v for v in np.vertices if h.is_tight(v)) for h in np.facets]

    candidates = set(s for s in facet_vertices if s)
    candidates.update(frozenset([v]) for v in np.vertices)
    frontier = set(candidates)
    while frontier:
        new = set()
        for a in frontier:
            for b in candidates:
                c = a & b
                if c and c not in candidates and c not in new:
                    new.add(c)
        candidates.update(new)
        frontier = new

    faces = dict()
    for vertex_set in candidates:
        tight = [h for h, vs in zip(np.facets, facet_vertices) if vertex_set <= vs]
        covered = set(i for h in tight for i in range(n) if h.normal[i] > 0)
        if len(covered) != n:
            continue
        closure = frozenset(v for v in np.vertices if all(h.is_tight(v) for h in tight))
        if closure in faces:
            continue
        faces[closure] = CompactFace(affine_rank(closure), closure, tight)

    return sorted(faces.values(), key=lambda face: (face.dimension, face.vertices))


def height(np, v):
    """
    Returns min <v, r> over the polyhedron
    :param np: NewtonPolyhedron
    :param v: list(int), nonnegative
    :return: int
    """

    if not _is_nonnegative(v):
        raise exceptions.PreconditionError('Height is -infinity for direction {} with negative entries'.format(v))
    if len(v) != np.nvars:
        raise exceptions.VariableCountError('Direction {} does not have {} entries'.format(v, np.nvars))

    return min(exactpoly.dot(v, vertex) for vertex in np.vertices)


def member(region, point, dilation=1):
    """
    Returns whether point lies in dilation * region. 0 * region is the whole nonnegative orthant
    :param region: NewtonPolyhedron or Delta1Region
    :param point: list(int or Fraction)
    :param dilation: rational >= 0
    :return: bool
    """

    if len(point) != region.nvars:
        raise exceptions.VariableCountError('Point {} does not have {} entries'.format(point, region.nvars))
    dilation = Fraction(dilation)
    if dilation < 0:
        raise exceptions.PreconditionError('Dilation must be nonnegative, got {}'.format(dilation))
    point = _as_fractions(point)
    if not _is_nonnegative(point):
        return False
    if dilation == 0:
        return True

    return all(h.value(point) >= dilation * h.height for h in region.bounding_halfspaces())


def filtration_value(region, b):
    """
    Returns max{a >= 0 : b in a * region}
    :param region: NewtonPolyhedron or Delta1Region
    :param b: tuple(int), nonnegative
    :return: Fraction
    """

    if not _is_nonnegative(b):
        raise exceptions.PreconditionError('Filtration value needs a nonnegative exponent, got {}'.format(b))
    halfspaces = region.bounding_halfspaces()
    if not halfspaces:
        raise exceptions.PolyhedronError('Region has no bounding facet')

    return min(Fraction(h.value(b), h.height) for h in halfspaces)


def build_delta1(np, axis, contact_rule=consts.ContactRules.Facet):
    """
    Returns the relaxed polyhedron cut out by the compact facets that meet {r_axis = 0} in dimension n - 2
    (or in any dimension with the vertex contact rule)
    :param np: NewtonPolyhedron
    :param axis: int, 1-based
    :param contact_rule: str, one of consts.ContactRules
    :return: Delta1Region
    """

    n = np.nvars
    if not 1 <= axis <= n:
        raise exceptions.VariableCountError('Axis {} out of range 1..{}'.format(axis, n))

    selected = list()
    low_dimensional = list()
    for facet in np.compact_facets():
        contact = [v for v in np.vertices if facet.is_tight(v) and v[axis - 1] == 0]
        if not contact:
            continue
        if affine_rank(contact) == n - 2:
            selected.append(facet)
        else:
            low_dimensional.append(facet)
            if contact_rule == consts.ContactRules.Vertex:
                selected.append(facet)
                continue
            logger.warning(
                'Compact facet {} meets the hyperplane r{} = 0 only in dimension {}; excluded from the '
                'relaxed polyhedron'.format(facet, axis, affine_rank(contact)))

    if not selected:
        raise exceptions.PolyhedronError('No compact facet meets the hyperplane r{} = 0'.format(axis))

    return Delta1Region(axis, selected, n, low_dimensional_contacts=low_dimensional)


def _box_bounds(region, dilation, extra_bounds):
    n = region.nvars
    upper = [None] * n
    for axis, bound in extra_bounds or list():
        position = axis - 1
        limit = bound - 1
        upper[position] = limit if upper[position] is None else min(upper[position], limit)

    halfspaces = region.bounding_halfspaces()
    for j in range(n):
        if any(h.normal[j] == 0 for h in halfspaces):
            continue
        limit = max(int(-(-(dilation * h.height) // h.normal[j])) for h in halfspaces)
        upper[j] = limit if upper[j] is None else min(upper[j], limit)

    return upper


def enumerate_complement(region, dilation, extra_bounds=None, cap=None):
    """
    Returns the lattice points b >= 0 outside dilation * region which satisfy b_axis < bound for every
    (axis, bound) in extra_bounds, in lexicographic order
    :param region: NewtonPolyhedron or Delta1Region
    :param dilation: rational >= 0
    :param extra_bounds: list(tuple(int, int))
    :param cap: int, maximum number of box points scanned
    :return: list(tuple(int))
    """

    dilation = Fraction(dilation)
    if dilation < 0:
        raise exceptions.PreconditionError('Dilation must be nonnegative, got {}'.format(dilation))
    cap = cap or consts.DEFAULT_ENUMERATION_CAP
    if dilation == 0:
        return list()

    upper = _box_bounds(region, dilation, extra_bounds)
    if any(u is None for u in upper):
        raise exceptions.EnumerationOverflowError(
            'Complement is unbounded along axes {}'.format([i + 1 for i, u in enumerate(upper) if u is None]))
    if any(u < 0 for u in upper):
        return list()
    box_size = reduce(lambda a, b: a * b, (u + 1 for u in upper), 1)
    if box_size > cap:
        raise exceptions.EnumerationOverflowError(
            'Enumeration box of {} points exceeds the configured cap {}'.format(box_size, cap))

    return [b for b in itertools.product(*[range(u + 1) for u in upper]) if not member(region, b, dilation)]


def slab_check(np, axis, dilation=1, random_points=1000, seed=consts.DEFAULT_SEED,
               contact_rule=consts.ContactRules.Facet):
    """
    Compares membership in dilation * Delta1 and dilation * Delta on the slab 0 <= r_axis <= dilation,
    on every lattice point of a bounding box and on seeded random rational points
    :return: list(tuple), points where the two memberships disagree
    """

    region = build_delta1(np, axis, contact_rule=contact_rule)
    n = np.nvars
    dilation = Fraction(dilation)
    reach = max(int(-(-(dilation * h.height) // min(h.normal))) for h in region.halfspaces) + 1

    ranges = [range(int(dilation) + 1) if j == axis - 1 else range(reach + 1) for j in range(n)]
    discrepancies = list()
    for b in itertools.product(*ranges):
        if member(region, b, dilation) != member(np, b, dilation):
            discrepancies.append(b)

    rng = random.Random(seed)
    for _ in range(random_points):
        point = list()
        for j in range(n):
            denominator = rng.randint(1, 12)
            top = dilation if j == axis - 1 else reach
            point.append(Fraction(rng.randint(0, int(top * denominator)), denominator))
        if member(region, point, dilation) != member(np, point, dilation):
            discrepancies.append(tuple(point))

    if discrepancies:
        logger.error('Slab equality fails on axis {} at {} points'.format(axis, len(discrepancies)))

    return discrepancies


def delta1_facets_cover(np, axis, contact_rule=consts.ContactRules.Facet):
    """
    Returns whether every selected half-space of the relaxed polyhedron is a facet of it containing the
    matching facet of the Newton polyhedron
    """

    region = build_delta1(np, axis, contact_rule=contact_rule)
    for halfspace in region.halfspaces:
        facet_vertices = [v for v in np.vertices if halfspace.is_tight(v)]
        if affine_rank(facet_vertices) != np.nvars - 1:
            return False
        if not all(member(region, v) for v in facet_vertices):
            return False

    return True


# =================================================================================================
# SERIALIZATION
# =================================================================================================

def _halfspace_json(halfspace):
    return {'normal': list(halfspace.normal), 'height': halfspace.height, 'compact': halfspace.is_compact()}


def polyhedron_to_json(np, with_faces=False):
    data = {
        'vertices': [list(v) for v in np.vertices],
        'facets': [_halfspace_json(h) for h in np.facets],
        'compact_facet_indices': np.compact_facet_indices()
    }
    if with_faces:
        data['compact_faces'] = [
            {'dimension': face.dimension, 'vertices': [list(v) for v in face.vertices]}
            for face in compact_face_lattice(np)]
    return data


def delta1_to_json(region):
    return {
        'axis': region.axis,
        'facets': [_halfspace_json(h) for h in region.halfspaces],
        'low_dimensional_contacts': [_halfspace_json(h) for h in region.low_dimensional_contacts]
    }
