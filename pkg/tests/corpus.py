#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the polynomial corpus shared by newtonforms tests
"""

from newtonforms.core import exactpoly

SPHERE = 'x1^2 + x2^2 + x3^2'
BRIESKORN = 'x1^2 + x2^3 + x3^5'
PLANE_CUBIC = 'x1^3 + x1*x2 + x2^3'
DEGENERATE = '(x1 + x2)^2 + x3^3'
CUBIC_SURFACE = 'x1^3 + x2^3 + x3^3 + 2*x1*x2*x3'

# compact facets touching a coordinate hyperplane only at a vertex
SUSPENSION = 'x1^2 + x2^3 + x2*x3 + x3^3'

# fixed "random" nondegenerate supports with the axis condition, n in {2, 3, 4}
RANDOMIZED = [
    'x1^4 + x1^2*x2 + x2^5',
    'x1^5 - 2*x1*x2^2 + 3*x2^4',
    'x1^4 + x2^4 + x3^2 + x1^2*x2^2',
    'x1^4 + 3*x2^4 + x3^4 - x1^2*x3^2',
    'x1^2 + x2^2 + x3^2 + x4^2',
    'x1^2 + x2^4 + x3^4 + x4^4 + x2^2*x3^2'
]

CORPUS = [SPHERE, BRIESKORN, PLANE_CUBIC, DEGENERATE, CUBIC_SURFACE] + RANDOMIZED
SMALL_CORPUS = [SPHERE, BRIESKORN, PLANE_CUBIC, DEGENERATE, RANDOMIZED[0], RANDOMIZED[2]]


def poly(text, nvars=None):
    return exactpoly.parse_poly(text, nvars or exactpoly.infer_nvars(text))
