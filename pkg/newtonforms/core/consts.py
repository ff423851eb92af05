#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains constant definitions for newtonforms
"""

from __future__ import print_function, division, absolute_import

# =======~============ GENERAL
CONFIG_NAME = 'newtonforms'
LOGGER_NAME = 'newtonforms'

# =======~============ DEFAULTS (used when no configuration file is found)
DEFAULT_ENUMERATION_CAP = 10 ** 6
DEFAULT_SUBDIVISION_CAP = 10 ** 5
DEFAULT_PRIMES = (101, 103, 211)
DEFAULT_EVALUATION_CAP = 10 ** 7
DEFAULT_LEMMA3_TRIALS = 100
DEFAULT_NORMALIZATION_TRIALS = 50
DEFAULT_SEED = 0
DEFAULT_DEGREE_CUTOFF = 8


class Environment(object):
    DEV = 'development'
    PROD = 'production'


class ExitCodes(object):
    Success = 0
    VerificationFailed = 1
    InputError = 2


class ArithOps(object):
    Add = 'add'
    Sub = 'sub'
    Mul = 'mul'
    Scale = 'scale'


class SearchModes(object):
    FiniteField = 'finite_field'
    ExactLowDim = 'exact_low_dim'
    MonomialDerivative = 'monomial_derivative'


class VerdictStatus(object):
    Nondegenerate = 'Nondegenerate'
    Degenerate = 'Degenerate'
    Unknown = 'Unknown'


class IdealKinds(object):
    SingleAxis = 'single_axis'
    AllAxes = 'all_axes'


class Certificates(object):
    Dilate = 'dilate'
    Ideal = 'ideal'


class OutputFormats(object):
    Json = 'json'
    Text = 'text'


class ContactRules(object):
    """
    Which compact facets of the Newton polyhedron cut out the relaxed polyhedron of an axis: Facet keeps
    facets meeting the coordinate hyperplane in codimension one of the hyperplane, Vertex keeps every facet
    meeting it
    """

    Facet = 'facet'
    Vertex = 'vertex'
