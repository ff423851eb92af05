#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the Kouchnirenko nondegeneracy test: for every compact face of the Newton polyhedron,
the logarithmic derivatives of the face truncation must have no common zero in the torus
"""

from __future__ import print_function, division, absolute_import

import logging
from fractions import Fraction

import numpy
import sympy

from newtonforms.core import consts, exceptions
from newtonforms.core import exactpoly, polyhedral

logger = logging.getLogger('newtonforms')

_U = sympy.Symbol('u')


class Witness(object):
    """
    Common torus zero of the logarithmic derivatives. field is a prime, or None for an exact rational point
    """

    def __init__(self, point, field=None, free_variables=None):
        self._point = tuple(point)
        self._field = field
        self._free_variables = tuple(free_variables or list())

    @property
    def point(self):
        return self._point

    @property
    def field(self):
        return self._field

    @property
    def free_variables(self):
        return self._free_variables

    def to_json(self):
        return {
            'point': [str(x) for x in self._point],
            'field': 'Q' if self._field is None else 'F_{}'.format(self._field),
            'free_variables': list(self._free_variables)
        }

    def __repr__(self):
        return 'Witness({}, field={})'.format(list(self._point), self._field or 'Q')


class SearchResult(object):
    Found = 'found'
    NotFound = 'not_found'
    Unknown = 'unknown'

    def __init__(self, status, mode, witness=None, primes=None, certificate=None):
        self.status = status
        self.mode = mode
        self.witness = witness
        self.primes = list(primes or list())
        self.certificate = certificate


class NondegeneracyVerdict(object):
    def __init__(self, status, face=None, witness=None, unknown_faces=None, face_log=None, confidence=''):
        self._status = status
        self._face = face
        self._witness = witness
        self._unknown_faces = list(unknown_faces or list())
        self._face_log = list(face_log or list())
        self._confidence = confidence

    @property
    def status(self):
        return self._status

    @property
    def face(self):
        return self._face

    @property
    def witness(self):
        return self._witness

    @property
    def unknown_faces(self):
        return self._unknown_faces

    @property
    def face_log(self):
        return self._face_log

    @property
    def confidence(self):
        return self._confidence

    def is_nondegenerate(self):
        return self._status == consts.VerdictStatus.Nondegenerate

    def to_json(self):
        return {
            'status': self._status,
            'confidence': self._confidence,
            'face': [list(v) for v in self._face.vertices] if self._face else None,
            'witness': self._witness.to_json() if self._witness else None,
            'unknown_faces': [[list(v) for v in face.vertices] for face in self._unknown_faces],
            'faces': self._face_log
        }


# =================================================================================================
# WITNESS CHECK
# =================================================================================================

def log_derivatives(g):
    return [exactpoly.log_derivative(g, i) for i in range(1, g.nvars + 1)]


def verify_witness(g, witness):
    """
    Substitutes the witness into all logarithmic derivatives of g
    :param g: Poly
    :param witness: Witness
    :return: bool
    """

    point = witness.point
    if witness.field is None:
        if any(Fraction(x) == 0 for x in point):
            return False
        return all(d.evaluate(point) == 0 for d in log_derivatives(g))

    prime = witness.field
    if any(int(x) % prime == 0 for x in point):
        return False
    return all(exactpoly.mod_p_reduce(d, prime).evaluate([int(x) for x in point]) == 0 for d in log_derivatives(g))


# =================================================================================================
# SEARCH
# =================================================================================================

def _effective_variables(g):
    derivatives = log_derivatives(g)
    effective = [i for i, d in enumerate(derivatives) if not d.is_zero()]
    free = [i + 1 for i, d in enumerate(derivatives) if d.is_zero()]
    return derivatives, effective, free


def _scan_prime(derivatives, effective, nvars, prime, cap):
    """
    Exhaustive scan of (F_p^*)^k for a common zero, vectorized over all effective variables but the first
    :return: tuple(int) or None, or False when the scan exceeds the cap
    """

    k = len(effective)
    if (prime - 1) ** k > cap:
        return False

    reduced = list()
    for index in effective:
        modp = exactpoly.mod_p_reduce(derivatives[index], prime)
        reduced.append(sorted(modp.terms.items()))
    if any(not terms for terms in reduced):
        # a derivative vanishing identically mod p does not constrain the search
        reduced = [terms for terms in reduced if terms]
    if not reduced:
        raise exceptions.ModularReductionError(
            'Every log derivative vanishes identically mod {}, the scan would accept any point'.format(prime))

    values = numpy.arange(1, prime, dtype=numpy.int64)
    max_exp = max([e for terms in reduced for exp, _ in terms for e in exp] + [1])
    powers = numpy.ones((max_exp + 1, prime - 1), dtype=numpy.int64)
    for e in range(1, max_exp + 1):
        powers[e] = powers[e - 1] * values % prime

    if k == 1:
        rest = [numpy.zeros(1, dtype=numpy.int64)]
    else:
        grids = numpy.meshgrid(*([numpy.arange(prime - 1, dtype=numpy.int64)] * (k - 1)), indexing='ij')
        rest = [grid.ravel() for grid in grids]

    for first in range(prime - 1):
        mask = numpy.ones(rest[0].shape, dtype=bool)
        for terms in reduced:
            total = numpy.zeros(rest[0].shape, dtype=numpy.int64)
            for exponent, coeff in terms:
                value = numpy.full(rest[0].shape, coeff * int(powers[exponent[effective[0]], first]) % prime,
                                   dtype=numpy.int64)
                for position, index in enumerate(effective[1:]):
                    value = value * powers[exponent[index]][rest[position]] % prime
                total = (total + value) % prime
            mask &= total == 0
            if not mask.any():
                break
        if mask.any():
            hit = int(numpy.flatnonzero(mask)[0])
            point = [1] * nvars
            point[effective[0]] = first + 1
            for position, index in enumerate(effective[1:]):
                point[index] = int(rest[position][hit]) + 1
            return tuple(point)

    return None


def _line_decomposition(g):
    """
    Writes g, whose support lies on a line, as x^base * P(x^step) with P(0) != 0
    :return: tuple(tuple(int), tuple(int), sympy.Poly)
    """

    support = g.support()
    step = polyhedral.primitive([b - a for a, b in zip(support[0], support[-1])])
    offsets = dict()
    for point in support:
        difference = [b - a for a, b in zip(support[0], point)]
        pivot = next(i for i, s in enumerate(step) if s)
        offsets[point] = difference[pivot] // step[pivot]
    lowest = min(offsets.values())
    base = next(p for p, k in offsets.items() if k == lowest)
    coefficients = {offsets[p] - lowest: g.coeff(p) for p in support}
    expression = sum(sympy.Rational(c.numerator, c.denominator) * _U ** k for k, c in coefficients.items())
    return base, step, sympy.Poly(expression, _U)


def _exact_line_search(g, free):
    """
    Exact decision for a polynomial supported on a line: the logarithmic derivatives have a common torus
    zero iff P has a repeated nonzero root
    """

    base, step, poly = _line_decomposition(g)
    repeated = sympy.gcd(poly, poly.diff(_U))
    if repeated.degree() < 1:
        return SearchResult(SearchResult.NotFound, consts.SearchModes.ExactLowDim)

    certificate = {'line_polynomial': str(poly.as_expr()), 'repeated_factor': str(repeated.as_expr())}
    _, factors = sympy.factor_list(repeated.as_expr(), _U)
    for factor, _ in factors:
        factor_poly = sympy.Poly(factor, _U)
        if factor_poly.degree() != 1:
            continue
        a, b = factor_poly.all_coeffs()
        root = Fraction(int((-b / a).p), int((-b / a).q))
        unit = [i for i, s in enumerate(step) if abs(s) == 1]
        if not unit:
            continue
        point = [Fraction(1)] * g.nvars
        point[unit[0]] = root ** step[unit[0]]
        witness = Witness(point, field=None, free_variables=free)
        if verify_witness(g, witness):
            return SearchResult(SearchResult.Found, consts.SearchModes.ExactLowDim, witness=witness,
                                certificate=certificate)

    return SearchResult(SearchResult.Found, consts.SearchModes.ExactLowDim, certificate=certificate)


def torus_critical_search(g, mode=None, primes=None, cap=None):
    """
    Searches a common zero in the torus of the logarithmic derivatives x_i * dg/dx_i
    :param g: Poly
    :param mode: str, one of consts.SearchModes (None picks the exact mode when possible)
    :param primes: list(int)
    :param cap: int, maximum number of evaluations per prime
    :return: SearchResult
    """

    if g.is_zero():
        raise exceptions.ZeroPolynomialError('Torus search needs a nonzero polynomial')
    primes = list(primes or consts.DEFAULT_PRIMES)
    cap = cap or consts.DEFAULT_EVALUATION_CAP
    derivatives, effective, free = _effective_variables(g)

    if not effective:
        witness = Witness([1] * g.nvars, field=None, free_variables=free)
        return SearchResult(SearchResult.Found, consts.SearchModes.ExactLowDim, witness=witness)

    # a monomial never vanishes on the torus
    monomial = [index + 1 for index in effective if derivatives[index].is_monomial()]
    if monomial:
        return SearchResult(SearchResult.NotFound, consts.SearchModes.MonomialDerivative,
                            certificate={'monomial_derivative': monomial[0]})

    line_like = polyhedral.affine_rank(g.support()) <= 1
    if mode is None:
        mode = consts.SearchModes.ExactLowDim if line_like else consts.SearchModes.FiniteField

    if mode == consts.SearchModes.ExactLowDim:
        if not line_like:
            raise exceptions.PreconditionError('Exact search only handles supports on a line')
        if len(g.support()) == 1:
            return SearchResult(SearchResult.NotFound, mode)
        result = _exact_line_search(g, free)
        if result.status != SearchResult.Found or result.witness:
            return result
        # degenerate but no rational witness: look for a finite field one
        fallback = torus_critical_search(g, consts.SearchModes.FiniteField, primes, cap)
        result.witness = fallback.witness
        result.primes = fallback.primes
        return result

    searched = list()
    for prime in primes:
        try:
            point = _scan_prime(derivatives, effective, g.nvars, prime, cap)
        except exceptions.ModularReductionError as exc:
            logger.warning('Skipping prime {}: {}'.format(prime, exc))
            continue
        if point is False:
            logger.warning('Torus scan over F_{} exceeds the evaluation cap {}'.format(prime, cap))
            return SearchResult(SearchResult.Unknown, mode, primes=searched)
        searched.append(prime)
        if point is not None:
            witness = Witness(point, field=prime, free_variables=free)
            return SearchResult(SearchResult.Found, mode, witness=witness, primes=searched)

    if not searched:
        return SearchResult(SearchResult.Unknown, mode, primes=searched)

    return SearchResult(SearchResult.NotFound, mode, primes=searched)


def check_nondegenerate(f, primes=None, cap=None):
    """
    Checks the nondegeneracy condition on every compact face of the Newton polyhedron of f
    :param f: Poly
    :param primes: list(int)
    :param cap: int
    :return: NondegeneracyVerdict
    """

    if f.is_zero():
        raise exceptions.ZeroPolynomialError('Nondegeneracy of the zero polynomial is undefined')
    primes = list(primes or consts.DEFAULT_PRIMES)

    np = polyhedral.newton_polyhedron(f)
    faces = polyhedral.compact_face_lattice(np)

    face_log = list()
    first_hit = None
    unknown = list()
    all_exact = True
    for face in faces:
        weight, _ = face.weight()
        truncation = exactpoly.initial_form(f, weight)
        result = torus_critical_search(truncation, primes=primes, cap=cap)
        if result.mode not in (consts.SearchModes.ExactLowDim, consts.SearchModes.MonomialDerivative):
            all_exact = False
        face_log.append({
            'vertices': [list(v) for v in face.vertices],
            'dimension': face.dimension,
            'mode': result.mode,
            'primes': result.primes,
            'status': result.status,
            'witness': result.witness.to_json() if result.witness else None,
            'certificate': result.certificate
        })
        if result.status == SearchResult.Found and first_hit is None:
            first_hit = (face, result.witness)
        elif result.status == SearchResult.Unknown:
            unknown.append(face)

    if first_hit:
        face, witness = first_hit
        logger.info('Degenerate on face {} (witness {})'.format(face, witness))
        return NondegeneracyVerdict(
            consts.VerdictStatus.Degenerate, face=face, witness=witness, face_log=face_log,
            confidence='exact' if witness is None or witness.field is None else 'witness over F_{}'.format(
                witness.field))
    if unknown:
        return NondegeneracyVerdict(consts.VerdictStatus.Unknown, unknown_faces=unknown, face_log=face_log,
                                    confidence='search budget exceeded')
    if all_exact:
        confidence = 'exact'
    else:
        confidence = 'no witness over F_p for p in {}'.format(primes)

    return NondegeneracyVerdict(consts.VerdictStatus.Nondegenerate, face_log=face_log, confidence=confidence)
