#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the monomial filtrations on the polynomial ring and the finite linear algebra that checks
the multiplication-by-f statements on them
"""

from __future__ import print_function, division, absolute_import

import math
import random
import logging
import itertools
from fractions import Fraction

import sympy

from newtonforms.core import consts, exceptions
from newtonforms.core import exactpoly, polyhedral
from newtonforms.core.exactpoly import Poly

logger = logging.getLogger('newtonforms')

_COEFFICIENTS = (-3, -2, -1, 1, 2, 3)


class MonomialSumSpace(object):
    """
    Space F^a + (ideal generators). Both summands are spanned by monomials, so membership is decided term
    by term
    """

    def __init__(self, dilation, region, ideal_gens=None):
        self._dilation = Fraction(dilation)
        self._region = region
        self._ideal_gens = [tuple(gen) for gen in ideal_gens or list()]
        for gen in self._ideal_gens:
            if len(gen) != region.nvars:
                raise exceptions.VariableCountError('Ideal generator {} does not have {} entries'.format(
                    gen, region.nvars))

    @property
    def dilation(self):
        return self._dilation

    @property
    def region(self):
        return self._region

    @property
    def ideal_gens(self):
        return self._ideal_gens

    @property
    def nvars(self):
        return self._region.nvars

    def certify(self, exponent):
        """
        Returns which summand contains the monomial, or None
        :param exponent: tuple(int)
        :return: str or None
        """

        if self._dilation <= 0 or polyhedral.member(self._region, exponent, self._dilation):
            return consts.Certificates.Dilate
        if any(exactpoly.divides_monomial(gen, exponent) for gen in self._ideal_gens):
            return consts.Certificates.Ideal
        return None

    def __repr__(self):
        return 'MonomialSumSpace(F^{} + {})'.format(self._dilation, self._ideal_gens)


class MembershipReport(object):
    def __init__(self, certificates, failures):
        self.certificates = certificates
        self.failures = failures

    @property
    def holds(self):
        return not self.failures

    def __bool__(self):
        return self.holds

    __nonzero__ = __bool__

    def to_json(self):
        return {
            'holds': self.holds,
            'certificates': [[list(exp), cert] for exp, cert in sorted(self.certificates.items())],
            'failures': [list(exp) for exp in self.failures]
        }


class QuotientBasis(object):
    def __init__(self, exponents, dilation, k, axis):
        self.exponents = list(exponents)
        self.dilation = dilation
        self.k = k
        self.axis = axis

    def index(self):
        return {exp: i for i, exp in enumerate(self.exponents)}

    def __len__(self):
        return len(self.exponents)


class InjectivityReport(object):
    def __init__(self, f, dilation, k, axis, source, target, rank, kernel_vector=None):
        self.f = f
        self.dilation = dilation
        self.k = k
        self.axis = axis
        self.source = source
        self.target = target
        self.rank = rank
        self.kernel_vector = kernel_vector

    @property
    def injective(self):
        return self.rank == len(self.source)

    def to_json(self):
        return {
            'f': exactpoly.to_text(self.f),
            'a': self.dilation,
            'k': self.k,
            'axis': self.axis,
            'source_dimension': len(self.source),
            'target_dimension': len(self.target),
            'rank': self.rank,
            'injective': self.injective,
            'kernel_vector': exactpoly.to_json(self.kernel_vector) if self.kernel_vector is not None else None
        }


class ImplicationReport(object):
    def __init__(self, variant, dilation, k, axis, premise, conclusion, within_hypothesis):
        self.variant = variant
        self.dilation = dilation
        self.k = k
        self.axis = axis
        self.premise = premise
        self.conclusion = conclusion
        self.within_hypothesis = within_hypothesis

    @property
    def holds(self):
        return not self.premise.holds or self.conclusion.holds

    @property
    def counterexample(self):
        return self.within_hypothesis and not self.holds

    def to_json(self):
        return {
            'variant': self.variant,
            'a': self.dilation,
            'k': self.k,
            'axis': self.axis,
            'premise': self.premise.to_json(),
            'conclusion': self.conclusion.to_json(),
            'holds': self.holds,
            'within_hypothesis': self.within_hypothesis
        }


class TrialReport(object):
    def __init__(self, name, f, seed):
        self.name = name
        self.f = f
        self.seed = seed
        self.trials = 0
        self.skipped = 0
        self.failures = list()

    @property
    def passed(self):
        return not self.failures

    def to_json(self):
        return {
            'name': self.name,
            'f': exactpoly.to_text(self.f),
            'seed': self.seed,
            'trials': self.trials,
            'skipped': self.skipped,
            'passed': self.passed,
            'failures': self.failures
        }


# =================================================================================================
# MEMBERSHIP
# =================================================================================================

def in_sum_space(p, space):
    """
    Checks whether every term of p lies in the space
    :param p: Poly
    :param space: MonomialSumSpace
    :return: MembershipReport
    """

    if p.nvars != space.nvars:
        raise exceptions.VariableCountError('Variable count mismatch: {} vs {}'.format(p.nvars, space.nvars))

    certificates = dict()
    failures = list()
    for exponent in p.support():
        certificate = space.certify(exponent)
        if certificate is None:
            failures.append(exponent)
        else:
            certificates[exponent] = certificate

    return MembershipReport(certificates, failures)


def split_by_support(p, a, np):
    """
    Splits p into the terms whose exponent lies in a * np and the remaining ones
    :param p: Poly
    :param a: rational
    :param np: NewtonPolyhedron
    :return: tuple(Poly, Poly)
    """

    a = max(Fraction(a), Fraction(0))
    inside = dict()
    outside = dict()
    for exponent, coeff in p.terms.items():
        target = inside if polyhedral.member(np, exponent, a) else outside
        target[exponent] = coeff

    return Poly(inside, p.nvars), Poly(outside, p.nvars)


def _ideal_generators(variant, k, axis, nvars):
    if variant == consts.IdealKinds.SingleAxis:
        if not 1 <= axis <= nvars:
            raise exceptions.VariableCountError('Axis {} out of range 1..{}'.format(axis, nvars))
        return [tuple(k if j == axis - 1 else 0 for j in range(nvars))]
    if variant == consts.IdealKinds.AllAxes:
        return [tuple([k] * nvars)]
    raise exceptions.PreconditionError('Unknown ideal kind: {}'.format(variant))


# =================================================================================================
# MULTIPLICATION MAPS
# =================================================================================================

def quotient_basis(region, a, k, axis, cap=None):
    """
    Monomial basis of P / (F_1^a + (x_axis^k))
    :return: QuotientBasis
    """

    exponents = polyhedral.enumerate_complement(region, a, extra_bounds=[(axis, k)], cap=cap)
    return QuotientBasis(exponents, a, k, axis)


def lemma1_verify(f, a, k, axis, cap=None, contact_rule=consts.ContactRules.Facet):
    """
    Builds the matrix of multiplication by f from P / (F_1^a + (x_i^k)) to P / (F_1^(a+1) + (x_i^k)) and
    checks that it is injective
    :param f: Poly
    :param a: int >= 0
    :param k: int >= 1
    :param axis: int, 1-based
    :param cap: int, enumeration cap
    :param contact_rule: str, one of consts.ContactRules
    :return: InjectivityReport
    """

    if a < 0 or k < 1:
        raise exceptions.PreconditionError('Need a >= 0 and k >= 1, got a={} k={}'.format(a, k))
    if not exactpoly.axis_condition(f):
        raise exceptions.PreconditionError('{} does not satisfy the axis condition'.format(f))

    np = polyhedral.newton_polyhedron(f)
    region = polyhedral.build_delta1(np, axis, contact_rule=contact_rule)
    source = quotient_basis(region, a, k, axis, cap=cap)
    target = quotient_basis(region, a + 1, k, axis, cap=cap)
    if not source.exponents:
        return InjectivityReport(f, a, k, axis, source, target, 0)

    rows = target.index()
    matrix = sympy.zeros(len(target), len(source))
    for column, b in enumerate(source.exponents):
        for exponent, coeff in f.terms.items():
            product = tuple(x + y for x, y in zip(b, exponent))
            row = rows.get(product)
            if row is not None:
                matrix[row, column] += sympy.Rational(coeff.numerator, coeff.denominator)

    matrix_rank = matrix.rank()
    kernel_vector = None
    if matrix_rank < len(source):
        vector = matrix.nullspace()[0]
        terms = {b: polyhedral.to_fraction(vector[i]) for i, b in enumerate(source.exponents)}
        kernel_vector = Poly(terms, f.nvars)
        logger.error('Multiplication by {} is not injective for a={} k={} axis={}'.format(f, a, k, axis))
    logger.debug('lemma1 a={} k={} axis={}: {}x{} rank {}'.format(
        a, k, axis, len(target), len(source), matrix_rank))

    return InjectivityReport(f, a, k, axis, source, target, matrix_rank, kernel_vector)


def lemma23_verify(f, g, a, k, variant=consts.IdealKinds.AllAxes, axis=1):
    """
    Checks the implication g*f in F^a + I_k  =>  g in F^(a-1) + I_k, where I_k is (x_axis^k) or
    ((x_1...x_n)^k)
    :param f: Poly
    :param g: Poly
    :param a: int > 0
    :param k: int > 0
    :param variant: str, one of consts.IdealKinds
    :param axis: int, only used by the single axis variant
    :return: ImplicationReport
    """

    np = polyhedral.newton_polyhedron(f)
    ideal = _ideal_generators(variant, k, axis, f.nvars)
    within_hypothesis = k <= a and exactpoly.axis_condition(f)
    if k > a:
        logger.warning('k={} > a={}: trial is outside the hypothesis of the statement'.format(k, a))

    premise = in_sum_space(g * f, MonomialSumSpace(a, np, ideal))
    conclusion = in_sum_space(g, MonomialSumSpace(a - 1, np, ideal))
    report = ImplicationReport(variant, a, k, axis, premise, conclusion, within_hypothesis)
    if report.counterexample:
        logger.error('Counterexample: f={} g={} a={} k={} {}: premise holds, conclusion fails at {}'.format(
            f, g, a, k, variant, conclusion.failures))

    return report


def lemma2_verify(f, g, a, k, axis=1):
    return lemma23_verify(f, g, a, k, variant=consts.IdealKinds.SingleAxis, axis=axis)


def _random_poly(rng, nvars, box, terms=4, lower=0):
    data = dict()
    for _ in range(rng.randint(1, terms)):
        exponent = tuple(rng.randint(lower, lower + box) for _ in range(nvars))
        data[exponent] = Fraction(rng.choice(_COEFFICIENTS))
    return Poly(data, nvars)


def _box(np):
    return 2 * max(max(v) for v in np.vertices)


def lemma3_trials(f, trials=consts.DEFAULT_LEMMA3_TRIALS, seed=consts.DEFAULT_SEED, k=None,
                  variant=consts.IdealKinds.AllAxes, axis=1):
    """
    Randomized harness with premise true by construction: a is the floor of the smallest filtration value
    among the terms of g*f and k is min(a, k)
    :return: TrialReport
    """

    np = polyhedral.newton_polyhedron(f)
    box = _box(np)
    report = TrialReport('lemma3' if variant == consts.IdealKinds.AllAxes else 'lemma2', f, seed)
    for trial in range(trials):
        rng = random.Random(seed * 100003 + trial)
        g = _random_poly(rng, f.nvars, box)
        product = g * f
        a = int(math.floor(min(polyhedral.filtration_value(np, b) for b in product.support())))
        if a < 1:
            report.skipped += 1
            continue
        trial_k = min(a, k) if k else a
        result = lemma23_verify(f, g, a, trial_k, variant=variant, axis=axis)
        report.trials += 1
        if not result.holds:
            report.failures.append({'trial': trial, 'g': exactpoly.to_text(g), 'a': a, 'k': trial_k,
                                    'failures': [list(b) for b in result.conclusion.failures]})

    return report


# =================================================================================================
# NORMALIZATION
# =================================================================================================

def _in_dilate(p, np, m):
    return all(polyhedral.member(np, b, m) for b in p.support())


def _in_ideal(p, m):
    return all(min(b) >= m for b in p.support())


def normalize_representative(f, h, g, m):
    """
    Improves a representative h in F^m with h - g*f in ((x_1...x_n)^m) into h' = h - g_1*f lying in
    F^m and in ((x_1...x_n)^m), where g_1 collects the terms of g in (m-1) * Delta
    :param f: Poly
    :param h: Poly
    :param g: Poly
    :param m: int >= 1
    :return: Poly
    """

    if m < 1:
        raise exceptions.PreconditionError('m must be positive, got {}'.format(m))
    np = polyhedral.newton_polyhedron(f)
    if not _in_dilate(h, np, m):
        raise exceptions.PreconditionError('{} is not in F^{}'.format(h, m))
    if not _in_ideal(h - g * f, m):
        raise exceptions.PreconditionError('h - g*f is not in ((x_1...x_n)^{})'.format(m))

    g1, g2 = split_by_support(g, m - 1, np)
    data = {'f': exactpoly.to_text(f), 'h': exactpoly.to_text(h), 'g': exactpoly.to_text(g), 'm': m}
    if not _in_ideal(g2, m):
        data['g2'] = exactpoly.to_text(g2)
        raise exceptions.CounterexampleError('Terms of g outside F^(m-1) are not in the ideal', data)

    improved = h - g1 * f
    _, remainder = exactpoly.divide(improved - h, f)
    if not (_in_dilate(improved, np, m) and _in_ideal(improved, m) and remainder.is_zero()):
        data['h_prime'] = exactpoly.to_text(improved)
        raise exceptions.CounterexampleError('Normalized representative is not in F^m and the ideal', data)

    return improved


def normalization_trials(f, m=1, trials=consts.DEFAULT_NORMALIZATION_TRIALS, seed=consts.DEFAULT_SEED):
    """
    Round trip harness: builds h from a normalized h0, a random multiple of f and a projection back to
    F^m, then checks that normalize_representative returns a representative of the same class
    :return: TrialReport
    """

    np = polyhedral.newton_polyhedron(f)
    box = _box(np)
    report = TrialReport('normalization', f, seed)
    for trial in range(trials):
        rng = random.Random(seed * 100003 + trial)
        h0 = _random_poly(rng, f.nvars, box, lower=m)
        h0, _ = split_by_support(h0, m, np)
        q = _random_poly(rng, f.nvars, box)
        low, high = split_by_support(q, m - 1, np)
        high = Poly({b: c for b, c in high.terms.items() if min(b) >= m}, f.nvars)
        q = low + high
        h, _ = split_by_support(h0 + q * f, m, np)
        if h.is_zero() and q.is_zero():
            report.skipped += 1
            continue

        report.trials += 1
        try:
            improved = normalize_representative(f, h, q, m)
        except exceptions.NewtonFormsError as exc:
            report.failures.append({'trial': trial, 'h': exactpoly.to_text(h), 'g': exactpoly.to_text(q),
                                    'error': str(exc)})
            continue
        _, remainder = exactpoly.divide(improved - h, f)
        if not remainder.is_zero():
            report.failures.append({'trial': trial, 'h': exactpoly.to_text(h), 'g': exactpoly.to_text(q),
                                    'error': 'class changed'})

    return report


def logform_basis(f, m, cutoff):
    """
    Exponents b with |b| <= cutoff, b >= (m, ..., m) and b in m * Delta, in lexicographic order
    :param f: Poly
    :param m: int >= 1
    :param cutoff: int
    :return: list(tuple(int))
    """

    if m < 1:
        raise exceptions.PreconditionError('m must be positive, got {}'.format(m))
    n = f.nvars
    if cutoff < n * m:
        logger.warning('Degree cutoff {} is below n*m = {}: no basis monomials'.format(cutoff, n * m))
        return list()

    np = polyhedral.newton_polyhedron(f)
    candidates = itertools.product(range(m, cutoff - (n - 1) * m + 1), repeat=n)

    return [b for b in candidates if sum(b) <= cutoff and polyhedral.member(np, b, m)]
