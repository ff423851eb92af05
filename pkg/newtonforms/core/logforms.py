#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the toric valuation calculus for m-fold forms h * (dx)^m / f^m along the rays of a
regular fan, the logarithmic pole criterion and the pole order check for one parameter deformations
"""

from __future__ import print_function, division, absolute_import

import logging
import itertools
from fractions import Fraction

from newtonforms.core import exceptions
from newtonforms.core import exactpoly, polyhedral, fan as fan_lib, filtration
from newtonforms.core.exactpoly import Poly

logger = logging.getLogger('newtonforms')


class LogFormRep(object):
    def __init__(self, h, m, f):
        if m < 1:
            raise exceptions.PreconditionError('Form order m must be positive, got {}'.format(m))
        if h.nvars != f.nvars:
            raise exceptions.VariableCountError('Variable count mismatch: {} vs {}'.format(h.nvars, f.nvars))
        self._h = h
        self._m = m
        self._f = f

    @property
    def h(self):
        return self._h

    @property
    def m(self):
        return self._m

    @property
    def f(self):
        return self._f

    def __repr__(self):
        return 'LogFormRep(({}) (dx)^{} / f^{})'.format(self._h, self._m, self._m)


class RayValuationReport(object):
    """
    Orders along the divisor of a ray: nu_h, nu_f, b = <v, 1> - 1 and the resulting order of the form
    """

    def __init__(self, ray, nu_h, nu_f, m, coordinate=False):
        self.ray = tuple(ray)
        self.nu_h = nu_h
        self.nu_f = nu_f
        self.m = m
        self.coordinate = coordinate

    @property
    def b(self):
        return sum(self.ray) - 1

    @property
    def nu_form(self):
        return self.nu_h + self.m * self.b - self.m * self.nu_f

    @property
    def threshold(self):
        return -self.m

    @property
    def passes(self):
        return self.nu_form >= self.threshold

    @property
    def log_condition(self):
        """
        Condition used by the log form criterion: nu_h >= m on coordinate rays, nu_h >= m * nu_f elsewhere
        """

        if self.coordinate:
            return self.nu_h >= self.m
        return self.nu_h >= self.m * self.nu_f

    def to_json(self):
        return {
            'ray': list(self.ray),
            'nu_h': self.nu_h,
            'nu_f': self.nu_f,
            'b': self.b,
            'nu_form': self.nu_form,
            'threshold': self.threshold,
            'coordinate': self.coordinate,
            'pass': self.log_condition
        }


class LogFormReport(object):
    def __init__(self, rep, rays):
        self.rep = rep
        self.rays = rays

    @property
    def is_log_form(self):
        return all(r.log_condition for r in self.rays)

    def __bool__(self):
        return self.is_log_form

    __nonzero__ = __bool__

    def to_json(self):
        return {
            'h': exactpoly.to_text(self.rep.h),
            'm': self.rep.m,
            'is_log_form': self.is_log_form,
            'rays': [r.to_json() for r in self.rays]
        }


class DeformationInstance(object):
    """
    One parameter deformation F(x, t) of f(x); t is the last variable. H defaults to the t-constant
    extension of h
    """

    def __init__(self, big_f, f, m, h=None, big_h=None):
        if big_f.nvars != f.nvars + 1:
            raise exceptions.VariableCountError(
                'Deformation needs {} variables, got {}'.format(f.nvars + 1, big_f.nvars))
        if big_f.set_variable_to_zero(big_f.nvars) != f:
            raise exceptions.PreconditionError('F(x, 0) = {} differs from f = {}'.format(
                big_f.set_variable_to_zero(big_f.nvars), f))
        if big_h is None:
            if h is None:
                raise exceptions.PreconditionError('Either h or an extension H is needed')
            big_h = h.embed(big_f.nvars)
        if big_h.nvars != big_f.nvars:
            raise exceptions.VariableCountError('Extension H must have {} variables'.format(big_f.nvars))
        if m < 1:
            raise exceptions.PreconditionError('Form order m must be positive, got {}'.format(m))
        self.big_f = big_f
        self.f = f
        self.m = m
        self.big_h = big_h


class DeformationReport(object):
    def __init__(self, instance, fan, rays):
        self.instance = instance
        self.fan = fan
        self.rays = rays

    @property
    def passes(self):
        return all(r.passes if not r.coordinate else r.log_condition for r in self.rays)

    def to_json(self):
        rays = list()
        for r in self.rays:
            data = r.to_json()
            data['pass'] = r.passes if not r.coordinate else r.log_condition
            rays.append(data)
        return {
            'F': exactpoly.to_text(self.instance.big_f),
            'H': exactpoly.to_text(self.instance.big_h),
            'm': self.instance.m,
            'verdict': 'H extends h with log poles along the toric resolution' if self.passes else
                       'H has a pole of excessive order along the toric resolution',
            'pass': self.passes,
            'rays': rays,
            'fan': {'rays': len(self.fan.rays()), 'cones': len(self.fan.cones),
                    'subdivision_steps': self.fan.subdivision_steps}
        }


# =================================================================================================
# VALUATIONS
# =================================================================================================

def ray_valuation(p, v):
    """
    Order of p along the toric divisor of ray v: min <v, b> over the support of p
    :param p: Poly
    :param v: tuple(int)
    :return: int
    """

    if p.is_zero():
        raise exceptions.ZeroPolynomialError('The zero polynomial has infinite order along every divisor')
    v = fan_lib.make_ray(v)
    if len(v) != p.nvars:
        raise exceptions.VariableCountError('Ray {} does not have {} entries'.format(v, p.nvars))

    return exactpoly.min_weight(p, v)


def form_valuation(rep, v):
    """
    :param rep: LogFormRep
    :param v: tuple(int)
    :return: RayValuationReport
    """

    return RayValuationReport(v, ray_valuation(rep.h, v), ray_valuation(rep.f, v), rep.m,
                              coordinate=fan_lib.is_coordinate_ray(v))


def resolution_fan(f, cap=None):
    """
    Regularized dual fan of the Newton polyhedron of f
    :param f: Poly
    :param cap: int or None, bound on star subdivision steps
    :return: Fan
    """

    return fan_lib.regularize(fan_lib.dual_fan(polyhedral.newton_polyhedron(f)), cap=cap)


def is_log_form(f, rep, fan=None):
    """
    Checks the log pole criterion along every ray of a regular fan refining the dual fan of f
    :param f: Poly
    :param rep: LogFormRep
    :param fan: Fan, defaults to the regularized dual fan of f
    :return: LogFormReport
    """

    if rep.f != f:
        raise exceptions.PreconditionError('Form representative belongs to {}, not {}'.format(rep.f, f))
    if rep.h.is_zero():
        raise exceptions.ZeroPolynomialError('The zero form has no pole order')
    fan = fan or resolution_fan(f)
    if fan.dimension != f.nvars:
        raise exceptions.FanError('Fan dimension {} does not match {} variables'.format(fan.dimension, f.nvars))

    return LogFormReport(rep, [form_valuation(rep, ray) for ray in fan.rays()])


def residue_class_equal(f, h1, h2):
    """
    Returns whether h1 and h2 define the same residue, i.e. f divides h1 - h2
    """

    _, remainder = exactpoly.divide(h1 - h2, f)
    return remainder.is_zero()


def to_log_basis(h, m):
    """
    Returns g with g * (dx/x)^m = h * (dx)^m, i.e. g = (x_1...x_n)^m * h
    """

    return h.shift(tuple([m] * h.nvars))


def from_log_basis(g, m):
    """
    Inverse of to_log_basis. g must be divisible by (x_1...x_n)^m
    """

    if any(min(b) < m for b in g.support()):
        raise exceptions.PreconditionError('{} is not divisible by (x_1...x_n)^{}'.format(g, m))

    return g.shift(tuple([-m] * g.nvars))


def logform_dimension(f, m, cutoff):
    return len(filtration.logform_basis(f, m, cutoff))


def lemma4_equivalence(f, m, cutoff, fan=None):
    """
    Compares, for every monomial of degree <= cutoff, the ray criterion with the monomial description
    b in m * Delta and b >= (m, ..., m)
    :return: list(tuple(int)), exponents where the two descriptions disagree
    """

    fan = fan or resolution_fan(f)
    basis = set(filtration.logform_basis(f, m, cutoff))
    disagreements = list()
    for b in itertools.product(range(cutoff + 1), repeat=f.nvars):
        if sum(b) > cutoff:
            continue
        rep = LogFormRep(Poly.monomial(b), m, f)
        if bool(is_log_form(f, rep, fan)) != (b in basis):
            disagreements.append(b)

    if disagreements:
        logger.error('Log form criterion disagrees with the monomial description at {}'.format(disagreements))

    return disagreements


# =================================================================================================
# ROUNDING
# =================================================================================================

class RoundingReport(object):
    def __init__(self, m, a, b, nu, lam):
        self.m = m
        self.a = a
        self.b = b
        self.nu = nu
        self.lam = Fraction(lam)
        self.premise = (self.lam - 1) * a + Fraction(nu, m) + b > -1
        self.conclusion = Fraction(nu, m) + b - a >= -1
        self.within_hypothesis = 0 < self.lam < Fraction(1, m * a)

    @property
    def implication(self):
        return not self.premise or self.conclusion

    def to_json(self):
        return {
            'm': self.m, 'a': self.a, 'b': self.b, 'nu': self.nu, 'lambda': str(self.lam),
            'premise': self.premise, 'conclusion': self.conclusion, 'implication': self.implication,
            'within_hypothesis': self.within_hypothesis
        }


def rounding_implication(m, a, b, nu, lam):
    """
    Checks that (lam - 1) * a + nu / m + b > -1 implies nu / m + b - a >= -1 for 0 < lam < 1 / (m * a)
    :return: RoundingReport
    """

    report = RoundingReport(m, a, b, nu, lam)
    if not report.within_hypothesis:
        logger.warning('lambda = {} is outside ]0, 1/(m*a)[ for m={} a={}'.format(report.lam, m, a))

    return report


def rounding_exhaustion(max_m=3, max_a=4, max_b=4, max_nu=12):
    """
    Exhaustive scan of the rounding step: m <= max_m, a <= max_a, |b| <= max_b, |nu| <= max_nu and
    lam = q / (8 * m * a) for 1 <= q <= 7
    :return: dict
    """

    checked = 0
    failures = list()
    for m in range(1, max_m + 1):
        for a in range(1, max_a + 1):
            for b in range(-max_b, max_b + 1):
                for nu in range(-max_nu, max_nu + 1):
                    for q in range(1, 8):
                        report = RoundingReport(m, a, b, nu, Fraction(q, 8 * m * a))
                        checked += 1
                        if not report.implication:
                            failures.append(report.to_json())

    return {'checked': checked, 'failures': failures, 'passed': not failures}


# =================================================================================================
# DEFORMATIONS
# =================================================================================================

def deformation_extension_check(instance, cap=None):
    """
    Builds the regular refinement of the dual fan of F and checks the pole order of H (dx)^m / F^m along
    every ray: nu_H + m*b - m*nu_F >= -m on non-coordinate rays, nu_H >= m on the x coordinate rays
    :param instance: DeformationInstance
    :param cap: int, subdivision cap
    :return: DeformationReport
    """

    big_f = instance.big_f
    n = instance.f.nvars
    if not exactpoly.axis_condition(instance.f):
        raise exceptions.PreconditionError('Non-toric deformation: f = {} does not meet every axis'.format(
            instance.f))
    if instance.big_h.is_zero():
        raise exceptions.ZeroPolynomialError('Extension H must be nonzero')

    np = polyhedral.newton_polyhedron(big_f, require_compact=False)
    fan = fan_lib.regularize(fan_lib.dual_fan(np), cap=cap)
    time_ray = fan_lib.unit_ray(n + 1, n + 1)

    reports = list()
    for ray in fan.rays():
        if ray == time_ray:
            continue
        reports.append(RayValuationReport(
            ray, ray_valuation(instance.big_h, ray), ray_valuation(big_f, ray), instance.m,
            coordinate=fan_lib.is_coordinate_ray(ray)))

    report = DeformationReport(instance, fan, reports)
    if not report.passes:
        logger.warning('Extension fails along rays {}'.format(
            [r.ray for r in reports if not (r.log_condition if r.coordinate else r.passes)]))

    return report
