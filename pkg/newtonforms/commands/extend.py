#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the command that checks the pole order of an extension over a one parameter deformation.
The deformation parameter t is always the last variable
"""

from __future__ import print_function, division, absolute_import

import logging

from newtonforms.core import consts, exceptions, command, exactpoly, logforms

logger = logging.getLogger('newtonforms')


class ExtendCommand(command.NewtonCommand):
    """
    Pole order of H (dx)^m / F^m along the rays of the regular refinement of the dual fan of F
    """

    id = 'extend'

    def run(self, deformation=None, poly=None, nvars=None, form=None, extension=None, m=1):
        if deformation is None:
            raise exceptions.CommandCancel('extend needs a deformation F(x, t)')
        total = nvars + 1 if nvars else exactpoly.infer_nvars(deformation)
        if total < 2:
            raise exceptions.VariableCountError('A deformation needs at least one x variable and t')
        big_f = exactpoly.parse_poly(deformation, total)
        base = big_f.set_variable_to_zero(total)
        f = exactpoly.parse_poly(poly, total - 1) if poly else base

        h = exactpoly.parse_poly(form, total - 1) if form else None
        big_h = exactpoly.parse_poly(extension, total) if extension else None
        instance = logforms.DeformationInstance(big_f, f, m, h=h, big_h=big_h)
        result = logforms.deformation_extension_check(
            instance, cap=self.config_value('fan', 'subdivision_cap', consts.DEFAULT_SUBDIVISION_CAP))

        report = result.to_json()
        report['f'] = exactpoly.to_text(f)
        report['exit_code'] = consts.ExitCodes.Success if result.passes else consts.ExitCodes.VerificationFailed

        return report
