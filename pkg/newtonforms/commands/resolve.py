#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the command that builds the regular refinement of a dual fan
"""

from __future__ import print_function, division, absolute_import

import json
import logging

from newtonforms.core import consts, exceptions, command, exactpoly, polyhedral, fan as fan_lib

logger = logging.getLogger('newtonforms')


class ResolveCommand(command.NewtonCommand):
    """
    Dual fan of the Newton polyhedron (or of a fan file) and its regular simplicial refinement
    """

    id = 'resolve'

    def run(self, poly=None, nvars=None, fan=None):
        if fan:
            try:
                with open(fan, 'r') as fh:
                    base = fan_lib.fan_from_json(json.load(fh))
            except (IOError, OSError, ValueError) as exc:
                raise exceptions.FanError('Cannot read fan file "{}": {}'.format(fan, exc))
            source = {'fan_file': fan}
        else:
            f = self.parse_polynomial(poly, nvars)
            base = fan_lib.dual_fan(polyhedral.newton_polyhedron(f))
            source = {'polynomial': exactpoly.to_text(f)}

        cap = self.config_value('fan', 'subdivision_cap', consts.DEFAULT_SUBDIVISION_CAP)
        regular = fan_lib.regularize(base, cap=cap)
        full_support = fan_lib.check_support(regular)
        certificate = {
            'regular': fan_lib.is_regular(regular),
            'max_multiplicity': regular.max_multiplicity(),
            'support_is_orthant': full_support,
            'refines_input': fan_lib.refines(regular, base) if full_support and fan_lib.check_support(base)
            else None,
            'subdivision_steps': regular.subdivision_steps
        }
        report = dict(source)
        report.update({
            'sigma0': fan_lib.fan_to_json(base),
            'sigma': fan_lib.fan_to_json(regular),
            'multiplicities': [fan_lib.cone_multiplicity(cone) for cone in regular.cones],
            'certificate': certificate,
            'exit_code': consts.ExitCodes.Success if certificate['regular'] else consts.ExitCodes.VerificationFailed
        })

        return report
