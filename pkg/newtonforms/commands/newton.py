#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the command that describes a Newton polyhedron
"""

from __future__ import print_function, division, absolute_import

import logging

from newtonforms.core import consts, command, exactpoly, polyhedral

logger = logging.getLogger('newtonforms')


class NewtonPolyhedronCommand(command.NewtonCommand):
    """
    Facets, vertices and compact faces of the Newton polyhedron, plus the relaxed polyhedron of an axis
    """

    id = 'newton'

    def run(self, poly=None, nvars=None, delta1_axis=None):
        f = self.parse_polynomial(poly, nvars)
        np = polyhedral.newton_polyhedron(f)
        report = {
            'polynomial': exactpoly.to_text(f),
            'nvars': f.nvars,
            'axis_condition': exactpoly.axis_condition(f),
            'polyhedron': polyhedral.polyhedron_to_json(np, with_faces=True),
            'exit_code': consts.ExitCodes.Success
        }
        if delta1_axis:
            report['delta1'] = polyhedral.delta1_to_json(polyhedral.build_delta1(np, delta1_axis))

        return report
