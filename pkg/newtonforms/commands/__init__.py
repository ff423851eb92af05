#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Initialization module for newtonforms commands
"""

from __future__ import print_function, division, absolute_import


def register_commands(runner):
    """
    Registers the command line commands into the given runner
    :param runner: CommandRunner
    """

    from newtonforms.commands import newton, resolve, check, extend

    for command_class in (newton.NewtonPolyhedronCommand, resolve.ResolveCommand, check.CheckCommand,
                          extend.ExtendCommand):
        runner.register_command(command_class)
