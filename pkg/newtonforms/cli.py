#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Command line front end for newtonforms
"""

from __future__ import print_function, division, absolute_import

import sys
import json
import logging
import argparse

from newtonforms import __version__
from newtonforms.core import consts, exceptions, command
from newtonforms.commands import register_commands
from newtonforms.managers import configs

logger = logging.getLogger('newtonforms')


def _primes(text):
    try:
        return [int(p) for p in text.split(',') if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError('Primes must be a comma separated list of integers: {}'.format(text))


def build_parser():
    parser = argparse.ArgumentParser(
        prog='newtonforms', description='Newton polyhedra, toric resolutions and log pluricanonical forms.')
    parser.add_argument('--version', action='version', version=__version__.get_version())
    parser.add_argument('--format', choices=[consts.OutputFormats.Json, consts.OutputFormats.Text],
                        default=consts.OutputFormats.Json)
    parser.add_argument('--seed', type=int, default=None)
    parser.add_argument('--config-env', choices=[consts.Environment.DEV, consts.Environment.PROD], default=None)
    parser.add_argument('--output', default=None, help='Write the report to this file instead of stdout')
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    newton = subparsers.add_parser('newton', help='Newton polyhedron and relaxed polyhedron')
    newton.add_argument('--poly', required=True)
    newton.add_argument('--nvars', type=int)
    newton.add_argument('--delta1-axis', type=int)

    resolve = subparsers.add_parser('resolve', help='Dual fan and its regular refinement')
    source = resolve.add_mutually_exclusive_group(required=True)
    source.add_argument('--poly')
    source.add_argument('--fan', help='Fan JSON file')
    resolve.add_argument('--nvars', type=int)

    check = subparsers.add_parser('check', help='Verification suite')
    check_source = check.add_mutually_exclusive_group(required=True)
    check_source.add_argument('--poly')
    check_source.add_argument('--corpus', help='File with one polynomial per line')
    check.add_argument('--nvars', type=int)
    check.add_argument('--axis', type=int)
    check.add_argument('--max-a', type=int, default=3)
    check.add_argument('--max-k', type=int, default=3)
    check.add_argument('--max-m', type=int, default=3)
    check.add_argument('--cutoff', type=int)
    check.add_argument('--primes', type=_primes)
    check.add_argument('--trials', type=int)
    check.add_argument('--normalization-trials', type=int)

    extend = subparsers.add_parser('extend', help='Pole order of an extension over a deformation (t = last variable)')
    extend.add_argument('--deformation', required=True)
    extend.add_argument('--poly', help='Base polynomial f, defaults to F(x, 0)')
    extend.add_argument('--nvars', type=int, help='Number of x variables')
    extend.add_argument('--form', help='Form numerator h in the x variables')
    extend.add_argument('--extension', help='Candidate extension H(x, t), defaults to h')
    extend.add_argument('--m', type=int, default=1)

    return parser


def _run_config(args, config):
    run_config = {k: v for k, v in sorted(vars(args).items()) if k not in ('output',)}
    run_config['config_environment'] = config.environment
    return run_config


def render_text(data, indent=0):
    lines = list()
    pad = '  ' * indent
    if isinstance(data, dict):
        for key in sorted(data):
            value = data[key]
            if isinstance(value, (dict, list)) and value:
                lines.append('{}{}:'.format(pad, key))
                lines.append(render_text(value, indent + 1))
            else:
                lines.append('{}{}: {}'.format(pad, key, value))
    elif isinstance(data, list):
        for item in data:
            if isinstance(item, (dict, list)) and item:
                lines.append('{}-'.format(pad))
                lines.append(render_text(item, indent + 1))
            else:
                lines.append('{}- {}'.format(pad, item))
    else:
        lines.append('{}{}'.format(pad, data))

    return '\n'.join(lines)


def format_report(report, output_format):
    if output_format == consts.OutputFormats.Text:
        return render_text(report) + '\n'
    return json.dumps(report, sort_keys=True, indent=2, default=str) + '\n'


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        config = configs.package_config(environment=args.config_env)
    except exceptions.ConfigError as exc:
        sys.stderr.write('newtonforms: config error: {}\n'.format(exc))
        return consts.ExitCodes.InputError
    seed = args.seed if args.seed is not None else config.get('seed', default=consts.DEFAULT_SEED)
    args.seed = seed

    runner = command.CommandRunner()
    if not runner.find_command(args.command):
        register_commands(runner)

    kwargs = {k: v for k, v in vars(args).items()
              if k not in ('command', 'format', 'config_env', 'output', 'seed')}
    if args.command == 'check':
        kwargs['seed'] = seed

    try:
        report = runner.run(args.command, config=config, **kwargs)
        exit_code = command.exit_code_for(report)
    except exceptions.CounterexampleError as exc:
        logger.error('Counterexample: {}'.format(exc))
        report = {'error': str(exc), 'counterexample': exc.data}
        exit_code = consts.ExitCodes.VerificationFailed
    except exceptions.NewtonFormsError as exc:
        report = {'error': str(exc), 'error_type': exc.__class__.__name__}
        exit_code = consts.ExitCodes.InputError
        sys.stderr.write('newtonforms: error: {}\n'.format(exc))

    report.pop('exit_code', None)
    report['version'] = __version__.get_version()
    report['config'] = _run_config(args, config)
    report['exit_code'] = exit_code
    text = format_report(report, args.format)
    if args.output:
        with open(args.output, 'w') as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)

    return exit_code


if __name__ == '__main__':
    sys.exit(main())
