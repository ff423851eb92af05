#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the command that runs the verification suite on one polynomial or on a corpus file
"""

from __future__ import print_function, division, absolute_import

import logging

from newtonforms.core import consts, exceptions, command, exactpoly, polyhedral, fan as fan_lib
from newtonforms.core import nondegen, filtration, logforms

logger = logging.getLogger('newtonforms')


def read_corpus(path, nvars=None):
    """
    Reads one polynomial per line. Text after # is ignored and blank lines are skipped
    :param path: str
    :param nvars: int or None, inferred per line from the highest variable index when not given
    :return: list(Poly)
    """

    try:
        with open(path, 'r') as fh:
            lines = fh.readlines()
    except (IOError, OSError) as exc:
        raise exceptions.CommandCancel('Cannot read corpus file "{}": {}'.format(path, exc))

    polynomials = list()
    for line in lines:
        text = line.split('#', 1)[0].strip()
        if not text:
            continue
        polynomials.append(exactpoly.parse_poly(text, nvars or exactpoly.infer_nvars(text)))

    if not polynomials:
        raise exceptions.CommandCancel('Corpus file "{}" contains no polynomial'.format(path))

    return polynomials


class CheckCommand(command.NewtonCommand):
    """
    Nondegeneracy, slab equality, fan regularity, multiplication map injectivity, randomized implication
    trials, log form equivalence, normalization round trips and the rounding scan
    """

    id = 'check'

    def resolve_arguments(self, arguments):
        arguments['primes'] = list(arguments.primes or self.config_value('nondegen', 'primes', consts.DEFAULT_PRIMES))
        if arguments.cutoff is None:
            arguments['cutoff'] = self.config_value('degree_cutoff', default=consts.DEFAULT_DEGREE_CUTOFF)
        if arguments.trials is None:
            arguments['trials'] = self.config_value('filtration', 'lemma3_trials', consts.DEFAULT_LEMMA3_TRIALS)
        if arguments.normalization_trials is None:
            arguments['normalization_trials'] = self.config_value(
                'filtration', 'normalization_trials', consts.DEFAULT_NORMALIZATION_TRIALS)
        if arguments.max_a < 0 or arguments.max_k < 1 or arguments.max_m < 1:
            raise exceptions.PreconditionError('Need max_a >= 0, max_k >= 1 and max_m >= 1')
        return arguments

    def run(self, poly=None, nvars=None, corpus=None, axis=None, max_a=3, max_k=3, max_m=3, cutoff=None,
            primes=None, seed=consts.DEFAULT_SEED, trials=None, normalization_trials=None):
        if corpus:
            polynomials = read_corpus(corpus, nvars)
        else:
            polynomials = [self.parse_polynomial(poly, nvars)]

        results = [self._check_polynomial(f, axis) for f in polynomials]
        rounding = logforms.rounding_exhaustion()
        failed = not rounding['passed'] or any(not r['passed'] for r in results)
        if not rounding['passed']:
            logger.error('Rounding scan found {} violations'.format(len(rounding['failures'])))

        return {
            'polynomials': results,
            'rounding': {'checked': rounding['checked'], 'passed': rounding['passed'],
                         'failures': rounding['failures']},
            'passed': not failed,
            'exit_code': consts.ExitCodes.VerificationFailed if failed else consts.ExitCodes.Success
        }

    def _check_polynomial(self, f, axis):
        args = self.arguments
        evaluation_cap = self.config_value('nondegen', 'evaluation_cap', consts.DEFAULT_EVALUATION_CAP)
        enumeration_cap = self.config_value('polyhedral', 'enumeration_cap', consts.DEFAULT_ENUMERATION_CAP)
        subdivision_cap = self.config_value('fan', 'subdivision_cap', consts.DEFAULT_SUBDIVISION_CAP)
        contact_rule = self.config_value('polyhedral', 'contact_rule', consts.ContactRules.Vertex)
        random_points = self.config_value('filtration', 'slab_random_points', 1000)

        logger.info('Checking {}'.format(f))
        verdict = nondegen.check_nondegenerate(f, primes=args.primes, cap=evaluation_cap)
        axis_condition = exactpoly.axis_condition(f)
        report = {
            'polynomial': exactpoly.to_text(f),
            'nvars': f.nvars,
            'axis_condition': axis_condition,
            'nondegeneracy': verdict.to_json(),
            'contact_rule': contact_rule
        }
        failures = list()

        np = polyhedral.newton_polyhedron(f)
        fan = logforms.resolution_fan(f, cap=subdivision_cap)
        report['fan'] = {
            'rays': len(fan.rays()),
            'cones': len(fan.cones),
            'regular': fan_lib.is_regular(fan),
            'support_is_orthant': fan_lib.check_support(fan),
            'subdivision_steps': fan.subdivision_steps
        }
        if not (report['fan']['regular'] and report['fan']['support_is_orthant']):
            failures.append('fan')

        if axis_condition:
            axes = [axis] if axis else list(range(1, f.nvars + 1))
            report['contact_divergence'] = [
                i for i in axes if polyhedral.build_delta1(np, i).low_dimensional_contacts]

            slab = {str(i): [[str(x) for x in point] for point in polyhedral.slab_check(
                np, i, random_points=random_points, seed=args.seed, contact_rule=contact_rule)] for i in axes}
            report['slab'] = slab
            if any(slab.values()):
                failures.append('slab')

            lemma1 = list()
            for i in axes:
                for a in range(args.max_a + 1):
                    for k in range(1, args.max_k + 1):
                        lemma1.append(filtration.lemma1_verify(
                            f, a, k, i, cap=enumeration_cap, contact_rule=contact_rule).to_json())
            report['lemma1'] = lemma1
            if not all(entry['injective'] for entry in lemma1):
                failures.append('lemma1')

            lemma2 = [filtration.lemma3_trials(f, args.trials, args.seed, variant=consts.IdealKinds.SingleAxis,
                                               axis=i).to_json() for i in axes]
            lemma3 = filtration.lemma3_trials(f, args.trials, args.seed).to_json()
            report['lemma2'] = lemma2
            report['lemma3'] = lemma3
            if not (lemma3['passed'] and all(entry['passed'] for entry in lemma2)):
                failures.append('lemma2/3')
        else:
            report['skipped'] = 'axis condition fails: slab and lemma sweeps need it'

        equivalence = dict()
        for m in range(1, args.max_m + 1):
            equivalence[str(m)] = {
                'dimension': logforms.logform_dimension(f, m, args.cutoff),
                'disagreements': [list(b) for b in logforms.lemma4_equivalence(f, m, args.cutoff, fan)]
            }
        report['lemma4_equivalence'] = equivalence
        if any(entry['disagreements'] for entry in equivalence.values()):
            failures.append('lemma4_equivalence')

        normalization = [filtration.normalization_trials(f, m, args.normalization_trials, args.seed).to_json()
                         for m in (1, 2)]
        report['normalization'] = normalization
        if not all(entry['passed'] for entry in normalization):
            failures.append('normalization')

        report['failures'] = failures
        report['within_hypothesis'] = axis_condition and verdict.is_nondegenerate()
        report['passed'] = not failures
        if failures:
            logger.error('Verification failed for {}: {}'.format(f, failures))

        return report
