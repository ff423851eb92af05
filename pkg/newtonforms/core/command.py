#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the command implementation used by the newtonforms command line
"""

from __future__ import print_function, division, absolute_import

import sys
import time
import inspect
import logging
import traceback
from abc import ABCMeta, abstractmethod

from newtonforms.core import consts, exceptions, exactpoly

logger = logging.getLogger('newtonforms')


class NewtonCommand(metaclass=ABCMeta):

    class ArgumentParser(dict):
        def __getattr__(self, item):
            try:
                return self[item]
            except KeyError:
                return super(NewtonCommand.ArgumentParser, self).__getattribute__(item)

    id = None
    creator = 'newtonforms'

    def __init__(self, config=None, stats=None):
        self._config = config
        self._stats = stats
        self._arguments = self.ArgumentParser()
        self.initialize()

    @property
    def config(self):
        return self._config

    @property
    def stats(self):
        return self._stats

    @stats.setter
    def stats(self, value):
        self._stats = value

    @property
    def arguments(self):
        return self._arguments

    @abstractmethod
    def run(self, **kwargs):
        """
        Executes the command functionality
        :param kwargs: dict, keyword arguments only
        :return: dict, JSON ready report. Its 'exit_code' entry is used as process exit code
        """

        raise NotImplementedError('abstract command function run not implemented!')

    def initialize(self):
        """
        Collects the keyword arguments (and their defaults) of the run function
        """

        parameters = list(inspect.signature(self.run).parameters.values())
        if any(p.default is inspect.Parameter.empty for p in parameters if p.kind == p.POSITIONAL_OR_KEYWORD):
            raise ValueError('Command run function({}) must only use keyword arguments.'.format(self.id))
        self._arguments = self.ArgumentParser(
            (p.name, p.default) for p in parameters if p.kind == p.POSITIONAL_OR_KEYWORD)

        return self._arguments

    def description(self):
        return self.__doc__

    def config_value(self, section, name=None, default=None):
        if not self._config:
            return default
        return self._config.get(section, name, default=default)

    def parse_arguments(self, arguments):
        """
        Parses given command arguments. None values fall back to the run function defaults
        :param arguments: dict
        :return: bool
        """

        unknown = [name for name in arguments if name not in self._arguments]
        if unknown:
            raise exceptions.CommandCancel('Unknown arguments for command {}: {}'.format(self.id, unknown))
        kwargs = self.ArgumentParser(self._arguments)
        kwargs.update({k: v for k, v in arguments.items() if v is not None})
        self._arguments = self.ArgumentParser(self.resolve_arguments(kwargs))

        return True

    def resolve_arguments(self, arguments):
        """
        Function that is called before running the command. Useful to validate incoming command arguments
        :param arguments: dict
        :return: dict
        """

        return arguments

    def parse_polynomial(self, text, nvars=None):
        if text is None:
            raise exceptions.CommandCancel('Command {} needs a polynomial'.format(self.id))
        return exactpoly.parse_poly(text, nvars or exactpoly.infer_nvars(text))


class CommandStats(object):
    def __init__(self, command):
        self._command = command
        self._start_time = 0.0
        self._end_time = 0.0
        self._execution_time = 0.0
        self._info = {
            'name': command.__class__.__name__,
            'creator': command.creator,
            'module': command.__class__.__module__,
            'id': command.id
        }

    @property
    def execution_time(self):
        return self._execution_time

    @property
    def info(self):
        return self._info

    def start(self):
        self._start_time = time.time()

    def finish(self, trace=None):
        self._end_time = time.time()
        self._execution_time = self._end_time - self._start_time
        self._info['executionTime'] = self._execution_time
        if trace:
            self._info['traceback'] = trace
        logger.debug('Command {} finished in {:.3f}s'.format(self._info['id'], self._execution_time))


class MetaCommandRunner(type):

    _instance = None

    def __call__(cls, *args, **kwargs):
        if cls._instance is None:
            cls._instance = type.__call__(cls, *args, **kwargs)

        return cls._instance


class CommandRunner(metaclass=MetaCommandRunner):
    def __init__(self):
        self._commands = dict()

    def register_command(self, command_class):
        if not command_class.id:
            raise ValueError('Command {} has no id'.format(command_class.__name__))
        self._commands[command_class.id] = command_class

    def commands(self):
        return [self._commands[command_id] for command_id in sorted(self._commands)]

    def find_command(self, command_id):
        """
        Returns registered command by its ID
        :param command_id: str
        :return: NewtonCommand
        """

        return self._commands.get(command_id)

    def run(self, command_id, config=None, **kwargs):
        command_class = self.find_command(command_id)
        if not command_class:
            raise exceptions.CommandCancel('No command found with given id "{}"'.format(command_id))

        command_to_run = command_class(config=config)
        command_to_run.stats = CommandStats(command_to_run)
        command_to_run.parse_arguments(kwargs)

        trace = None
        command_to_run.stats.start()
        try:
            return command_to_run.run(**command_to_run.arguments)
        except exceptions.NewtonFormsError:
            raise
        except Exception:
            exc_type, exc_value, exc_trace = sys.exc_info()
            trace = traceback.format_exception(exc_type, exc_value, exc_trace)
            logger.exception(trace)
            raise
        finally:
            command_to_run.stats.finish(trace)


def exit_code_for(report):
    return report.get('exit_code', consts.ExitCodes.Success)
