#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains exceptions used by newtonforms libraries
"""

from __future__ import print_function, division, absolute_import


class NewtonFormsError(Exception):
    pass


class PolynomialSyntaxError(NewtonFormsError):
    def __init__(self, message, position=None):
        if position is not None:
            message = '{} (at position {})'.format(message, position)
        super(PolynomialSyntaxError, self).__init__(message)
        self._position = position

    @property
    def position(self):
        return self._position


class VariableCountError(NewtonFormsError):
    pass


class ModularReductionError(NewtonFormsError):
    pass


class ZeroPolynomialError(NewtonFormsError):
    pass


class EmptyGeneratorError(NewtonFormsError):
    pass


class PolyhedronError(NewtonFormsError):
    pass


class EnumerationOverflowError(NewtonFormsError):
    pass


class FanError(NewtonFormsError):
    pass


class SubdivisionCapError(FanError):
    pass


class PreconditionError(NewtonFormsError):
    pass


class ConfigError(NewtonFormsError):
    pass


class CounterexampleError(NewtonFormsError):
    """
    Raised when a statement that must hold for the inputs is violated. Carries all the data needed to
    reproduce the failure
    """

    def __init__(self, message, data=None):
        super(CounterexampleError, self).__init__(message)
        self._data = data or dict()

    @property
    def data(self):
        return self._data


class CommandCancel(NewtonFormsError):
    def __init__(self, message, errors=None):
        super(CommandCancel, self).__init__(message)
        self._errors = errors

    @property
    def errors(self):
        return self._errors
