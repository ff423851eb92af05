#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains implementation for newtonforms configuration objects
"""

from __future__ import print_function, division, absolute_import

import logging

import sympy

from newtonforms.core import consts, exceptions

logger = logging.getLogger('newtonforms')


class ConfigAttribute(dict, object):
    """
    Class that allows access nested dictionaries using Python attribute access
    """

    def __init__(self, *args, **kwargs):
        super(ConfigAttribute, self).__init__(*args, **kwargs)
        self.__dict__ = self

    @staticmethod
    def from_nested_dict(data):
        """
        Constructs a nested ConfigAttribute from nested dictionaries
        :param data: dict
        :return: ConfigAttribute
        """

        if not isinstance(data, dict):
            return data
        else:
            return ConfigAttribute(
                {key: ConfigAttribute.from_nested_dict(data[key]) for key in data})


class YAMLConfigurationParser(object):
    """
    Checks the values read from a configuration file before they reach the commands. Entries are
    (section, name), with None as section for top level attributes
    """

    POSITIVE_INTEGERS = (
        (None, 'degree_cutoff'),
        ('polyhedral', 'enumeration_cap'),
        ('fan', 'subdivision_cap'),
        ('nondegen', 'evaluation_cap'),
        ('filtration', 'lemma3_trials'),
        ('filtration', 'normalization_trials'),
        ('filtration', 'slab_random_points')
    )

    def __init__(self, config_data):
        super(YAMLConfigurationParser, self).__init__()

        self._config_data = config_data
        self._parsed_data = dict()

    def parse(self):
        self._parsed_data = dict(self._config_data or dict())

        for section, name in self.POSITIVE_INTEGERS:
            value = self._value(section, name)
            if value is not None and not self._is_integer(value, minimum=1):
                raise exceptions.ConfigError('"{}" must be a positive integer, got {!r}'.format(
                    self._key(section, name), value))

        seed = self._value(None, 'seed')
        if seed is not None and not self._is_integer(seed, minimum=0):
            raise exceptions.ConfigError('"seed" must be a nonnegative integer, got {!r}'.format(seed))

        primes = self._value('nondegen', 'primes')
        if primes is not None:
            if isinstance(primes, (str, bytes)) or not isinstance(primes, (list, tuple)) or not primes:
                raise exceptions.ConfigError('"nondegen.primes" must be a non empty list, got {!r}'.format(primes))
            for prime in primes:
                if not self._is_integer(prime, minimum=3) or not sympy.isprime(prime):
                    raise exceptions.ConfigError('"nondegen.primes" holds {!r}, odd primes only'.format(prime))

        contact_rule = self._value('polyhedral', 'contact_rule')
        if contact_rule is not None and contact_rule not in (consts.ContactRules.Facet, consts.ContactRules.Vertex):
            raise exceptions.ConfigError('"polyhedral.contact_rule" must be "{}" or "{}", got {!r}'.format(
                consts.ContactRules.Facet, consts.ContactRules.Vertex, contact_rule))

        return ConfigAttribute.from_nested_dict(self._parsed_data)

    def _value(self, section, name):
        if section is None:
            return self._parsed_data.get(name)
        data = self._parsed_data.get(section)
        if not isinstance(data, dict):
            return None
        return data.get(name)

    @staticmethod
    def _key(section, name):
        return name if section is None else '{}.{}'.format(section, name)

    @staticmethod
    def _is_integer(value, minimum):
        return isinstance(value, int) and not isinstance(value, bool) and value >= minimum


class NewtonConfig(object):
    def __init__(self, config_name, data, environment=None):
        super(NewtonConfig, self).__init__()

        self._config_name = config_name
        self._environment = environment or 'production'
        self._parsed_data = data or ConfigAttribute()

    @property
    def name(self):
        return self._config_name

    @property
    def environment(self):
        return self._environment

    @property
    def data(self):
        return self._parsed_data

    @data.setter
    def data(self, value):
        self._parsed_data = value

    def get_path(self):
        if not self._parsed_data:
            return None

        return self._parsed_data.get('config', {}).get('path', None)

    def get(self, attr_section, attr_name=None, default=None):
        """
        Returns an attribute of the configuration
        :param attr_section: str, section name (or top level attribute name if attr_name is not given)
        :param attr_name: str
        :param default: object
        :return: object
        """

        if not self._parsed_data:
            logger.debug('Configuration "{}" is empty for "{}"'.format(self._config_name, self._environment))
            return default

        if attr_name is None:
            attr_value = self._parsed_data.get(attr_section, None)
            if attr_value is None:
                logger.debug('Configuration "{}" has no attribute "{}" for "{}"'.format(
                    self._config_name, attr_section, self._environment))
                return default
            return attr_value

        section = self._parsed_data.get(attr_section, None)
        if not section:
            logger.debug('Configuration "{}" has no section "{}" for "{}"'.format(
                self._config_name, attr_section, self._environment))
            return default
        attr_value = section.get(attr_name, None)
        if attr_value is None:
            logger.debug('Configuration "{}" has no attribute "{}" in section "{}" for "{}"'.format(
                self._config_name, attr_name, attr_section, self._environment))
            return default

        return attr_value
