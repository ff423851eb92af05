#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains implementation to register and read newtonforms configuration files
"""

from __future__ import print_function, division, absolute_import

import os
import glob
import logging
import traceback

import metayaml

from newtonforms.core import consts, config

logger = logging.getLogger('newtonforms')

_PACKAGE_CONFIGS = dict()


def register_package_path(package_name, module_name, config_path, environment='development', config_extension=None):
    """
    Registers configurations path for given package
    :param package_name: str, name of the package configuration files belong to
    :param module_name: str, name of the module this configuration belongs to
    :param config_path: str, path where configuration folders are located
    :param environment: str, environment package is working on ('development' or 'production')
    :param config_extension: str, extension used by the configuration file
    """

    config_extension = config_extension or 'yml'
    if not config_extension.startswith('.'):
        config_extension = '.{}'.format(config_extension)

    if not config_path or not os.path.isdir(config_path):
        logger.warning('Configuration Path "{}" for package "{}" does not exists!'.format(config_path, package_name))
        return

    env_path = os.path.join(config_path, environment.lower())
    if not os.path.isdir(env_path):
        logger.warning(
            'Configuration Folder for environment "{}" and package "{}" does not exists "{}"'.format(
                environment, package_name, env_path))
        return

    config_file = os.path.join(env_path, '{}{}'.format(module_name, config_extension))
    if not os.path.isfile(config_file):
        return

    _PACKAGE_CONFIGS.setdefault(package_name, dict()).setdefault(module_name, dict())[environment] = config_file


def register_package_configs(package_name, config_path, config_extension=None):
    """
    Finds and registers all configuration files located in the environment folders of the given path
    :param package_name: str
    :param config_path: str
    :param config_extension: str, extension used by the configuration file
    """

    config_extension = config_extension or 'yml'
    if not config_extension.startswith('.'):
        config_extension = '.{}'.format(config_extension)

    if not config_path or not os.path.isdir(config_path):
        return

    for environment in [consts.Environment.DEV, consts.Environment.PROD]:
        config_files = glob.glob(os.path.join(config_path, environment, '*{}'.format(config_extension)))
        for config_file in sorted(config_files):
            module_name = os.path.splitext(os.path.basename(config_file))[0]
            register_package_path(
                package_name=package_name, module_name=module_name, config_path=config_path,
                environment=environment, config_extension=config_extension)


def get_config(config_name, package_name=None, environment=None, config_dict=None, parser_class=None):
    """
    Returns configuration
    :param config_name: str
    :param package_name: str
    :param environment: str
    :param config_dict: dict, default values merged under the file values
    :param parser_class: cls
    :return: NewtonConfig
    """

    environment = environment or consts.Environment.PROD
    package_name = package_name or config_name.replace('.', '-').split('-')[0]
    parser_class = parser_class or config.YAMLConfigurationParser
    config_dict = config_dict or dict()

    config_data = dict()
    config_path = _PACKAGE_CONFIGS.get(package_name, dict()).get(config_name, dict()).get(environment)
    if not config_path:
        logger.warning('No configuration "{}" registered for package "{}" ({})'.format(
            config_name, package_name, environment))
    else:
        try:
            config_data = metayaml.read([config_path], config_dict)
        except Exception:
            logger.error('Error while reading configuration files: {} | {}'.format(
                config_path, traceback.format_exc()))
        if not config_data:
            raise RuntimeError('Configuration file "{}" is empty!'.format(config_path))
        if 'config' in config_data and 'path' in config_data['config']:
            raise RuntimeError('Configuration file cannot contains section with path attribute! {}'.format(config_path))
        config_data = dict(config_data)
        config_data.setdefault('config', dict())['path'] = config_path

    parsed_data = parser_class(config_data).parse()

    return config.NewtonConfig(config_name=config_name, environment=environment, data=parsed_data)


def package_config(environment=None):
    """
    Registers (once) and returns the newtonforms package configuration
    :param environment: str or None
    :return: NewtonConfig
    """

    import newtonforms

    if newtonforms.PACKAGE not in _PACKAGE_CONFIGS:
        config_folder = os.path.join(os.path.dirname(os.path.abspath(newtonforms.__file__)), 'config')
        register_package_configs(newtonforms.PACKAGE, config_folder)

    if not environment:
        environment = consts.Environment.DEV if newtonforms.is_dev() else consts.Environment.PROD

    return get_config(consts.CONFIG_NAME, package_name=newtonforms.PACKAGE, environment=environment)
