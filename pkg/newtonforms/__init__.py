#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Initialization module for newtonforms
"""

from __future__ import print_function, division, absolute_import

import os
import logging.config

# =================================================================================

PACKAGE = 'newtonforms'

# =================================================================================


def is_dev():
    """
    Returns whether the package runs in development mode (NEWTONFORMS_DEV environment variable)
    :return: bool
    """

    return str(os.getenv('NEWTONFORMS_DEV', 'False')).strip().lower() in ('1', 'true', 'yes', 'on')


def create_logger():
    """
    Returns logger of current module
    """

    logger_directory = os.path.normpath(os.path.join(os.path.expanduser('~'), PACKAGE, 'logs'))
    if not os.path.isdir(logger_directory):
        os.makedirs(logger_directory)

    logging_config = os.path.normpath(os.path.join(os.path.dirname(__file__), '__logging__.ini'))

    logging.config.fileConfig(logging_config, disable_existing_loggers=False)
    logger = logging.getLogger(PACKAGE)
    if is_dev():
        logger.setLevel(logging.DEBUG)
        for handler in logger.handlers:
            handler.setLevel(logging.DEBUG)

    return logger


create_logger()
