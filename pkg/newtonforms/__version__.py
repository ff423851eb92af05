#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Version module for newtonforms
"""

from __future__ import print_function, division, absolute_import

__version__ = None


def get_version():
    global __version__
    if __version__:
        return __version__

    try:
        from importlib.metadata import version, PackageNotFoundError
    except ImportError:
        return '0.1.0'

    try:
        __version__ = version('newtonforms-core')
    except PackageNotFoundError:
        __version__ = '0.1.0'

    return __version__
