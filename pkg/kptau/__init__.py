# -*- coding: utf-8 -*-

"""Top-level package for kptau."""

__author__ = """kptau developers"""
__email__ = 'kptau@users.noreply.github.com'
__version__ = '0.1.0'
