# -*- coding: utf-8 -*-

__author__ = 'The mullineux developers'
__email__ = 'mullineux@users.noreply.github.com'
__version__ = '0.3.0'
