# -*- coding: utf-8 -*-

'''
core
----

core objects and functions shared by every mullineux module
'''

###############################################################################


from __future__ import (
    absolute_import,
    division,
    print_function,
    unicode_literals,
)

from mock import Mock


class MullineuxError(Exception):
    '''
    base exception for domain errors
    '''

    def __init__(self, value):
        '''
        :param value: the exception information
        :type value: typically `str`
        '''

        self.value = value

    def __str__(self):
        return str(self.value)


class InternalError(MullineuxError):
    '''
    raised when a guaranteed property of the pipeline fails to hold
    '''


def get_log(log=None):
    '''
    returns `log`, or a silent stand-in when `log` is None

    :param log: caller supplied log
    :type log: `logbook.Logger`
    '''

    return Mock() if log is None else log
