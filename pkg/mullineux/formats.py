# -*- coding: utf-8 -*-

'''
formats
-------

JSON encoding and decoding of partitions, multipartitions and multicharges
'''

###############################################################################


from __future__ import (
    absolute_import,
    division,
    print_function,
    unicode_literals,
)
import json

import numpy as np
from six import string_types

from .core import MullineuxError
from .partitions import (
    INFINITY,
    Multicharge,
    Multipartition,
    Partition,
    PartitionError,
    check_modulus,
)


class InputError(MullineuxError):
    '''
    raised for malformed input
    '''


class ParseError(InputError):
    '''
    raised for malformed word strings; `offset` points at the bad token
    '''

    def __init__(self, value, offset):
        super(ParseError, self).__init__(value)
        self.offset = offset

    def __str__(self):
        return '%s (at offset %s)' % (self.value, self.offset)


def encode(obj):
    '''
    converts mullineux values into JSON-ready python objects
    '''

    if isinstance(obj, Multicharge):
        e = 'inf' if obj.infinite else obj.e
        return {'charges': list(obj.charges), 'e': e}

    if isinstance(obj, (list, tuple)):
        return [encode(x) for x in obj]

    if isinstance(obj, dict):
        return {k: encode(v) for (k, v) in obj.items()}

    if isinstance(obj, np.bool_):
        return bool(obj)

    if isinstance(obj, np.integer):
        return int(obj)

    if isinstance(obj, np.floating):
        obj = float(obj)

    if obj == INFINITY:
        return 'inf'

    return obj


def dumps(obj):
    '''
    serializes `obj` compactly with sorted keys, so output is byte-stable
    '''

    return json.dumps(encode(obj), sort_keys=True, separators=(',', ':'))


def _load(value, what):

    if not isinstance(value, string_types):
        return value

    try:
        return json.loads(value)
    except ValueError as e:
        raise InputError('%s is not valid JSON: %s' % (what, e))


def parse_modulus(value):
    '''
    parses a modulus: an integer >= 2 or the string "inf"
    '''

    if isinstance(value, string_types):
        value = value.strip()
        if value.lower() in ('inf', 'infinity', '∞'):
            return INFINITY
        try:
            value = int(value)
        except ValueError:
            raise InputError('e must be an integer or "inf", got %r' % value)

    try:
        return check_modulus(value)
    except PartitionError as e:
        raise InputError(str(e))


def parse_partition(value):
    '''
    parses a partition from a JSON array (text or decoded)
    '''

    value = _load(value, 'partition')

    if not isinstance(value, list):
        raise InputError('partition must be a JSON array, got %r' % (value,))

    try:
        return Partition(value)
    except PartitionError as e:
        raise InputError(str(e))


def parse_multipartition(value, level=None):
    '''
    parses a multipartition from a JSON array of arrays (text or decoded)

    :param level: required number of components, if any
    :type level: `int`
    '''

    value = _load(value, 'multipartition')

    if not isinstance(value, list) or not value:
        raise InputError('multipartition must be a non-empty JSON array')

    result = Multipartition([parse_partition(p) for p in value])

    if level is not None and result.level != level:
        v = (result.compact(), level)
        raise InputError('%s must have %s components' % v)

    return result


def parse_charges(value):
    '''
    parses a JSON array of integers (text or decoded)
    '''

    value = _load(value, 'charges')

    if not isinstance(value, list) or not value:
        raise InputError('charges must be a non-empty JSON array')

    if any(isinstance(x, bool) or not isinstance(x, int) for x in value):
        raise InputError('charges must be integers, got %r' % (value,))

    return tuple(value)


def parse_multicharge(value, e=None):
    '''
    parses {"charges": [...], "e": k|"inf"} or, when `e` is given, a bare
    array of charges
    '''

    value = _load(value, 'multicharge')

    if isinstance(value, dict):
        if 'charges' not in value:
            raise InputError('multicharge needs a "charges" field')
        e = value.get('e', 'inf' if e is None else e)
        value = value['charges']

    elif e is None:
        raise InputError('multicharge needs a modulus')

    return Multicharge(parse_charges(value), parse_modulus(e))
