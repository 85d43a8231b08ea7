# -*- coding: utf-8 -*-

'''
partitions
----------

partitions, multipartitions, nodes, multicharges, contents and residues
'''

###############################################################################


from __future__ import (
    absolute_import,
    division,
    print_function,
    unicode_literals,
)
from builtins import str
from collections import namedtuple
from itertools import product
from numbers import Integral

from .core import MullineuxError


INFINITY = float('inf')

EMPTY_SYMBOL = '∅'


class PartitionError(MullineuxError):
    '''
    raised for sequences that are not partitions or multicharges
    '''


def _as_int(value, what):

    if isinstance(value, bool) or not isinstance(value, Integral):
        raise PartitionError('%s must be an integer, got %r' % (what, value))

    return int(value)


def check_modulus(e):
    '''
    validates and returns a modulus: an integer >= 2 or `INFINITY`

    :param e: the modulus
    :type e: `int` or `INFINITY`
    '''

    if e == INFINITY:
        return INFINITY

    e = _as_int(e, 'e')

    if e < 2:
        raise PartitionError('e must be at least 2, got %s' % e)

    return e


def reduce_mod(x, e):
    '''
    reduces `x` modulo `e`; no reduction when `e` is `INFINITY`
    '''

    return x if e == INFINITY else x % e


class Partition(tuple):
    '''
    weakly decreasing tuple of positive parts, stored without trailing zeros

    example::

      Partition((4, 1))
    '''

    def __new__(cls, parts=()):

        parts = [_as_int(p, 'part') for p in parts]

        while parts and parts[-1] == 0:
            parts.pop()

        if any(p <= 0 for p in parts):
            raise PartitionError('parts must be positive: %r' % (parts,))

        if any(a < b for (a, b) in zip(parts, parts[1:])):
            raise PartitionError('parts must not increase: %r' % (parts,))

        return super(Partition, cls).__new__(cls, parts)

    def __repr__(self):
        return 'Partition(%r)' % (tuple(self),)

    def __str__(self):
        return self.compact()

    @property
    def rank(self):
        return sum(self)

    def part(self, row):
        '''
        returns the length of `row` (1-indexed), zero past the last part
        '''

        return self[row - 1] if row <= len(self) else 0

    def conjugate(self):
        '''
        returns the transposed partition
        '''

        if not self:
            return self

        return Partition(
            sum(1 for p in self if p >= j) for j in range(1, self[0] + 1)
        )

    def is_e_regular(self, e):
        '''
        true iff no part is repeated `e` or more times

        :param e: the modulus (`INFINITY` accepts every partition)
        :type e: `int`
        '''

        e = check_modulus(e)

        if e == INFINITY:
            return True

        return all(self.count(p) < e for p in set(self))

    def addable_rows(self):
        '''
        rows (1-indexed) whose end admits a new cell
        '''

        return [
            r for r in range(1, len(self) + 2)
            if r == 1 or self.part(r - 1) > self.part(r)
        ]

    def removable_rows(self):
        '''
        rows (1-indexed) whose last cell can be removed
        '''

        return [
            r for r in range(1, len(self) + 1)
            if self.part(r) > self.part(r + 1)
        ]

    def add_cell(self, row):

        parts = list(self) + [0]
        parts[row - 1] += 1
        return Partition(parts)

    def remove_cell(self, row):

        parts = list(self)
        parts[row - 1] -= 1
        return Partition(parts)

    def compact(self):
        '''
        compact notation: (4, 1, 1) is written 4.1.1 and the empty one ∅
        '''

        return '.'.join(str(p) for p in self) if self else EMPTY_SYMBOL


Node = namedtuple('Node', ['row', 'col', 'comp'])


class Multipartition(tuple):
    '''
    ordered tuple of `l >= 1` partitions
    '''

    def __new__(cls, components):

        components = [
            c if isinstance(c, Partition) else Partition(c)
            for c in components
        ]

        if not components:
            raise PartitionError(
                'a multipartition needs at least one component'
            )

        return super(Multipartition, cls).__new__(cls, components)

    @classmethod
    def empty(cls, level):
        return cls([Partition()] * level)

    def __repr__(self):
        return 'Multipartition(%r)' % (tuple(tuple(c) for c in self),)

    def __str__(self):
        return self.compact()

    @property
    def level(self):
        return len(self)

    @property
    def rank(self):
        return sum(c.rank for c in self)

    def replace(self, comp, partition):
        '''
        returns a copy with component `comp` replaced
        '''

        components = list(self)
        components[comp] = partition
        return Multipartition(components)

    def add_node(self, node):
        return self.replace(node.comp, self[node.comp].add_cell(node.row))

    def remove_node(self, node):
        return self.replace(node.comp, self[node.comp].remove_cell(node.row))

    def compact(self):
        return '(%s)' % ','.join(c.compact() for c in self)


class Multicharge(namedtuple('Multicharge', ['charges', 'e'])):
    '''
    integer multicharge s together with its modulus e

    the residue class is obtained with `reduced`
    '''

    __slots__ = ()

    def __new__(cls, charges, e=INFINITY):

        charges = tuple(_as_int(x, 'charge') for x in charges)

        if not charges:
            raise PartitionError('a multicharge needs at least one charge')

        return super(Multicharge, cls).__new__(cls, charges, check_modulus(e))

    @property
    def level(self):
        return len(self.charges)

    @property
    def infinite(self):
        return self.e == INFINITY

    def reduced(self):
        '''
        returns the residue class, each charge reduced into 0..e-1
        '''

        charges = [reduce_mod(x, self.e) for x in self.charges]
        return Multicharge(charges, self.e)

    def lift(self):
        '''
        returns the representatives of the charges in 0..e-1
        '''

        return self.reduced().charges

    def negated(self):
        return Multicharge([-x for x in self.charges], self.e)

    def with_charges(self, charges):
        return Multicharge(charges, self.e)


def content(node, s):
    '''
    returns the content b - a + s_c of `node`

    :type node: `Node`
    :type s: `Multicharge`
    '''

    return node.col - node.row + s.charges[node.comp]


def residue(node, s):
    '''
    returns the content of `node` reduced modulo s.e
    '''

    return reduce_mod(content(node, s), s.e)


def boundary_nodes(mp, s, i):
    '''
    returns the addable and removable i-nodes of `mp`, each sorted by
    (component, row)

    :param mp: the multipartition
    :param s: the multicharge
    :param i: the residue
    :type mp: `Multipartition`
    :type s: `Multicharge`
    :type i: `int`
    :rtype: `tuple` of two `list` of `Node`
    '''

    i = reduce_mod(i, s.e)
    addable = list()
    removable = list()

    for (c, p) in enumerate(mp):

        for r in p.addable_rows():
            node = Node(r, p.part(r) + 1, c)
            if residue(node, s) == i:
                addable.append(node)

        for r in p.removable_rows():
            node = Node(r, p.part(r), c)
            if residue(node, s) == i:
                removable.append(node)

    return addable, removable


def boundary_residues(mp, s):
    '''
    returns the sorted residues carried by addable or removable nodes
    '''

    result = set()

    for (c, p) in enumerate(mp):
        result.update(
            residue(Node(r, p.part(r) + 1, c), s) for r in p.addable_rows()
        )
        result.update(
            residue(Node(r, p.part(r), c), s) for r in p.removable_rows()
        )

    return sorted(result)


def is_e_regular(p, e):
    return Partition(p).is_e_regular(e)


def conjugate(p):
    return Partition(p).conjugate()


def partitions_of(n, largest=None):
    '''
    yields every partition of `n` in decreasing lexicographic order

    :param largest: upper bound on the first part
    '''

    largest = n if largest is None else largest

    if n == 0:
        yield Partition()
        return

    for first in range(min(n, largest), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))


def _compositions(n, level):

    if level == 1:
        yield (n,)
        return

    for k in range(n, -1, -1):
        for rest in _compositions(n - k, level - 1):
            yield (k,) + rest


def multipartitions_of(n, level):
    '''
    yields every `level`-partition of rank `n`
    '''

    for sizes in _compositions(n, level):
        for components in product(*[list(partitions_of(k)) for k in sizes]):
            yield Multipartition(components)
