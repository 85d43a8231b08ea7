# -*- coding: utf-8 -*-

'''
rank1
-----

the Mullineux map on e-regular partitions, computed through the level-one
crystal and, independently, through Mullineux symbols
'''

###############################################################################


from __future__ import (
    absolute_import,
    division,
    print_function,
    unicode_literals,
)
from functools import lru_cache

from .core import (
    InternalError,
    MullineuxError,
)
from .crystal import (
    NodeOrder,
    follow_path,
    highest_weight_path,
)
from .partitions import (
    INFINITY,
    Multipartition,
    Partition,
    check_modulus,
    partitions_of,
)


class NotRegular(MullineuxError):
    '''
    raised when a partition is not e-regular
    '''


def _regular(p, e):

    p = Partition(p)
    e = check_modulus(e)

    if not p.is_e_regular(e):
        raise NotRegular('%s is not %s-regular' % (p.compact(), e))

    return p, e


@lru_cache(maxsize=1 << 16)
def _m1(p, e):

    order = NodeOrder.uglov((0,), e)
    path = highest_weight_path(Multipartition((p,)), order)

    return follow_path([(-i) % e for i in path], order)[0]


def m1(p, e):
    '''
    returns the Mullineux image of the e-regular partition `p`

    the crystal path of `p` is replayed with every residue negated; for
    e = ∞ this is conjugation

    :type p: `Partition`
    :type e: `int` or `INFINITY`
    :raises NotRegular: if `p` is not e-regular
    '''

    p, e = _regular(p, e)

    if e == INFINITY:
        return m1_infinity(p)

    return _m1(p, e)


def m1_infinity(p):
    return Partition(p).conjugate()


def _rim_cells_per_row(parts, e):
    '''
    counts the cells of the e-rim of `parts` in each row

    the rim is cut into segments of e cells read from the top right; each
    new segment starts at the end of the row below the last one
    '''

    rows = len(parts)
    removed = [0] * rows
    row = 0

    while row < rows:

        r = row
        col = parts[r]
        left = e

        while True:

            removed[r] += 1
            left -= 1

            if left == 0:
                break

            below = parts[r + 1] if r + 1 < rows else 0

            if col > max(below, 1):
                col -= 1
            elif below > 0:
                r += 1
            else:
                break

        row = r + 1

    return removed


def mullineux_symbol(p, e):
    '''
    returns the Mullineux symbol of `p` as a tuple of (e-rim size, number
    of rows) pairs, one per stripped rim
    '''

    parts = list(Partition(p))
    result = list()

    while parts:
        removed = _rim_cells_per_row(parts, e)
        result.append((sum(removed), len(parts)))
        parts = [a - b for (a, b) in zip(parts, removed) if a > b]

    return tuple(result)


@lru_cache(maxsize=64)
def _symbol_table(n, e):

    return {
        mullineux_symbol(p, e): p
        for p in partitions_of(n)
        if p.is_e_regular(e)
    }


def m1_rim(p, e):
    '''
    returns the Mullineux image of `p` by rim stripping

    every column (a, r) of the symbol becomes (a, a - r + 1), or
    (a, a - r) when e divides a; the partition with that symbol is looked
    up among the e-regular partitions of the same rank
    '''

    p, e = _regular(p, e)

    if e == INFINITY:
        return m1_infinity(p)

    image = tuple(
        (a, a - r + (0 if a % e == 0 else 1))
        for (a, r) in mullineux_symbol(p, e)
    )

    try:
        return _symbol_table(p.rank, e)[image]
    except KeyError:
        v = (image, p.compact(), e)
        raise InternalError('no partition has symbol %s (from %s, e=%s)' % v)
