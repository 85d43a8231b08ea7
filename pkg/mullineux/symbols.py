# -*- coding: utf-8 -*-

'''
symbols
-------

symbols of charged bipartitions, the pairing of their rows, and the
crystal isomorphisms Ψ between Uglov multipartitions for multicharges in
one class
'''

###############################################################################


from __future__ import (
    absolute_import,
    division,
    print_function,
    unicode_literals,
)
from collections import namedtuple
from functools import lru_cache

from .affine_weyl import (
    SIGMA,
    TAU,
    WeylWord,
    act,
    is_asymptotic,
    sigma,
    tau,
)
from .core import (
    MullineuxError,
    get_log,
)
from .partitions import (
    Multicharge,
    Multipartition,
    Partition,
)


class MalformedInput(MullineuxError):
    '''
    raised when a row is not strictly increasing
    '''


class MatchExhausted(MullineuxError):
    '''
    raised when the pairing runs out of elements
    '''


class InvalidM(MullineuxError):
    '''
    raised when m leaves a row of the symbol without its zero
    '''


class NotASymbol(MullineuxError):
    '''
    raised when two rows do not come from a bipartition
    '''


class NoStabilization(MullineuxError):
    '''
    raised when the τ-translation images fail to settle within the bound
    '''


# top row: λ^(c) with charge s_c; bottom row: λ^(c-1) with charge s_{c-1};
# charges are stored as (s_{c-1}, s_c)
Symbol = namedtuple('Symbol', ['top', 'bottom', 'm', 'charges'])


def _increasing(row, what):

    row = [int(x) for x in row]

    if any(a >= b for (a, b) in zip(row, row[1:])):
        v = (what, row)
        raise MalformedInput('%s is not strictly increasing: %r' % v)

    return row


def pair_sequences(top, bottom):
    '''
    pairs the rows U (top) and D (bottom) of a symbol

    when U is at least as long as D every y of D, smallest first, takes the
    largest remaining x <= y, or the largest remaining x if there is none;
    the taken x's form D' and U' is the rest of U together with D.  when
    U is shorter every x of U takes the smallest remaining y >= x, or the
    smallest remaining y, and the roles are swapped.

    :type top: `list` of `int`
    :type bottom: `list` of `int`
    :rtype: `tuple` (U', D')
    '''

    top = _increasing(top, 'U')
    bottom = _increasing(bottom, 'D')

    if len(top) >= len(bottom):
        rest, paired = _pair(bottom, top, lambda x, y: x <= y, max)
        result = (sorted(rest + bottom), sorted(paired))
    else:
        rest, paired = _pair(top, bottom, lambda y, x: y >= x, min)
        result = (sorted(paired), sorted(rest + top))

    for (what, row) in zip('UD', result):
        if any(a >= b for (a, b) in zip(row, row[1:])):
            raise MatchExhausted(
                'pairing produced a repeated entry in %s' % what
            )

    return result


def _pair(leaders, pool, eligible, pick):

    pool = list(pool)
    paired = list()

    for a in leaders:

        if not pool:
            raise MatchExhausted('nothing left to pair with %s' % a)

        candidates = [b for b in pool if eligible(b, a)]
        b = pick(candidates) if candidates else pick(pool)
        pool.remove(b)
        paired.append(b)

    return pool, paired


def minimal_m(bp, charges):
    '''
    returns the least valid m for the bipartition `bp` and `charges`
    '''

    (lower, upper) = bp
    (s_lower, s_upper) = charges

    return max(
        len(lower) - s_lower,
        len(upper) - s_upper,
        -s_lower,
        -s_upper,
        0,
    ) + 1


def _beta_row(p, s, m):
    return [p.part(i) - i + s + m for i in range(m + s, 0, -1)]


def symbol_of(bp, charges, m=None):
    '''
    returns the symbol of the charged bipartition (λ^(c-1), λ^(c))

    :param bp: the bipartition (λ^(c-1), λ^(c))
    :param charges: the charges (s_{c-1}, s_c)
    :param m: the shift m (default=least valid m)
    :type bp: `tuple` of `Partition`
    :type charges: `tuple` of `int`
    :type m: `int`
    :raises InvalidM: if `m` is below the least valid m
    '''

    lower, upper = Partition(bp[0]), Partition(bp[1])
    s_lower, s_upper = (int(x) for x in charges)
    least = minimal_m((lower, upper), (s_lower, s_upper))

    if m is None:
        m = least

    elif m < least:
        raise InvalidM('m=%s is below the least valid m=%s' % (m, least))

    return Symbol(
        top=_beta_row(upper, s_upper, m),
        bottom=_beta_row(lower, s_lower, m),
        m=m,
        charges=(s_lower, s_upper),
    )


def _row_partition(row, s, m, what):

    if len(row) != m + s:
        v = (what, len(row), m + s)
        raise NotASymbol('%s has length %s, expected %s' % v)

    parts = [beta + i - s - m for (i, beta) in enumerate(reversed(row), 1)]

    increasing = any(a < b for (a, b) in zip(parts, parts[1:]))

    if increasing or any(x < 0 for x in parts):
        raise NotASymbol('%s %r is not a row of β-numbers' % (what, row))

    return Partition(parts)


def bipartition_of(symbol):
    '''
    returns the bipartition (λ^(c-1), λ^(c)) encoded by `symbol`
    '''

    s_lower, s_upper = symbol.charges

    return (
        _row_partition(symbol.bottom, s_lower, symbol.m, 'D'),
        _row_partition(symbol.top, s_upper, symbol.m, 'U'),
    )


@lru_cache(maxsize=1 << 16)
def _psi_sigma(mp, charges, c, m):

    symbol = symbol_of((mp[c - 1], mp[c]), (charges[c - 1], charges[c]), m)
    top, bottom = pair_sequences(symbol.top, symbol.bottom)
    lower, upper = bipartition_of(symbol._replace(top=top, bottom=bottom))

    return mp.replace(c - 1, upper).replace(c, lower)


def psi_sigma(mp, s, c, m=None):
    '''
    returns Ψ^{s -> σ_c(s)}(mp)

    the components λ^(c-1) and λ^(c) are paired through their symbol; the
    new top row becomes component c-1 and the new bottom row component c

    :type mp: `Multipartition`
    :type s: `Multicharge`
    :type c: `int`
    :param m: the symbol shift (default=least valid m)
    '''

    mp = Multipartition(mp)
    WeylWord([sigma(c)]).check(mp.level)

    return _psi_sigma(mp, tuple(s.charges), c, m)


def psi_tau(mp):
    '''
    returns Ψ^{s -> τ(s)}(mp), the components rotated one step left
    '''

    mp = Multipartition(mp)
    return Multipartition(mp[1:] + mp[:1])


def psi_tau_inv(mp):

    mp = Multipartition(mp)
    return Multipartition(mp[-1:] + mp[:-1])


def psi_word(mp, s, word):
    '''
    returns Ψ^{s -> w.s}(mp) and w.s, composing the isomorphisms of the
    letters of `word` from right to left

    :type mp: `Multipartition`
    :type s: `Multicharge`
    :type word: `WeylWord`
    :rtype: `tuple` of `Multipartition` and `Multicharge`
    '''

    mp = Multipartition(mp)
    word = WeylWord(word).check(mp.level)

    for g in reversed(word):

        if g.kind == SIGMA:
            mp = psi_sigma(mp, s, g.index)
        elif g.kind == TAU:
            mp = psi_tau(mp)
        else:
            mp = psi_tau_inv(mp)

        s = act(WeylWord([g]), s)

    return mp, s


def stabilization_bound(s, n):
    '''
    returns the least k >= 0 with s_1 - s_0 + k e > n - 1
    '''

    return max(0, (n - 1 - (s.charges[1] - s.charges[0])) // s.e + 1)


def psi_tau_stabilized(mp, s, n, log=None):
    '''
    iterates κ = τ σ_1, which adds e to the second charge of a
    bipartition, until the charge is asymptotic for `n`; past that point
    the images no longer move

    the count k is the first index after which the image stays constant,
    so k <= `stabilization_bound` (s, n)

    :type mp: `Multipartition`
    :type s: `Multicharge` of level 2
    :type n: `int`
    :rtype: `tuple` of the settled `Multipartition` and the count k
    :raises NoStabilization: if the image still moves once the charge is
        asymptotic
    '''

    log = get_log(log)

    if not isinstance(s, Multicharge) or s.level != 2:
        raise MullineuxError('stabilization needs a level 2 multicharge')

    kappa = WeylWord([tau(), sigma(1)])
    bound = stabilization_bound(s, n)
    current, charge = Multipartition(mp), s
    settled = 0

    for k in range(bound):

        image, charge = psi_word(current, charge, kappa)

        if image != current:
            settled = k + 1

        current = image

    following, _ = psi_word(current, charge, kappa)

    if not is_asymptotic(charge, n) or following != current:
        v = (Multipartition(mp).compact(), s.charges, bound)
        raise NoStabilization(
            '%s with charges %s did not settle within %s' % v
        )

    log.debug('%s settled after %s of %s steps' % (current, settled, bound))

    return current, settled
