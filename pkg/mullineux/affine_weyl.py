# -*- coding: utf-8 -*-

'''
affine_weyl
-----------

words in the generators of the extended affine symmetric group and their
left action on integer multicharges

a word acts right to left: in `WeylWord([tau(), sigma(1)])` the
transposition is applied first
'''

###############################################################################


from __future__ import (
    absolute_import,
    division,
    print_function,
    unicode_literals,
)
from collections import namedtuple

import numpy as np

from .core import (
    MullineuxError,
    get_log,
)
from .partitions import (
    Multicharge,
    check_modulus,
    reduce_mod,
)


SIGMA = 's'
TAU = 't'
TAU_INV = 't-'


class IndexOutOfRange(MullineuxError):
    '''
    raised when a generator index does not fit the level
    '''


Generator = namedtuple('Generator', ['kind', 'index'])


def sigma(c):
    return Generator(SIGMA, c)


def tau():
    return Generator(TAU, 0)


def tau_inv():
    return Generator(TAU_INV, 0)


_INVERSE = {TAU: TAU_INV, TAU_INV: TAU, SIGMA: SIGMA}


class WeylWord(tuple):
    '''
    unreduced word in the generators σ_c, τ and τ^{-1}
    '''

    def __new__(cls, letters=()):

        letters = tuple(letters)

        for g in letters:
            if not isinstance(g, Generator) or g.kind not in _INVERSE:
                raise MullineuxError('not a generator: %r' % (g,))

        return super(WeylWord, cls).__new__(cls, letters)

    def __add__(self, other):
        return WeylWord(tuple(self) + tuple(other))

    __mul__ = __add__

    def __pow__(self, k):

        if k < 0:
            return self.inverse() ** -k

        return WeylWord(tuple(self) * k)

    def __repr__(self):
        return 'WeylWord(%r)' % str(self)

    def __str__(self):
        return ' '.join(
            '%s%s' % (g.kind, g.index) if g.kind == SIGMA else g.kind
            for g in self
        )

    def inverse(self):
        return WeylWord(
            Generator(_INVERSE[g.kind], g.index) for g in reversed(self)
        )

    def check(self, level):
        '''
        raises `IndexOutOfRange` unless every σ_c has 1 <= c <= level - 1
        '''

        for g in self:
            if g.kind == SIGMA and not 1 <= g.index <= level - 1:
                v = (g.index, level)
                raise IndexOutOfRange('σ_%s does not act on level %s' % v)

        return self


def act(word, s):
    '''
    returns the multicharge w.s

    :type word: `WeylWord`
    :type s: `Multicharge`
    :rtype: `Multicharge`
    '''

    word = WeylWord(word).check(s.level)
    v = np.array(s.charges, dtype=np.int64)

    for g in reversed(word):

        if g.kind == SIGMA:
            c = g.index
            v[[c - 1, c]] = v[[c, c - 1]]
            continue

        if s.infinite:
            raise MullineuxError('τ needs a finite modulus')

        if g.kind == TAU:
            v = np.roll(v, -1)
            v[-1] += s.e
        else:
            v[-1] -= s.e
            v = np.roll(v, 1)

    return s.with_charges(int(x) for x in v)


def _check_p(p, level):

    if not 1 <= p <= level - 1:
        raise IndexOutOfRange('p must lie in 1..%s, got %s' % (level - 1, p))


def w_word(c, d):
    '''
    returns w_(c,d) = σ_c σ_{c-1} ... σ_d
    '''

    return WeylWord(sigma(k) for k in range(c, d - 1, -1))


def xi_word(level):
    '''
    returns ξ = σ_{l-1} ... σ_1, acting as (v_1, ..., v_{l-1}, v_0)
    '''

    return w_word(level - 1, 1)


def translation_word(c, level):
    '''
    returns z_c = ξ^{l-c} τ^c, which adds e to the first c entries
    '''

    return xi_word(level) ** (level - c) * WeylWord([tau()]) ** c


def gamma_word(p, level, log=None):
    '''
    returns γ_p = w_(l-p,1) w_(l-p+1,2) ... w_(l-1,p), acting on v as
    (v_p, ..., v_{l-1}, v_0, ..., v_{p-1})

    if the product formula ever fails to realize this rotation the
    rotation ξ^p is returned instead and the discrepancy is logged
    '''

    log = get_log(log)
    _check_p(p, level)

    word = WeylWord()
    for j in range(p):
        word = word * w_word(level - p + j, 1 + j)

    sample = list(range(level))
    expected = tuple(sample[p:] + sample[:p])

    if act(word, Multicharge(sample)).charges != expected:
        v = (p, word, level)
        log.warning('γ_%s word %s does not rotate level %s' % v)
        word = xi_word(level) ** p

    return word


def alpha_word(p, level, log=None):
    '''
    returns α_p = τ^{l-p} γ_p, which adds e to the entries p, ..., l-1
    '''

    _check_p(p, level)
    return WeylWord([tau()]) ** (level - p) * gamma_word(p, level, log=log)


def w0_word(level):
    '''
    returns the longest element w_(1,1) w_(2,1) ... w_(l-1,1), which
    reverses a tuple
    '''

    word = WeylWord()
    for c in range(1, level):
        word = word * w_word(c, 1)

    return word


def eta_exponents(p):
    '''
    returns the exponents of α_1, ..., α_{l-1} in η; α_k is raised to
    2(p_{l-k} + 1)

    :param p: the shifts p_1, ..., p_{l-1} of `asymptotic_lift`
    :type p: `tuple` of `int`
    '''

    p = tuple(p)
    level = len(p) + 1

    return tuple(2 * (p[level - k - 1] + 1) for k in range(1, level))


def minimal_eta_exponents(lifted, n):
    '''
    returns the least exponents x_1, ..., x_{l-1} for which
    α_1^{x_1} ... α_{l-1}^{x_{l-1}} w_0 sends `lifted` to a multicharge
    that is asymptotic for `n`
    '''

    v = act(w0_word(lifted.level), lifted).charges

    return tuple(
        max(0, (n - 1 - (v[k] - v[k - 1])) // lifted.e + 1)
        for k in range(1, lifted.level)
    )


def eta_word(p, level, exponents=None, log=None):
    '''
    returns η = α_1^{2(p_{l-1}+1)} ... α_{l-1}^{2(p_1+1)} w_0

    :param p: the shifts p_1, ..., p_{l-1}
    :param level: the level l
    :param exponents: explicit exponents of α_1, ..., α_{l-1}
    :type p: `tuple` of `int`
    :type level: `int`
    :type exponents: `tuple` of `int` (default=`eta_exponents(p)`)
    '''

    if exponents is None:
        if len(p) != level - 1:
            v = (level - 1, p)
            raise IndexOutOfRange('η needs %s shifts, got %r' % v)
        if any(x < 0 for x in p):
            raise MullineuxError('shifts must be non-negative: %r' % (p,))
        exponents = eta_exponents(p)

    word = WeylWord()
    for (k, x) in enumerate(exponents, 1):
        word = word * alpha_word(k, level, log=log) ** x

    return word * w0_word(level)


def format_eta(exponents):
    '''
    renders η as a word string, e.g. "a1^8 a2^8 w0"
    '''

    tokens = ['a%s^%s' % (k, x) for (k, x) in enumerate(exponents, 1) if x]
    return ' '.join(tokens + ['w0'])


def asymptotic_lift(residues, n, e, negate=True):
    '''
    lifts a residue class to a multicharge that is asymptotic for `n`

    the entries t of -𝔰 (or of 𝔰 when `negate` is False), taken with
    representatives in 0..e-1, are shifted cumulatively: entry c gains
    (p_1 + ... + p_c) e where p_c is the least non-negative integer with
    t_c - t_{c-1} + p_c e > n - 1

    :rtype: `tuple` of the lifted `Multicharge` and the shifts p
    '''

    e = check_modulus(e)

    if isinstance(residues, Multicharge):
        residues = residues.charges

    lift = [reduce_mod(x, e) for x in residues]
    t = [-x for x in lift] if negate else lift

    p = list()
    charges = [t[0]]
    shift = 0

    for c in range(1, len(t)):
        pc = max(0, (n - 1 - (t[c] - t[c - 1])) // e + 1)
        p.append(pc)
        shift += pc * e
        charges.append(t[c] + shift)

    return Multicharge(charges, e), tuple(p)


def is_asymptotic(s, n):
    '''
    true iff s_{i+1} - s_i > n - 1 for every i
    '''

    charges = s.charges if isinstance(s, Multicharge) else tuple(s)
    return all(b - a > n - 1 for (a, b) in zip(charges, charges[1:]))
