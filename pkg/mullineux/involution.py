# -*- coding: utf-8 -*-

'''
involution
----------

the generalized Mullineux involution m_l on Kleshchev multipartitions:
the combinatorial pipeline, the crystal path oracle it is checked against,
the e = ∞ specialization and exhaustive verification sweeps
'''

###############################################################################


from __future__ import (
    absolute_import,
    division,
    print_function,
    unicode_literals,
)
from collections import namedtuple
from itertools import product
import time

from pandas import DataFrame

from .affine_weyl import (
    asymptotic_lift,
    eta_exponents,
    eta_word,
    format_eta,
    is_asymptotic,
    minimal_eta_exponents,
    w0_word,
)
from .core import (
    InternalError,
    MullineuxError,
    get_log,
)
from .crystal import (
    KLESHCHEV,
    NodeOrder,
    NotInCrystal,
    enumerate_crystal,
    follow_path,
    highest_weight_path,
    is_vertex,
)
from .formats import dumps
from .partitions import (
    INFINITY,
    Multicharge,
    Multipartition,
    PartitionError,
    check_modulus,
)
from .rank1 import m1
from .symbols import psi_word


class NotKleshchev(MullineuxError):
    '''
    raised when a multipartition is not Kleshchev for the given class
    '''


class NotRegularComponent(MullineuxError):
    '''
    raised when a component of the input is not e-regular
    '''


TraceStage = namedtuple('TraceStage', ['name', 'charge', 'mp'])


class MullineuxResult(namedtuple('MullineuxResult', [
        'image', 'source_class', 'target_class', 'trace', 'eta', 'p'])):
    '''
    image of m_l with the pipeline stages that produced it

    two results are equal when image and classes agree; the trace and the
    η exponents are ignored
    '''

    __slots__ = ()

    def _key(self):
        return (self.image, self.source_class, self.target_class)

    def __eq__(self, other):
        if not isinstance(other, MullineuxResult):
            return NotImplemented
        return self._key() == other._key()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._key())

    def to_dict(self):
        '''
        returns a JSON-ready view, the trace included
        '''

        return {
            'image': self.image,
            'source_class': self.source_class,
            'target_class': self.target_class,
            'eta': format_eta(self.eta),
            'trace': [
                {'stage': t.name, 'charge': t.charge, 'mp': t.mp}
                for t in self.trace
            ],
        }


def target_class(residues, e=None):
    '''
    returns 𝔰̃ with 𝔰̃_i = -𝔰_{l-1-i} mod e

    :type residues: `Multicharge`, or a sequence together with `e`
    '''

    if not isinstance(residues, Multicharge):
        residues = Multicharge(residues, e)

    return Multicharge(
        [-x for x in reversed(residues.charges)], residues.e
    ).reduced()


def _prepare(mp, residues, e):

    e = check_modulus(e)
    mp = Multipartition(mp)

    if isinstance(residues, Multicharge):
        residues = residues.charges

    source = Multicharge(residues, e).reduced()

    if source.level != mp.level:
        v = (mp.compact(), source.level)
        raise PartitionError('%s does not have level %s' % v)

    return mp, source


def _check_kleshchev(mp, source):

    for (k, p) in enumerate(mp):
        if not p.is_e_regular(source.e):
            v = (k, p.compact(), source.e)
            raise NotRegularComponent(
                'component %s (%s) is not %s-regular' % v
            )

    if not is_vertex(mp, NodeOrder(KLESHCHEV, source)):
        v = (mp.compact(), source.charges, source.e)
        raise NotKleshchev('%s is not Kleshchev for %s, e=%s' % v)


def mullineux(mp, residues, e, n=None, stabilize=False, log=None):
    '''
    computes m_l(mp) for the Kleshchev multipartition `mp`

    stages: ν applies m_1 componentwise, -s lifts -𝔰 to an asymptotic
    multicharge, and the image is Ψ^{-s -> η(-s)}(ν)

    :param mp: the input multipartition
    :param residues: the class 𝔰, one residue per component
    :param e: the modulus (finite)
    :param n: rank bound for the asymptotic lift (default=rank of `mp`)
    :param stabilize: use the least α exponents that keep η(-s) asymptotic
    :param log: mullineux log
    :type mp: `Multipartition`
    :type residues: `Multicharge` or `tuple` of `int`
    :type e: `int`
    :type n: `int`
    :type stabilize: `bool`
    :type log: `logbook.Logger`
    :rtype: `MullineuxResult`
    :raises NotRegularComponent: if a component is not e-regular
    :raises NotKleshchev: if `mp` is not in the crystal of 𝔰
    '''

    log = get_log(log)
    mp, source = _prepare(mp, residues, e)
    e = source.e

    if source.infinite:
        raise MullineuxError('e = ∞ is handled by mullineux_infinity')

    n = mp.rank if n is None else n

    if n < mp.rank:
        raise MullineuxError('n=%s is below the rank %s' % (n, mp.rank))

    _check_kleshchev(mp, source)

    nu = Multipartition([m1(p, e) for p in mp])
    lifted, p = asymptotic_lift(source, n, e, negate=True)

    if stabilize:
        exponents = minimal_eta_exponents(lifted, n)
    else:
        exponents = eta_exponents(p)

    word = eta_word(p, mp.level, exponents=exponents, log=log)
    image, final = psi_word(nu, lifted, word)
    target = target_class(source)

    if not is_asymptotic(lifted, n) or not is_asymptotic(final, n):
        v = (lifted.charges, final.charges, n)
        raise InternalError(
            'lift %s or η image %s not asymptotic for n=%s' % v
        )

    if final.reduced() != target:
        v = (final.charges, target.charges)
        raise InternalError('η image %s is not in the class %s' % v)

    log.debug('%s -> %s via %s' % (mp, image, format_eta(exponents)))

    trace = [
        TraceStage('input', source, mp),
        TraceStage('m1', source.negated().reduced(), nu),
        TraceStage('lift', lifted, nu),
        TraceStage('psi', final, image),
    ]

    return MullineuxResult(image, source, target, trace, exponents, p)


def mullineux_oracle(mp, residues, e):
    '''
    computes m_l(mp) by replaying the negated crystal path of `mp` in the
    Kleshchev crystal of 𝔰̃

    :raises NotKleshchev: if `mp` is not in the crystal of 𝔰
    '''

    mp, source = _prepare(mp, residues, e)

    try:
        path = highest_weight_path(mp, NodeOrder(KLESHCHEV, source))
    except NotInCrystal as err:
        raise NotKleshchev(str(err))

    order = NodeOrder(KLESHCHEV, target_class(source))

    return follow_path([(-i) % source.e for i in path], order)


def mullineux_infinity(mp, charges, log=None):
    '''
    computes m_l for e = ∞: conjugate every component, then move the result
    from -s to w_0(-s) with Ψ

    :type mp: `Multipartition`
    :type charges: `Multicharge` with e = ∞, or `tuple` of `int`
    :raises NotInCrystal: if `mp` is not in the e = ∞ crystal of s
    '''

    log = get_log(log)
    mp = Multipartition(mp)

    s = charges if isinstance(charges, Multicharge) else Multicharge(charges)

    if not s.infinite:
        raise MullineuxError('mullineux_infinity needs e = ∞, got %s' % s.e)

    if not is_vertex(mp, NodeOrder.uglov(s.charges)):
        raise NotInCrystal('%s is not in the crystal of %s' % (mp, s.charges))

    mu = Multipartition([p.conjugate() for p in mp])
    image, final = psi_word(mu, s.negated(), w0_word(mp.level))

    log.debug('%s -> %s with charges %s' % (mp, image, final.charges))

    return image


class SweepReport(namedtuple('SweepReport', [
        'level', 'e', 'n_max', 'table', 'mismatches'])):
    '''
    outcome of `verify_sweep`: one table row per class and the list of
    failed checks
    '''

    __slots__ = ()

    @property
    def ok(self):
        return not self.mismatches

    def to_json(self):

        return dumps({
            'level': self.level,
            'e': self.e,
            'n_max': self.n_max,
            'classes': self.table.to_dict('records'),
            'mismatches': self.mismatches,
        })


def _layer_sets(order, n_max, log):
    graph = enumerate_crystal(order, n_max, with_edges=False, log=log)
    return [set(layer) for layer in graph.layers]


def _mismatch(source, mp, check, expected, found):

    return {
        'charges': source.charges,
        'mp': mp,
        'check': check,
        'expected': expected,
        'found': found,
    }


def _sweep_class(source, n_max, log):

    e = source.e
    negated = _layer_sets(NodeOrder(KLESHCHEV, source.negated()), n_max, log)
    target = NodeOrder(KLESHCHEV, target_class(source))
    targets = _layer_sets(target, n_max, log)
    graph = enumerate_crystal(
        NodeOrder(KLESHCHEV, source), n_max, with_edges=False, log=log
    )

    mismatches = list()
    failures = 0

    for mp in graph.vertices():

        try:
            result = mullineux(mp, source, e, log=log)
            oracle = mullineux_oracle(mp, source, e)
            back = mullineux(result.image, result.target_class, e, log=log)
        except MullineuxError as err:
            v = '%s: %s' % (type(err).__name__, err)
            mismatches.append(_mismatch(source, mp, 'error', None, v))
            continue

        nu = result.trace[1].mp
        image = result.image

        if image != oracle:
            mismatches.append(_mismatch(source, mp, 'oracle', oracle, image))

        if nu not in negated[mp.rank]:
            mismatches.append(_mismatch(source, mp, 'nu', None, nu))

        if image not in targets[mp.rank]:
            mismatches.append(_mismatch(source, mp, 'image', None, image))

        if mp.level == 1 and image[0] != m1(mp[0], e):
            expected = m1(mp[0], e)
            mismatches.append(_mismatch(source, mp, 'm1', expected, image))

        if back.image != mp:
            failures += 1
            found = back.image
            mismatches.append(_mismatch(source, mp, 'involution', mp, found))

    return len(graph), mismatches, failures


def verify_sweep(level, e, n_max, log=None):
    '''
    compares the pipeline with the crystal path oracle on every Kleshchev
    multipartition of rank <= `n_max`, for every class in {0..e-1}^level

    the image is also checked for membership in the crystal of 𝔰̃, ν for
    membership in the crystal of -𝔰, and m_l for being an involution

    :param level: the level
    :param e: the modulus
    :param n_max: the largest rank
    :param log: mullineux log
    :rtype: `SweepReport`
    '''

    log = get_log(log)
    e = check_modulus(e)

    if e == INFINITY:
        raise MullineuxError('sweeps need a finite modulus')

    rows = list()
    mismatches = list()

    for residues in product(range(e), repeat=level):

        start = time.time()
        source = Multicharge(residues, e)
        count, found, failures = _sweep_class(source, n_max, log)
        seconds = time.time() - start

        v = (residues, count, len(found), seconds)
        log.info('class %s: %s vertices, %s mismatches in %.2fs' % v)

        rows.append({
            'charges': list(residues),
            'vertices': count,
            'mismatches': len(found),
            'involution_failures': failures,
            'seconds': round(seconds, 3),
        })
        mismatches.extend(found)

    table = DataFrame(rows, columns=[
        'charges',
        'vertices',
        'mismatches',
        'involution_failures',
        'seconds',
    ])

    return SweepReport(level, e, n_max, table, mismatches)


def compare_infinity(level, n_max, charges=None, log=None):
    '''
    compares `mullineux` at e = n_max + 1 with `mullineux_infinity` on the
    multipartitions both crystals share

    disagreements are recorded in the `agree` column and never raised

    :param level: the level
    :param n_max: the largest rank
    :param charges: integer multicharges to try (default={0..n_max}^level)
    :param log: mullineux log
    :rtype: `pandas.DataFrame`
    '''

    log = get_log(log)
    e = n_max + 1
    charges = product(range(e), repeat=level) if charges is None else charges
    rows = list()

    for s in charges:

        s = tuple(s)
        order = NodeOrder(KLESHCHEV, Multicharge(s, e))
        finite = _layer_sets(order, n_max, log)
        infinite = enumerate_crystal(
            NodeOrder.uglov(s), n_max, with_edges=False, log=log
        )

        for mp in infinite.vertices():

            if mp not in finite[mp.rank]:
                continue

            a = mullineux(mp, s, e, log=log).image
            b = mullineux_infinity(mp, s, log=log)

            rows.append({
                'charges': list(s),
                'mp': mp.compact(),
                'finite': a.compact(),
                'infinite': b.compact(),
                'agree': a == b,
            })

        log.info('compared charges %s' % (s,))

    columns = ['charges', 'mp', 'finite', 'infinite', 'agree']
    return DataFrame(rows, columns=columns)
