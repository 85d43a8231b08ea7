# -*- coding: utf-8 -*-

'''
crystal
-------

crystal operators on multipartitions for the Uglov and Kleshchev orders,
layered enumeration of the highest weight component of the empty
multipartition, canonical paths and path replay
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
import json

from .core import (
    MullineuxError,
    get_log,
)
from .formats import (
    dumps,
    encode,
)
from .partitions import (
    INFINITY,
    Multicharge,
    Multipartition,
    PartitionError,
    boundary_nodes,
    boundary_residues,
    content,
)


UGLOV = 'uglov'
KLESHCHEV = 'kleshchev'

ADDABLE = 'A'
REMOVABLE = 'R'

# defaults for enumerate_crystal
_ENUMERATION = {
    'layer_cap': 5000000,
}

_CACHE_SIZE = 1 << 18


class NotInCrystal(MullineuxError):
    '''
    raised when a multipartition does not lie in the component of ∅
    '''


class DeadEnd(MullineuxError):
    '''
    raised by `follow_path` when a step has no good node
    '''

    def __init__(self, value, step):
        super(DeadEnd, self).__init__(value)
        self.step = step


class ResourceLimitError(MullineuxError):
    '''
    raised when an enumeration layer outgrows the configured cap
    '''


class NodeOrder(namedtuple('NodeOrder', ['kind', 'charge'])):
    '''
    total order on the i-nodes of a multipartition

    `UGLOV` compares contents for the integer multicharge, the larger
    component being smaller on ties.  `KLESHCHEV` compares components
    first and contents second, using the lift of the class into 0..e-1.
    '''

    __slots__ = ()

    def __new__(cls, kind, charge):

        if kind not in (UGLOV, KLESHCHEV):
            raise MullineuxError('unknown order %r' % (kind,))

        if not isinstance(charge, Multicharge):
            v = (charge,)
            raise PartitionError('order needs a Multicharge, got %r' % v)

        if kind == KLESHCHEV:
            charge = charge.reduced()

        return super(NodeOrder, cls).__new__(cls, kind, charge)

    @classmethod
    def uglov(cls, charges, e=INFINITY):
        return cls(UGLOV, Multicharge(charges, e))

    @classmethod
    def kleshchev(cls, residues, e):
        return cls(KLESHCHEV, Multicharge(residues, e))

    @property
    def level(self):
        return self.charge.level

    @property
    def e(self):
        return self.charge.e

    def key(self, node):

        c = content(node, self.charge)

        if self.kind == UGLOV:
            return (c, -node.comp)

        return (node.comp, c)

    def residues(self, mp):
        '''
        residues worth trying on `mp`: all of 0..e-1, or for e = ∞ the
        contents present on its boundary
        '''

        if self.charge.infinite:
            return boundary_residues(mp, self.charge)

        return range(self.e)

    def empty(self):
        return Multipartition.empty(self.level)


Letter = namedtuple('Letter', ['sign', 'node'])


class SignatureWord(tuple):
    '''
    sequence of `Letter` objects in increasing node order
    '''

    def __str__(self):
        return ''.join(letter.sign for letter in self)

    def reduce(self):
        '''
        deletes RA factors until the word reads A^p R^q
        '''

        stack = list()

        for letter in self:
            cancels = stack and stack[-1].sign == REMOVABLE
            if letter.sign == ADDABLE and cancels:
                stack.pop()
            else:
                stack.append(letter)

        return SignatureWord(stack)

    def addable(self):
        return [letter.node for letter in self if letter.sign == ADDABLE]

    def removable(self):
        return [letter.node for letter in self if letter.sign == REMOVABLE]


def _check_level(mp, order):

    mp = mp if isinstance(mp, Multipartition) else Multipartition(mp)

    if mp.level != order.level:
        v = (mp.compact(), order.level)
        raise PartitionError('%s does not have level %s' % v)

    return mp


def signature_word(mp, i, order):
    '''
    returns the addable and removable i-nodes of `mp` as a word sorted by
    `order`

    :type mp: `Multipartition`
    :type i: `int`
    :type order: `NodeOrder`
    :rtype: `SignatureWord`
    '''

    mp = _check_level(mp, order)
    addable, removable = boundary_nodes(mp, order.charge, i)

    letters = [Letter(ADDABLE, n) for n in addable]
    letters += [Letter(REMOVABLE, n) for n in removable]

    letters.sort(key=lambda letter: order.key(letter.node))

    return SignatureWord(letters)


def reduce_word(word):
    return SignatureWord(word).reduce()


def good_addable(mp, i, order):
    '''
    returns the good addable i-node of `mp`, the rightmost A of the reduced
    word, or None
    '''

    nodes = signature_word(mp, i, order).reduce().addable()
    return nodes[-1] if nodes else None


def good_removable(mp, i, order):
    '''
    returns the good removable i-node of `mp`, the leftmost R of the reduced
    word, or None
    '''

    nodes = signature_word(mp, i, order).reduce().removable()
    return nodes[0] if nodes else None


@lru_cache(maxsize=_CACHE_SIZE)
def _f_op(mp, i, order):
    node = good_addable(mp, i, order)
    return None if node is None else mp.add_node(node)


@lru_cache(maxsize=_CACHE_SIZE)
def _e_op(mp, i, order):
    node = good_removable(mp, i, order)
    return None if node is None else mp.remove_node(node)


def f_op(mp, i, order):
    '''
    adds the good i-node to `mp`; returns None when there is none

    `mp` may be any nested sequence of parts
    '''

    return _f_op(Multipartition(mp), i, order)


def e_op(mp, i, order):
    '''
    removes the good removable i-node from `mp`; returns None when there is
    none
    '''

    return _e_op(Multipartition(mp), i, order)


class CrystalGraph(object):
    '''
    rank layers of the crystal component of ∅ with optional residue-labelled
    edges
    '''

    def __init__(self, order, layers, edges=None):
        '''
        :param order: the node order the crystal was built with
        :param layers: vertices per rank, in discovery order
        :param edges: (source, residue, target) triples or None
        :type order: `NodeOrder`
        :type layers: `list` of `list` of `Multipartition`
        :type edges: `list` of `tuple`
        '''

        self.order = order
        self.layers = layers
        self.edges = edges

    def __len__(self):
        return sum(len(layer) for layer in self.layers)

    def __contains__(self, mp):
        mp = Multipartition(mp)
        return mp.rank <= self.n_max and mp in set(self.layers[mp.rank])

    def __repr__(self):
        order = self.order
        v = (order.kind, order.charge.charges, order.e, self.n_max)
        return 'CrystalGraph(%s, %r, e=%s, n_max=%s)' % v

    @property
    def n_max(self):
        return len(self.layers) - 1

    def layer(self, n):
        return self.layers[n]

    def vertices(self):
        return [mp for layer in self.layers for mp in layer]

    def edge_map(self):
        '''
        returns a `dict` mapping (source, residue) to target
        '''

        if self.edges is None:
            raise MullineuxError('crystal was enumerated without edges')

        return {(src, i): dst for (src, i, dst) in self.edges}

    def to_json(self):
        '''
        returns {"layers": [[mp, ...], ...], "edges": [[src, i, dst], ...]}
        with edge endpoints given as indices into the flattened layers
        '''

        index = {mp: k for (k, mp) in enumerate(self.vertices())}
        layers = [[encode(mp) for mp in layer] for layer in self.layers]
        result = {'layers': layers}

        if self.edges is not None:
            result['edges'] = [
                [index[src], encode(i), index[dst]]
                for (src, i, dst) in self.edges
            ]

        return dumps(result)

    def to_dot(self, name='crystal'):
        '''
        returns the graph in graphviz dot format, one rank per layer
        '''

        index = {mp: k for (k, mp) in enumerate(self.vertices())}
        lines = ['digraph %s {' % name]

        for layer in self.layers:
            lines.append('\t{')
            lines.append('\t\trank = same;')
            for mp in layer:
                v = (index[mp], mp.compact())
                lines.append('\t\t"%d" [label="%s"];' % v)
            lines.append('\t}')

        for (src, i, dst) in self.edges or []:
            v = (index[src], index[dst], i)
            lines.append('\t"%d" -> "%d" [label="%s"];' % v)

        lines.append('}')

        return '\n'.join(lines) + '\n'

    @classmethod
    def from_json(cls, order, text):
        '''
        rebuilds a graph written by `to_json` for `order`
        '''

        data = json.loads(text)
        layers = [
            [Multipartition(mp) for mp in layer] for layer in data['layers']
        ]
        flat = [mp for layer in layers for mp in layer]
        edges = data.get('edges')

        if edges is not None:
            edges = [(flat[a], i, flat[b]) for (a, i, b) in edges]

        return cls(order, layers, edges)


def enumerate_crystal(order, n_max, with_edges=True, layer_cap=None, log=None):
    '''
    breadth-first closure of ∅ under `f_op`, layered by rank

    :param order: the node order
    :param n_max: the largest rank to reach
    :param with_edges: store the edges as well as the vertices
    :param layer_cap: largest admissible layer size
    :param log: mullineux log
    :type order: `NodeOrder`
    :type n_max: `int`
    :type with_edges: `bool`
    :type layer_cap: `int` (default=`_ENUMERATION['layer_cap']`)
    :type log: `logbook.Logger`
    :rtype: `CrystalGraph`
    '''

    log = get_log(log)
    layer_cap = _ENUMERATION['layer_cap'] if layer_cap is None else layer_cap

    if n_max < 0:
        raise MullineuxError('n_max must be non-negative, got %s' % n_max)

    layers = [[order.empty()]]
    edges = list() if with_edges else None

    for n in range(1, n_max + 1):

        seen = set()
        layer = list()

        for mp in layers[-1]:
            for i in order.residues(mp):

                target = f_op(mp, i, order)

                if target is None:
                    continue

                if with_edges:
                    edges.append((mp, i, target))

                if target in seen:
                    continue

                if len(layer) == layer_cap:
                    v = (n, layer_cap)
                    raise ResourceLimitError(
                        'layer %s exceeds the cap of %s vertices' % v
                    )

                seen.add(target)
                layer.append(target)

        log.debug('%s layer %s: %s vertices' % (order.kind, n, len(layer)))
        layers.append(layer)

    return CrystalGraph(order, layers, edges)


def vertices(order, n):
    '''
    returns the vertices of rank `n`, i.e. the Uglov or Kleshchev
    multipartitions of `n`
    '''

    return enumerate_crystal(order, n, with_edges=False).layer(n)


def highest_weight_path(mp, order):
    '''
    returns residues i_1, ..., i_n with f_{i_n} ... f_{i_1} ∅ = mp

    the path is found by removing good nodes at the smallest available
    residue and reversing the result

    :raises NotInCrystal: if the descent stops before reaching ∅
    '''

    mp = _check_level(mp, order)
    path = list()
    current = mp

    while current.rank:

        for i in order.residues(current):
            parent = e_op(current, i, order)
            if parent is not None:
                path.append(i)
                current = parent
                break

        else:
            v = (mp.compact(), order.kind, current.compact())
            raise NotInCrystal(
                '%s is not in the %s crystal (stuck at %s)' % v
            )

    path.reverse()

    return path


def follow_path(residues, order):
    '''
    applies `f_op` for each residue in turn, starting from ∅

    :raises DeadEnd: when a step has no good node
    '''

    mp = order.empty()

    for (step, i) in enumerate(residues):

        target = f_op(mp, i, order)

        if target is None:
            v = (i, mp.compact(), step)
            raise DeadEnd('no good %s-node on %s at step %s' % v, step)

        mp = target

    return mp


def is_vertex(mp, order):
    '''
    true iff `mp` lies in the crystal component of ∅
    '''

    try:
        highest_weight_path(mp, order)
    except NotInCrystal:
        return False

    return True
