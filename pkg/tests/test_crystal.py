# -*- coding: utf-8 -*-

'''
test_crystal
------------

Tests `crystal` module.
'''

from itertools import product
import unittest

from logbook import Logger
from mock import Mock

from mullineux.crystal import (
    CrystalGraph,
    DeadEnd,
    NodeOrder,
    NotInCrystal,
    ResourceLimitError,
    SignatureWord,
    e_op,
    enumerate_crystal,
    f_op,
    follow_path,
    good_addable,
    good_removable,
    highest_weight_path,
    is_vertex,
    reduce_word,
    signature_word,
    vertices,
)
from mullineux.affine_weyl import asymptotic_lift
from mullineux.core import MullineuxError
from mullineux.partitions import (
    Multicharge,
    Multipartition,
    Node,
    partitions_of,
)
from tests.core import (
    compact_set,
    load_fixture,
    multi,
)


def word(signs):
    return SignatureWord(
        Mock(sign=x, node=k) for (k, x) in enumerate(signs)
    )


class TestSignature(unittest.TestCase):

    def setUp(self):
        self.uglov = NodeOrder.uglov((0, 0, 1), 4)
        self.kleshchev = NodeOrder.kleshchev((0, 0, 1), 4)

    def test_reduce_word(self):
        '''
        RA factors cancel until the word reads A...AR...R
        '''

        self.assertEqual(str(reduce_word(word('RA'))), '')
        self.assertEqual(str(reduce_word(word('ARRA'))), 'AR')
        self.assertEqual(str(reduce_word(word('AAR'))), 'AAR')
        self.assertEqual(str(reduce_word(word('RRAA'))), '')

    def test_signature_word(self):
        '''
        both empty nodes of residue 0, sorted by the order
        '''

        a = signature_word(Multipartition.empty(3), 0, self.uglov)
        self.assertEqual(str(a), 'AA')
        self.assertEqual(a.addable(), [Node(1, 1, 1), Node(1, 1, 0)])
        a = signature_word(Multipartition.empty(3), 0, self.kleshchev)
        self.assertEqual(a.addable(), [Node(1, 1, 0), Node(1, 1, 1)])
        order = NodeOrder.uglov((0,), 3)
        a = signature_word(Multipartition.empty(1), 1, order)
        self.assertEqual(str(a), '')

    def test_good_nodes(self):
        '''
        good addable 0-node of the empty 3-partition for both orders
        '''

        empty = Multipartition.empty(3)
        self.assertEqual(good_addable(empty, 0, self.uglov), Node(1, 1, 0))
        a = good_addable(empty, 0, self.kleshchev)
        self.assertEqual(a, Node(1, 1, 1))
        self.assertEqual(f_op(empty, 0, self.uglov), multi((1,), (), ()))
        self.assertEqual(f_op(empty, 0, self.kleshchev), multi((), (1,), ()))
        self.assertIsNone(f_op(empty, 2, self.uglov))
        self.assertIsNone(good_removable(empty, 0, self.uglov))
        self.assertIsNone(e_op(empty, 0, self.uglov))
        a = e_op(multi((2,), (), ()), 1, self.uglov)
        self.assertEqual(a, multi((1,), (), ()))

    def test_plain_sequences(self):
        '''
        the operators accept nested lists as well as multipartitions
        '''

        a = f_op([[], [], []], 0, self.uglov)
        self.assertEqual(a, multi((1,), (), ()))
        self.assertEqual(e_op([[2], [], []], 1, self.uglov), a)
        self.assertIsNone(e_op([(), (), ()], 0, self.kleshchev))
        self.assertEqual(f_op(((), (), ()), 0, self.uglov), a)

    def test_local_inverses(self):
        '''
        e_i undoes f_i and f_i undoes e_i on every small vertex
        '''

        for level in (1, 2, 3):
            for e in (2, 3, 4):
                for residues in product(range(e), repeat=level):
                    for order in (
                        NodeOrder.kleshchev(residues, e),
                        NodeOrder.uglov(residues, e),
                    ):
                        self._check_inverses(order, 6)

    def _check_inverses(self, order, n_max):

        graph = enumerate_crystal(order, n_max, with_edges=False)

        for mp in graph.vertices():
            for i in range(order.e):

                up = f_op(mp, i, order)
                if up is not None:
                    self.assertEqual(e_op(up, i, order), mp)

                down = e_op(mp, i, order)
                if down is not None:
                    self.assertEqual(f_op(down, i, order), mp)

    def test_order_level(self):
        '''
        multipartitions of the wrong level are refused
        '''

        self.assertRaises(
            MullineuxError, signature_word, multi((1,)), 0, self.uglov
        )

    def tearDown(self):
        pass


class TestEnumeration(unittest.TestCase):

    def setUp(self):
        self.fixtures = load_fixture('crystal_fixtures.json')

    def _check_fixture(self, kind):

        data = self.fixtures[kind]
        order = NodeOrder(kind, Multicharge(data['charges'], data['e']))
        graph = enumerate_crystal(order, 4, log=Logger('test'))

        for (n, layer) in enumerate(data['layers']):
            expected = [Multipartition(mp) for mp in layer]
            self.assertEqual(graph.layer(n), expected)

        edges = [edge for edge in graph.edges if edge[0].rank <= 1]
        expected = [
            (Multipartition(a), i, Multipartition(b))
            for (a, i, b) in data['edges']
        ]
        self.assertEqual(edges, expected)

        for (n, printed) in data['printed'].items():
            found = compact_set(graph.layer(int(n)))
            self.assertTrue(compact_set(printed) <= found)

        return graph

    def test_uglov_graph(self):
        '''
        Uglov crystal of (0,0,1), e=4, against the hand derived layers
        '''

        self._check_fixture('uglov')

    def test_kleshchev_graph(self):
        '''
        Kleshchev crystal of (0,0,1), e=4, and its DOT export
        '''

        graph = self._check_fixture('kleshchev')
        dot = graph.to_dot()

        self.assertTrue(dot.startswith('digraph crystal {'))
        labels = [
            '(∅,1,3)', '(1,1,2)', '(∅,2,2)', '(∅,2.1,1)',
            '(1,2,1)', '(∅,1,2.1)', '(∅,∅,3.1)', '(∅,∅,4)',
        ]
        for label in labels:
            self.assertIn('label="%s"' % label, dot)

    def test_json_round_trip(self):
        '''
        to_json then from_json restores layers and edges
        '''

        order = NodeOrder.kleshchev((0, 0, 1), 4)
        graph = enumerate_crystal(order, 3)
        other = CrystalGraph.from_json(order, graph.to_json())

        self.assertEqual(other.layers, graph.layers)
        self.assertEqual(other.edges, graph.edges)
        self.assertEqual(len(other), len(graph))
        self.assertIn(multi((), (), (2, 1)), graph)

    def test_level_one(self):
        '''
        the level one crystal holds exactly the e-regular partitions
        '''

        for e in (2, 3):
            order = NodeOrder.uglov((0,), e)
            graph = enumerate_crystal(order, 6, with_edges=False)
            for n in range(7):
                expected = set(
                    Multipartition((p,))
                    for p in partitions_of(n) if p.is_e_regular(e)
                )
                self.assertEqual(set(graph.layer(n)), expected)

    def test_layer_cap(self):
        '''
        layers larger than the cap raise
        '''

        order = NodeOrder.uglov((0, 0), 2)
        self.assertRaises(
            ResourceLimitError, enumerate_crystal, order, 4, layer_cap=1
        )
        graph = enumerate_crystal(order, 2, with_edges=False)
        self.assertRaises(MullineuxError, graph.edge_map)

        widest = max(len(layer) for layer in graph.layers)
        a = enumerate_crystal(order, 2, layer_cap=widest)
        self.assertEqual(a.layers, graph.layers)
        self.assertRaises(
            ResourceLimitError,
            enumerate_crystal, order, 2, layer_cap=widest - 1,
        )

    def test_asymptotic_identity(self):
        '''
        Uglov and Kleshchev layers coincide for asymptotic multicharges
        '''

        n = 5
        for e in (2, 3, 4):
            for residues in [(0, 0), (1, 0), (0, 2 % e), (0, 1, 1)]:
                s, _ = asymptotic_lift(residues, n, e, negate=False)
                a = enumerate_crystal(
                    NodeOrder('uglov', s), n, with_edges=False
                )
                b = enumerate_crystal(
                    NodeOrder('kleshchev', s), n, with_edges=False
                )
                for k in range(n + 1):
                    self.assertEqual(set(a.layer(k)), set(b.layer(k)))

    def test_class_layer_sizes(self):
        '''
        every multicharge of a class has the layer sizes of the Kleshchev
        crystal of that class
        '''

        n = 6
        for e in (2, 3, 4):
            for residues in product(range(e), repeat=2):
                expected = self._sizes(NodeOrder.kleshchev(residues, e), n)
                for shift in product(range(-1, 3), repeat=2):
                    charges = [r + e * k for (r, k) in zip(residues, shift)]
                    order = NodeOrder.uglov(charges, e)
                    self.assertEqual(self._sizes(order, n), expected)

        for residues in [(0, 0, 0), (0, 1, 2), (2, 0, 1)]:
            expected = self._sizes(NodeOrder.kleshchev(residues, 3), n)
            for shift in [(0, 0, 0), (0, 1, 2), (1, -1, 0), (2, 2, -1)]:
                charges = [r + 3 * k for (r, k) in zip(residues, shift)]
                order = NodeOrder.uglov(charges, 3)
                self.assertEqual(self._sizes(order, n), expected)

    def _sizes(self, order, n):
        graph = enumerate_crystal(order, n, with_edges=False)
        return [len(layer) for layer in graph.layers]

    def tearDown(self):
        pass


class TestPaths(unittest.TestCase):

    def setUp(self):
        self.uglov = NodeOrder.uglov((0, 0, 1), 4)
        self.kleshchev = NodeOrder.kleshchev((0, 0, 1), 4)

    def test_highest_weight_path(self):
        '''
        canonical paths of small vertices
        '''

        path = highest_weight_path
        self.assertEqual(path(Multipartition.empty(3), self.uglov), [])
        self.assertEqual(path(multi((1,), (), ()), self.uglov), [0])
        self.assertEqual(path(multi((2,), (), ()), self.uglov), [0, 1])
        self.assertRaises(
            NotInCrystal, path, multi((1,), (), ()), self.kleshchev
        )

    def test_follow_path(self):
        '''
        replaying residues from the empty multipartition
        '''

        self.assertEqual(follow_path([], self.uglov), Multipartition.empty(3))
        self.assertEqual(follow_path([0, 1], self.uglov), multi((2,), (), ()))
        a = follow_path([1, 0], self.uglov)
        self.assertEqual(a, multi((1,), (), (1,)))

        try:
            follow_path([0, 2], self.uglov)
        except DeadEnd as e:
            self.assertEqual(e.step, 1)
        else:
            self.fail('DeadEnd not raised')

    def test_path_round_trip(self):
        '''
        the canonical path of every vertex replays to the vertex
        '''

        orders = [self.uglov, self.kleshchev, NodeOrder.kleshchev((1, 0), 2)]
        for order in orders:
            graph = enumerate_crystal(order, 5, with_edges=False)
            for mp in graph.vertices():
                path = highest_weight_path(mp, order)
                self.assertEqual(follow_path(path, order), mp)
                self.assertTrue(is_vertex(mp, order))

    def test_vertices(self):
        '''
        one layer of the Kleshchev crystal
        '''

        self.assertEqual(
            compact_set(vertices(self.kleshchev, 2)),
            set(['(1,1,∅)', '(∅,1,1)', '(∅,1.1,∅)', '(∅,∅,1.1)', '(∅,∅,2)']),
        )
        self.assertFalse(is_vertex(multi((1, 1), (), ()), self.kleshchev))

    def tearDown(self):
        pass
