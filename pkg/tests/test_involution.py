# -*- coding: utf-8 -*-

'''
test_involution
---------------

Tests `involution` module.
'''

from itertools import product
import unittest

from logbook import Logger
from mock import Mock

from mullineux.core import MullineuxError
from mullineux.crystal import (
    NodeOrder,
    NotInCrystal,
    enumerate_crystal,
    follow_path,
    highest_weight_path,
)
from mullineux.formats import dumps
from mullineux.involution import (
    MullineuxResult,
    NotKleshchev,
    NotRegularComponent,
    compare_infinity,
    mullineux,
    mullineux_infinity,
    mullineux_oracle,
    target_class,
    verify_sweep,
)
from mullineux.partitions import (
    Multicharge,
    Multipartition,
)
from mullineux.rank1 import m1
from tests.core import multi


class TestMullineux(unittest.TestCase):

    def setUp(self):
        self.mp = multi((4,), (3,), (1, 1, 1))
        self.image = multi((), (1, 1, 1), (4, 1, 1, 1))

    def test_worked_example(self):
        '''
        m_3 of (4,3,1.1.1) for 𝔰=(0,1,3), e=4, with every stage traced
        '''

        a = mullineux(self.mp, (0, 1, 3), 4, log=Logger('test'))

        self.assertEqual(a.image, self.image)
        self.assertEqual(a.target_class, Multicharge((1, 3, 0), 4))
        stages = [t.name for t in a.trace]
        self.assertEqual(stages, ['input', 'm1', 'lift', 'psi'])
        self.assertEqual(a.trace[1].mp, multi((2, 1, 1), (1, 1, 1), (3,)))
        self.assertEqual(a.trace[2].charge.charges, (0, 11, 21))
        self.assertEqual(a.eta, (8, 8))
        self.assertEqual(a.p, (3, 3))
        self.assertEqual(a.trace[3].mp, self.image)

    def test_oracle(self):
        '''
        the crystal path oracle gives the same image
        '''

        self.assertEqual(mullineux_oracle(self.mp, (0, 1, 3), 4), self.image)
        a = mullineux_oracle(multi((2, 1, 1)), (0,), 4)
        self.assertEqual(a, multi((4,)))
        empty = Multipartition.empty(2)
        self.assertEqual(mullineux_oracle(empty, (0, 1), 3), empty)
        self.assertRaises(
            NotKleshchev, mullineux_oracle, multi((1,), (), ()), (0, 0, 1), 4
        )

    def test_empty(self):
        '''
        the empty multipartition is fixed
        '''

        a = mullineux(Multipartition.empty(3), (0, 1, 3), 4)
        self.assertEqual(a.image, Multipartition.empty(3))

    def test_errors(self):
        '''
        non Kleshchev inputs and bad parameters
        '''

        self.assertRaises(
            NotRegularComponent, mullineux, multi((1, 1), ()), (0, 0), 2
        )
        self.assertRaises(
            NotKleshchev, mullineux, multi((1,), (), ()), (0, 0, 1), 4
        )
        self.assertRaises(
            MullineuxError, mullineux, self.mp, (0, 1, 3), 4, n=3
        )
        self.assertRaises(MullineuxError, mullineux, self.mp, (0, 1), 4)
        self.assertRaises(
            MullineuxError, mullineux, self.mp, (0, 1, 3), float('inf')
        )

    def test_larger_n(self):
        '''
        lifting for a larger n and the least η give the same image
        '''

        for n in (10, 11, 14):
            a = mullineux(self.mp, (0, 1, 3), 4, n=n)
            self.assertEqual(a.image, self.image)
        a = mullineux(self.mp, (0, 1, 3), 4, stabilize=True)
        self.assertEqual(a.image, self.image)
        self.assertTrue(all(x <= 8 for x in a.eta))

    def test_result_equality(self):
        '''
        results compare on image and classes only
        '''

        a = mullineux(self.mp, (0, 1, 3), 4)
        b = mullineux(self.mp, (0, 1, 3), 4, n=12)
        self.assertEqual(a, b)
        self.assertNotEqual(a.trace, b.trace)
        self.assertTrue(isinstance(a, MullineuxResult))
        self.assertIn('"eta":"a1^8 a2^8 w0"', dumps(a.to_dict()))

    def test_target_class(self):
        '''
        𝔰̃_i = -𝔰_{l-1-i} mod e
        '''

        self.assertEqual(target_class((0, 1, 3), 4).charges, (1, 3, 0))
        self.assertEqual(target_class(Multicharge((2,), 3)).charges, (1,))

    def test_rank_and_level_one(self):
        '''
        images keep the rank and reduce to m1 at level one
        '''

        for e in (2, 3, 4):
            graph = enumerate_crystal(
                NodeOrder.kleshchev((0,), e), 8, with_edges=False
            )
            for mp in graph.vertices():
                a = mullineux(mp, (0,), e)
                self.assertEqual(a.image.rank, mp.rank)
                self.assertEqual(a.image[0], m1(mp[0], e))

    def test_stabilized_agrees(self):
        '''
        the least η exponents give the full η image
        '''

        for residues in product(range(3), repeat=2):
            order = NodeOrder.kleshchev(residues, 3)
            graph = enumerate_crystal(order, 4, with_edges=False)
            for mp in graph.vertices():
                a = mullineux(mp, residues, 3)
                b = mullineux(mp, residues, 3, stabilize=True)
                self.assertEqual(a.image, b.image)

    def tearDown(self):
        pass


class TestInfinity(unittest.TestCase):

    def setUp(self):
        pass

    def test_level_one(self):
        '''
        at level one the map is conjugation
        '''

        a = mullineux_infinity(multi((3, 1)), (0,))
        self.assertEqual(a, multi((2, 1, 1)))
        a = mullineux_infinity(multi((3, 1)), Multicharge((5,)))
        self.assertEqual(a, multi((2, 1, 1)))

    def test_against_paths(self):
        '''
        the e = ∞ map replays negated paths and is an involution
        '''

        for charges in [(0, 0), (0, 1), (2, 0), (0, 3), (-1, 1)]:
            s = Multicharge(charges)
            target = Multicharge([-x for x in reversed(charges)])
            order = NodeOrder.uglov(charges)
            graph = enumerate_crystal(order, 4, with_edges=False)
            for mp in graph.vertices():
                a = mullineux_infinity(mp, s, log=Mock())
                path = highest_weight_path(mp, order)
                negated = [-i for i in path]
                b = follow_path(negated, NodeOrder('uglov', target))
                self.assertEqual(a, b)
                self.assertEqual(mullineux_infinity(a, target), mp)

    def test_errors(self):
        '''
        finite moduli and non vertices are refused
        '''

        self.assertRaises(
            MullineuxError,
            mullineux_infinity, multi((1,)), Multicharge((0,), 3),
        )
        self.assertRaises(
            NotInCrystal, mullineux_infinity, multi((), (1,)), (0, 0)
        )

    def test_compare_infinity(self):
        '''
        comparison table of e = n + 1 against e = ∞
        '''

        a = compare_infinity(2, 3, charges=[(0, 0), (0, 2)])
        columns = ['charges', 'mp', 'finite', 'infinite', 'agree']
        self.assertEqual(list(a.columns), columns)
        self.assertTrue(len(a) > 0)
        self.assertTrue(set(a['agree']) <= set([True, False]))

    def tearDown(self):
        pass


class TestSweep(unittest.TestCase):

    def setUp(self):
        pass

    def _check_sweep(self, level, e, n_max):

        a = verify_sweep(level, e, n_max, log=Mock())

        self.assertTrue(a.ok, a.mismatches)
        self.assertEqual(len(a.table), e ** level)
        self.assertEqual(a.table['mismatches'].sum(), 0)
        self.assertEqual(a.table['involution_failures'].sum(), 0)
        self.assertTrue((a.table['vertices'] > 0).all())

    def test_sweep_level_one(self):
        '''
        every class at level one, e in 2..4, up to rank 6
        '''

        for e in (2, 3, 4):
            self._check_sweep(1, e, 6)

    def test_sweep_level_two(self):
        '''
        every class at level two, e in 2..4, up to rank 6
        '''

        for e in (2, 3, 4):
            self._check_sweep(2, e, 6)

    def test_sweep_level_three(self):
        '''
        every class at level three, e in 2..3, up to rank 6
        '''

        for e in (2, 3):
            self._check_sweep(3, e, 6)

    def test_sweep_level_three_e4(self):
        '''
        every class at level three for e=4 up to rank 6
        '''

        self._check_sweep(3, 4, 6)

    def test_report_json(self):
        '''
        sweep reports serialize to JSON
        '''

        a = verify_sweep(2, 2, 2)
        text = a.to_json()
        self.assertTrue(text.startswith('{"classes":[{"charges":[0,0]'))
        self.assertIn('"mismatches":[]', text)
        self.assertIn('"level":2', text)

    def tearDown(self):
        pass
