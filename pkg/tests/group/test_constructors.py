from hypothesis import given, settings, strategies as st
from invol.errors import InvalidOrder, NonAbelianBase, NotAHomomorphism, NotAnAutomorphism
from invol.group.constructors import AutomorphismAction, abelian_groups, abelian_invariant_factors, abelian_name, \
    check_action, cyclic, cyclic_action, dicyclic, dihedral, direct_product, elementary_abelian, \
    generalized_dihedral, inversion_action, quaternion8, semidirect_product, trivial_action
from invol.group.homomorphisms import is_isomorphic
from invol.group.structure import center
from invol.involutions import stats
import unittest

class ConstructorsTest(unittest.TestCase):

    def test_cyclic(self):
        self.assertEqual(cyclic(1).order, 1)
        self.assertEqual(cyclic(2).rows, ((0, 1), (1, 0)))
        self.assertEqual(cyclic(5).multiply(3, 4), 2)
        with self.assertRaises(InvalidOrder):
            cyclic(0)

    def test_cyclic_involutions(self):
        for k in range(1, 12):
            self.assertEqual(stats(cyclic(2 * k)).j_count, 2)
            self.assertEqual(stats(cyclic(2 * k + 1)).j_count, 1)

    def test_dihedral(self):
        self.assertEqual(stats(dihedral(8)).j_count, 6)
        self.assertEqual(stats(dihedral(6)).j_count, 4)
        self.assertTrue(dihedral(4).is_abelian)
        self.assertEqual(dihedral(2).order, 2)
        for bad in (0, 7, -2):
            with self.assertRaises(InvalidOrder):
                dihedral(bad)

    def test_dihedral_numbering(self):
        n = 5
        d = dihedral(2 * n)
        for i in range(n):
            self.assertEqual(d.multiply(1, i), (i + 1) % n)
            self.assertEqual(d.multiply(i, n), n + i)
            self.assertEqual(d.element_order(n + i), 2)

    def test_elementary_abelian(self):
        self.assertEqual(elementary_abelian(0).order, 1)
        g = elementary_abelian(3)
        self.assertEqual(g.name, 'C2^3')
        self.assertEqual(set(g.element_orders), {1, 2})
        s = stats(elementary_abelian(4))
        self.assertEqual(s.j_count, 16)
        self.assertEqual(s.alpha, 1)

    def test_quaternion8(self):
        q8 = quaternion8()
        s = stats(q8)
        self.assertEqual(s.j_count, 2)
        self.assertEqual(str(s.alpha), '1/4')
        self.assertEqual(len(center(q8)), 2)
        self.assertIsNone(is_isomorphic(q8, dihedral(8)))

    def test_dicyclic(self):
        self.assertIsNotNone(is_isomorphic(dicyclic(4), cyclic(4)))
        dic12 = dicyclic(12)
        self.assertEqual(stats(dic12).j_count, 2)
        self.assertFalse(dic12.is_abelian)
        with self.assertRaises(InvalidOrder):
            dicyclic(10)

    def test_direct_product(self):
        g = direct_product(dihedral(8), elementary_abelian(2))
        self.assertEqual(g.order, 32)
        self.assertEqual(g.name, 'D8xC2^2')
        self.assertEqual(str(stats(g).alpha), '3/4')
        self.assertEqual(direct_product(cyclic(1), dihedral(6)), dihedral(6))
        # (h, k) has index h*|K| + k
        self.assertEqual(direct_product(cyclic(3), cyclic(2)).multiply(3, 2), 5)

    def test_direct_product_is_associative_up_to_isomorphism(self):
        a, b, c = cyclic(2), dihedral(6), cyclic(3)
        left = direct_product(direct_product(a, b), c)
        right = direct_product(a, direct_product(b, c))
        self.assertIsNotNone(is_isomorphic(left, right))

    def test_semidirect_product_with_trivial_action_is_direct(self):
        n, q = cyclic(4), cyclic(2)
        self.assertEqual(semidirect_product(n, q, trivial_action(n, q)), direct_product(n, q))

    def test_semidirect_product_by_inversion(self):
        n, q = cyclic(4), cyclic(2)
        g = semidirect_product(n, q, inversion_action(n))
        self.assertEqual(g.name, 'C4:C2')
        self.assertIsNotNone(is_isomorphic(g, dihedral(8)))

    def test_check_action_rejects_non_automorphisms(self):
        n, q = cyclic(4), cyclic(2)
        with self.assertRaises(NotAnAutomorphism):
            check_action(n, q, AutomorphismAction(2, ((0, 1, 2, 3), (0, 2, 1, 3))))
        with self.assertRaises(NotAnAutomorphism):
            check_action(n, q, AutomorphismAction(2, ((0, 1, 2, 3), (0, 1, 1, 3))))

    def test_check_action_rejects_non_homomorphisms(self):
        n = cyclic(4)
        with self.assertRaises(NotAHomomorphism):
            check_action(n, cyclic(3), inversion_action(n))
        # C3 cannot act on C4 by inversion: g^3 would act as inversion, not the identity
        with self.assertRaises(NotAHomomorphism):
            check_action(n, cyclic(3), AutomorphismAction(3, ((0, 1, 2, 3), (0, 3, 2, 1), (0, 3, 2, 1))))
        with self.assertRaises(NotAHomomorphism):
            check_action(n, cyclic(2), AutomorphismAction(2, ((0, 3, 2, 1), (0, 1, 2, 3))))

    def test_cyclic_action(self):
        action = cyclic_action(elementary_abelian(2), 3, (0, 2, 3, 1))
        self.assertEqual(action.images, ((0, 1, 2, 3), (0, 2, 3, 1), (0, 3, 1, 2)))

    def test_generalized_dihedral(self):
        self.assertIsNotNone(is_isomorphic(generalized_dihedral(cyclic(5)), dihedral(10)))
        self.assertEqual(generalized_dihedral(elementary_abelian(2)), direct_product(elementary_abelian(2), cyclic(2)))
        self.assertEqual(stats(generalized_dihedral(direct_product(cyclic(3), cyclic(3)))).j_count, 10)
        with self.assertRaises(NonAbelianBase):
            generalized_dihedral(dihedral(8))

    def test_abelian_invariant_factors(self):
        self.assertEqual(abelian_invariant_factors(1), [()])
        self.assertEqual(abelian_invariant_factors(8), [(8,), (4, 2), (2, 2, 2)])
        self.assertEqual(abelian_invariant_factors(12), [(12,), (6, 2)])
        self.assertEqual(len(abelian_invariant_factors(16)), 5)
        self.assertEqual(len(abelian_invariant_factors(72)), 6)

    def test_abelian_names(self):
        self.assertEqual(abelian_name((4, 2, 2)), 'C4xC2^2')
        self.assertEqual(abelian_name((6, 2)), 'C6xC2')
        self.assertEqual(abelian_name(()), 'C1')
        self.assertEqual([g.name for g in abelian_groups(8)], ['C8', 'C4xC2', 'C2^3'])

    @settings(max_examples=25, deadline=None)
    @given(st.integers(1, 12), st.integers(1, 12))
    def test_involutions_multiply_over_products(self, a, b):
        h, k = dihedral(2 * a), cyclic(b)
        self.assertEqual(stats(direct_product(h, k)).j_count, stats(h).j_count * stats(k).j_count)
