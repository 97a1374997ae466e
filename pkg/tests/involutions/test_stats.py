from fractions import Fraction
from hypothesis import given, strategies as st
from invol.catalog import constructed_catalog
from invol.group.constructors import abelian_groups, cyclic, dihedral, direct_product, elementary_abelian
from invol.group.structure import is_subgroup
from invol.involutions import InvolutionStats, dihedral_alpha_closed_form, dihedral_j_closed_form, \
    involution_set, stats
import unittest

class StatsTest(unittest.TestCase):

    def test_small_groups(self):
        d8 = stats(dihedral(8))
        self.assertEqual(d8.j_count, 6)
        self.assertEqual(d8.alpha, Fraction(3, 4))
        self.assertEqual(stats(dihedral(6)).alpha, Fraction(2, 3))
        self.assertEqual(stats(cyclic(1)).alpha, 1)
        self.assertEqual(stats(cyclic(7)).j_count, 1)
        self.assertEqual(stats(elementary_abelian(4)).alpha, 1)

    def test_identity_is_counted(self):
        self.assertIn(0, involution_set(cyclic(5)))
        self.assertEqual(involution_set(dihedral(8)).indices, (0, 2, 4, 5, 6, 7))

    def test_factorization(self):
        self.assertEqual(tuple(stats(dihedral(24)).factorization), (3, 3))

    def test_c4_family(self):
        for n in range(2, 7):
            g = cyclic(4) if n == 2 else direct_product(cyclic(4), elementary_abelian(n - 2))
            self.assertEqual(stats(g).j_count, 1 << (n - 1))
            self.assertEqual(stats(g).alpha, Fraction(1, 2))

    def test_dihedral_closed_forms(self):
        for n in range(1, 65):
            s = stats(dihedral(2 * n))
            self.assertEqual(s.j_count, dihedral_j_closed_form(n), n)
            self.assertEqual(s.alpha, dihedral_alpha_closed_form(n), n)

    def test_closed_form_domain(self):
        with self.assertRaises(ValueError):
            dihedral_j_closed_form(0)
        with self.assertRaises(ValueError):
            dihedral_alpha_closed_form(-3)

    def test_abelian_involutions_form_a_subgroup(self):
        for order in range(1, 33):
            for g in abelian_groups(order):
                self.assertTrue(is_subgroup(g, involution_set(g)), g.name)

    def test_alpha_bounds_on_the_catalog(self):
        for entry in constructed_catalog(16):
            s = stats(entry.group)
            self.assertTrue(Fraction(1, entry.order) <= s.alpha <= 1, entry.name)

    def test_stats_are_validated(self):
        with self.assertRaises(ValueError):
            InvolutionStats(4, 0, Fraction(0), cyclic(4).factorize_order())
        with self.assertRaises(ValueError):
            InvolutionStats(4, 2, Fraction(1, 4), cyclic(4).factorize_order())

    @given(st.integers(min_value=1, max_value=200))
    def test_closed_form_shape(self, n):
        alpha = dihedral_alpha_closed_form(n)
        self.assertEqual(alpha, Fraction(dihedral_j_closed_form(n), 2 * n))
        self.assertGreater(alpha, Fraction(1, 2))
