from invol.group.constructors import cyclic, dihedral, direct_product, elementary_abelian, generalized_dihedral, \
    quaternion8
from invol.group.recognition import d8_ea_witness, is_elementary_abelian_2, recognize_d8_ea
import unittest

class RecognitionTest(unittest.TestCase):

    def test_is_elementary_abelian_2(self):
        self.assertTrue(is_elementary_abelian_2(elementary_abelian(3)))
        self.assertTrue(is_elementary_abelian_2(cyclic(1)))
        self.assertFalse(is_elementary_abelian_2(cyclic(4)))
        self.assertFalse(is_elementary_abelian_2(dihedral(8)))

    def test_recognize_d8_ea(self):
        self.assertEqual(recognize_d8_ea(dihedral(8)), 0)
        self.assertEqual(recognize_d8_ea(direct_product(dihedral(8), cyclic(2))), 1)
        self.assertEqual(recognize_d8_ea(generalized_dihedral(direct_product(cyclic(4), cyclic(2)))), 1)
        self.assertIsNone(recognize_d8_ea(quaternion8()))
        self.assertIsNone(recognize_d8_ea(direct_product(cyclic(4), cyclic(2))))
        self.assertIsNone(recognize_d8_ea(dihedral(16)))

    def test_small_and_odd_orders_are_not_searched(self):
        self.assertIsNone(recognize_d8_ea(elementary_abelian(2)))
        self.assertIsNone(recognize_d8_ea(dihedral(24)))

    def test_witness(self):
        k, witness = d8_ea_witness(direct_product(elementary_abelian(2), dihedral(8)))
        self.assertEqual(k, 2)
        self.assertTrue(witness.is_bijective)
        self.assertTrue(witness.is_homomorphism())
