from invol.group import SubsetMask
import unittest

class SubsetMaskTest(unittest.TestCase):

    def test_from_indices(self):
        mask = SubsetMask.from_indices(6, [4, 0, 2, 2])
        self.assertEqual(mask.bits, 0b10101)
        self.assertEqual(list(mask), [0, 2, 4])
        self.assertEqual(mask.indices, (0, 2, 4))
        self.assertEqual(len(mask), 3)
        self.assertIn(2, mask)
        self.assertNotIn(3, mask)
        self.assertNotIn(9, mask)

    def test_bounds(self):
        with self.assertRaises(ValueError):
            SubsetMask.from_indices(4, [4])
        with self.assertRaises(ValueError):
            SubsetMask(2, 0b100)
        with self.assertRaises(ValueError):
            SubsetMask(0, 0)

    def test_set_operations(self):
        a = SubsetMask.from_indices(4, [0, 1])
        b = SubsetMask.from_indices(4, [1, 2])
        self.assertEqual((a | b).indices, (0, 1, 2))
        self.assertEqual((a & b).indices, (1,))
        self.assertEqual((a - b).indices, (0,))
        self.assertTrue((a & b).issubset(a))
        self.assertFalse(a.issubset(b))
        with self.assertRaises(ValueError):
            a | SubsetMask.identity(5)

    def test_full_and_identity(self):
        self.assertTrue(SubsetMask.full(5).is_full)
        self.assertEqual(len(SubsetMask.full(5)), 5)
        self.assertEqual(SubsetMask.identity(5).indices, (0,))
        self.assertFalse(SubsetMask.identity(5).is_full)
