from invol.errors import OrderCapExceeded
from invol.verify import ANCHORS, CHECK_FUNCTIONS, CHECKS, IN_SCOPE, build_population, verify_all
import unittest

class AnchorsTest(unittest.TestCase):

    def test_every_check_is_anchored(self):
        self.assertEqual(set(ANCHORS), set(CHECK_FUNCTIONS))
        self.assertEqual(len(CHECKS), len(CHECK_FUNCTIONS))
        self.assertTrue(all(ANCHORS.values()))

    def test_every_result_is_covered(self):
        covered = set()
        for result, check_ids in IN_SCOPE.items():
            self.assertTrue(check_ids, result)
            for check_id in check_ids:
                self.assertIn(check_id, CHECK_FUNCTIONS, result)
            covered.update(check_ids)
        self.assertEqual(covered, set(CHECK_FUNCTIONS))

class PopulationTest(unittest.TestCase):

    def test_families(self):
        population = build_population(8, 8)
        families = population.families
        self.assertEqual([m.label for m in families['dihedral']][:3], ['D2', 'D4', 'D6'])
        self.assertEqual(len(families['dihedral']), 8)
        self.assertEqual([m.label for m in families['c4-by-ea']], ['C4', 'C4xC2', 'C4xC2^2', 'C4xC2^3', 'C4xC2^4'])
        self.assertEqual([m.label for m in families['d8-by-ea']], ['D8', 'D8xC2', 'D8xC2^2', 'D8xC2^3'])
        self.assertTrue(all(m.group.order <= 64 for m in population.family_members))
        self.assertEqual(len(population.catalog), 14)
        self.assertEqual(len(population.everything), len(population.catalog) + len(population.family_members))

    def test_dihedral_type_family(self):
        labels = [m.label for m in build_population(1, 1).families['dihedral-type']]
        self.assertIn('Dih(C3)', labels)
        self.assertIn('C2xDih(C3xC3)', labels)
        self.assertIn('C2xDih(C15)', labels)
        self.assertIn('C2^3xDih(C3)', labels)
        self.assertNotIn('C2^2xDih(C3xC3)', labels)

class VerifyAllTest(unittest.TestCase):

    def test_small_run(self):
        report = verify_all(8, 8, 4, threads=1)
        self.assertTrue(report.overall_pass, report.to_text())
        self.assertEqual([c.check_id for c in report.checks], [check_id for check_id, _ in CHECKS])
        self.assertEqual(report.parameters, {'maxOrder': 8, 'dihedralMaxN': 8, 'enumerateUpTo': 4})
        self.assertEqual(len(report.notes), 1)
        self.assertIn('5..8', report.notes[0])

    def test_trivial_catalog(self):
        report = verify_all(1, 2, 0, threads=1)
        self.assertTrue(report.overall_pass, report.to_text())
        self.assertIn('no order was enumerated', report.notes[0])
        self.assertEqual(verify_all(4, 2, 6, threads=1).notes, [])

    def test_worker_count_does_not_change_the_report(self):
        self.assertEqual(verify_all(4, 4, 2, threads=1).to_json(), verify_all(4, 4, 2, threads=2).to_json())

    def test_progress(self):
        lines = []
        verify_all(2, 2, 2, threads=1, progress=lines.append)
        self.assertTrue(lines[-1].startswith('catalog-oracle: '))

    def test_parameter_ranges(self):
        with self.assertRaises(OrderCapExceeded):
            verify_all(17)
        with self.assertRaises(OrderCapExceeded):
            verify_all(0)
        with self.assertRaises(OrderCapExceeded):
            verify_all(8, enumerate_up_to=9)
        with self.assertRaises(ValueError):
            verify_all(8, dihedral_max_n=0)

class FullRunTest(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.report = verify_all()

    def test_passes(self):
        self.assertTrue(self.report.overall_pass, self.report.to_text())

    def test_defaults_enumerate_up_to_8(self):
        self.assertEqual(self.report.parameters, {'maxOrder': 16, 'dihedralMaxN': 64, 'enumerateUpTo': 8})
        self.assertEqual(len(self.report.notes), 1)
        self.assertIn('9..16', self.report.notes[0])
        self.assertIn('orders 1..8 are confirmed', self.report.notes[0])

    def test_no_check_is_vacuous(self):
        for check in self.report.checks:
            self.assertGreaterEqual(check.hypothesis_count, 1, check.check_id)

    def test_tight_cases(self):
        checks = {check.check_id: check for check in self.report.checks}
        self.assertIn('D8', checks['three-quarters-classification'].tight_cases)
        self.assertIn('D8xC2', checks['three-quarters-classification'].tight_cases)
        self.assertIn('D6', checks['two-thirds-corollary'].tight_cases)
        self.assertIn('D6 = C2^0 x Dih(C3)', checks['edmonds-equality-case'].tight_cases)
