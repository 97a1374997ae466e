from .CommandTest import CommandTest
from invol.group.constructors import dihedral, quaternion8

class StatsCommandTest(CommandTest):

    def test_dihedral(self):
        self.run_command_test(
            command = 'stats D8',
            output = '''group: D8
order: 8
j: 6
alpha: 3/4 (0.750000)
factorization: 2^3 * 1
center order: 2
elementary abelian: no
''',
        )

    def test_product(self):
        self.run_command_test(
            command = 'stats "EA2 x D6"',
            output = '''group: C2^2xD6
order: 24
j: 16
alpha: 2/3 (0.666667)
factorization: 2^3 * 3
center order: 4
elementary abelian: no
''',
        )

    def test_table(self):
        self.run_command_test(
            command = 'stats "(table:groups/q8.txt) x C2"',
            tables = {'groups/q8.txt': quaternion8()},
            output = '''group: (table:groups/q8.txt)xC2
order: 16
j: 4
alpha: 1/4 (0.250000)
factorization: 2^4 * 1
center order: 4
elementary abelian: no
''',
        )

    def test_generalized_dihedral_of_a_table(self):
        self.run_command_test(
            command = 'stats Dih(table:d8.txt)',
            tables = {'d8.txt': dihedral(8)},
            output = None,
            exit_code = 2,
        )

    def test_bad_specs(self):
        for spec in ('D7', 'C2y', 'Dih(Q8)', 'C2^10', ''):
            self.run_command_test(
                command = ['stats', spec],
                output = None,
                exit_code = 2,
            )

    def test_missing_table(self):
        result = self.run_command_test(
            command = 'stats table:missing.txt',
            output = None,
            exit_code = 3,
        )
        self.assertIn('missing.txt', result.output)

    def test_malformed_table(self):
        self.run_command_test(
            command = 'stats table:bad.txt',
            files = {'bad.txt': '2\n1 0\n0 1\n'},
            output = None,
            exit_code = 2,
        )

    def test_table_not_utf8(self):
        result = self.run_command_test(
            command = 'stats table:bad.txt',
            files = {'bad.txt': b'2\n0 1\n1 \xff\n'},
            output = None,
            exit_code = 2,
        )
        self.assertIn('not UTF-8', result.output)
