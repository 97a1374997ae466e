from .CommandTest import CommandTest

class ClassifyCommandTest(CommandTest):

    def test_elementary_abelian(self):
        self.run_command_test(
            command = 'classify EA5',
            output = '''group: C2^5
alpha: 1 (1.000000)
regime: alpha > 3/4
elementary abelian: yes
''',
        )

    def test_three_quarters(self):
        result = self.run_command_test(
            command = 'classify D8xC2',
            output = None,
        )
        lines = result.output.splitlines()
        self.assertEqual(lines[:4], ['group: D8xC2', 'alpha: 3/4 (0.750000)', 'regime: alpha = 3/4', 'witness: D8xC2'])
        images = [int(v) for v in lines[4].split(': ')[1].split()]
        self.assertEqual(sorted(images), list(range(16)))
        self.assertEqual(images[0], 0)

    def test_dihedral_d8(self):
        result = self.run_command_test(
            command = 'classify Dih(C4)',
            output = None,
        )
        self.assertIn('witness: D8\n', result.output)

    def test_below_three_quarters(self):
        self.run_command_test(
            command = 'classify D6',
            output = '''group: D6
alpha: 2/3 (0.666667)
regime: alpha < 3/4
''',
        )

    def test_bad_spec(self):
        self.run_command_test(
            command = 'classify Dic6',
            output = None,
            exit_code = 2,
        )
