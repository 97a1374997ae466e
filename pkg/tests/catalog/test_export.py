from invol.catalog import INDEX_FIELDS, INDEX_FILE, constructed_catalog, export_catalog, read_index
from invol.catalog.export import file_name, slug
from invol.group import read_table
import os
import tempfile
import unittest

class ExportTest(unittest.TestCase):

    def test_slug(self):
        self.assertEqual(slug('C2^2:C4'), 'C2_2_C4')
        self.assertEqual(slug('Dih(C3xC3)'), 'Dih_C3xC3')
        self.assertEqual(slug('^^'), 'G')

    def test_export(self):
        entries = constructed_catalog(8)
        with tempfile.TemporaryDirectory() as directory:
            out = os.path.join(directory, 'catalog')
            path = export_catalog(entries, out)
            self.assertEqual(path, os.path.join(out, INDEX_FILE))
            with open(path, encoding='utf-8') as fh:
                self.assertEqual(fh.readline().rstrip('\n').split('\t'), list(INDEX_FIELDS))
            rows = read_index(path)
            self.assertEqual(len(rows), len(entries))
            d8 = next(row for row in rows if row['name'] == 'D8')
            self.assertEqual(d8['file'], '08-04-D8.txt')
            self.assertEqual((d8['order'], d8['j'], d8['alpha'], d8['provenance']), ('8', '6', '3/4', 'constructed'))
            for entry, row in zip(entries, rows):
                self.assertEqual(read_table(os.path.join(out, row['file'])), entry.group)

    def test_file_name(self):
        entry = constructed_catalog(1)[0]
        self.assertEqual(file_name(entry, 1), '01-01-C1.txt')
