'''Catalog export: one Cayley-table file per group plus a tab separated index.'''
from ..group import write_table
from ..involutions import stats
import csv
import os
import re

INDEX_FILE = 'index.tsv'
INDEX_FIELDS = ('name', 'order', 'provenance', 'j', 'alpha', 'file')

def slug(name):
    return re.sub(r'[^A-Za-z0-9]+', '_', name).strip('_') or 'G'

def file_name(entry, position):
    return f'{entry.order:02d}-{position:02d}-{slug(entry.name)}.txt'

def index_rows(entries):
    '''One index record per entry; position counts within each order from 1.'''
    positions = {}
    for entry in entries:
        position = positions[entry.order] = positions.get(entry.order, 0) + 1
        s = stats(entry.group)
        yield {
            'name': entry.name,
            'order': entry.order,
            'provenance': entry.provenance.value,
            'j': s.j_count,
            'alpha': str(s.alpha),
            'file': file_name(entry, position),
        }

def export_catalog(entries, out_dir):
    '''Write every entry and the index into out_dir; returns the index path.'''
    os.makedirs(out_dir, exist_ok=True)
    rows = list(index_rows(entries))
    for entry, row in zip(entries, rows):
        write_table(entry.group, os.path.join(out_dir, row['file']))
    path = os.path.join(out_dir, INDEX_FILE)
    with open(path, 'w', encoding='utf-8', newline='') as fh:
        writer = csv.DictWriter(fh, INDEX_FIELDS, delimiter='\t', lineterminator='\n')
        writer.writeheader()
        writer.writerows(rows)
    return path

def read_index(path):
    with open(path, encoding='utf-8', newline='') as fh:
        return list(csv.DictReader(fh, delimiter='\t'))
