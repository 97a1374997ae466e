from ..errors import TableFormatError, TableShapeError
from .Group import validate
import os

def parse_table(text, name='G'):
    '''Parse the Cayley-table text format.

    Line 1 holds the order n; the next n lines hold n space separated
    indices each, row i being the left factor. Blank lines are ignored.
    '''
    lines = [line.split() for line in text.splitlines() if line.strip()]
    if not lines:
        raise TableFormatError('empty table')
    if len(lines[0]) != 1:
        raise TableFormatError('first line must hold only the group order', (0,))
    try:
        order = int(lines[0][0])
        rows = [[int(token) for token in line] for line in lines[1:]]
    except ValueError as e:
        raise TableFormatError(f'non-integer entry: {e}') from e
    if order < 1:
        raise TableShapeError(f'order must be positive, got {order}')
    if len(rows) != order:
        raise TableShapeError(f'expected {order} rows, got {len(rows)}')
    for i, row in enumerate(rows):
        if len(row) != order:
            raise TableShapeError(f'row {i} has {len(row)} entries, expected {order}', (i,))
    return validate(rows, name)

def read_table(path, name=None):
    if name is None:
        name = os.path.splitext(os.path.basename(path))[0]
    with open(path, encoding='utf-8') as fh:
        try:
            text = fh.read()
        except UnicodeDecodeError as e:
            raise TableFormatError(f'{path} is not UTF-8 text: {e.reason} at byte {e.start}') from e
    return parse_table(text, name)

def format_table(group):
    lines = [str(group.order)]
    lines.extend(' '.join(str(v) for v in row) for row in group.rows)
    return '\n'.join(lines) + '\n'

def write_table(group, path):
    with open(path, 'w', encoding='utf-8') as fh:
        fh.write(format_table(group))
