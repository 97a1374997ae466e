'''Independent enumeration of groups by backtracking over Cayley tables.'''
from ..errors import OrderCapExceeded
from ..group import validate
from .CatalogEntry import CatalogEntry, Provenance
from .dedupe import find_isomorphic

MAX_ENUMERATION_ORDER = 8

def cayley_tables(n):
    '''Yield every group table on 0..n-1 with identity 0.

    Open cells are branched on in row-major order. Every value placed,
    whether chosen or forced, is propagated through associativity: for
    each triple x, y, z in which the new cell is one of xy, yz, (xy)z and
    x(yz), a fourth product fixed by the other three is written in
    straight away, so a branch dies as soon as two products of a triple
    disagree or a row or column would repeat a value.
    '''
    table = [[-1] * n for _ in range(n)]
    # col_of[x][v] is the y with x*y == v, row_of[y][v] the x with x*y == v; -1 while unknown
    col_of = [[-1] * n for _ in range(n)]
    row_of = [[-1] * n for _ in range(n)]
    trail = []
    pending = []

    def place(x, y, v):
        current = table[x][y]
        if current >= 0:
            return current == v
        if col_of[x][v] >= 0 or row_of[y][v] >= 0:
            return False
        table[x][y] = v
        col_of[x][v] = y
        row_of[y][v] = x
        trail.append((x, y))
        pending.append((x, y))
        return True

    def undo(mark):
        while len(trail) > mark:
            x, y = trail.pop()
            v = table[x][y]
            table[x][y] = -1
            col_of[x][v] = -1
            row_of[y][v] = -1

    def forced(a, b):
        c = table[a][b]
        row_a, row_b, row_c = table[a], table[b], table[c]
        for t in range(n):
            # a*b is x*y with x, y = a, b and z = t
            q = row_b[t]
            r = row_c[t]
            if q >= 0:
                if r >= 0:
                    if not place(a, q, r):
                        return False
                elif row_a[q] >= 0 and not place(c, t, row_a[q]):
                    return False
            elif r >= 0 and col_of[a][r] >= 0 and not place(b, t, col_of[a][r]):
                return False
            # a*b is y*z with x = t
            row_t = table[t]
            p = row_t[a]
            r = row_t[c]
            if p >= 0:
                if r >= 0:
                    if not place(p, b, r):
                        return False
                elif table[p][b] >= 0 and not place(t, c, table[p][b]):
                    return False
            elif r >= 0 and row_of[b][r] >= 0 and not place(t, a, row_of[b][r]):
                return False
            # a*b is (x*y)*z with x = t, y solving t*y == a
            y = col_of[t][a]
            if y >= 0:
                q = table[y][b]
                if q >= 0:
                    if not place(t, q, c):
                        return False
                elif col_of[t][c] >= 0 and not place(y, b, col_of[t][c]):
                    return False
            # a*b is x*(y*z) with y = t, z solving t*z == b
            z = col_of[t][b]
            if z >= 0:
                p = row_a[t]
                if p >= 0:
                    if not place(p, z, c):
                        return False
                elif row_of[z][c] >= 0 and not place(a, t, row_of[z][c]):
                    return False
        return True

    def propagate():
        while pending:
            if not forced(*pending.pop()):
                pending.clear()
                return False
        return True

    for i in range(n):
        place(0, i, i)
        place(i, 0, i)
    pending.clear()
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]

    def fill(position):
        while position < len(cells) and table[cells[position][0]][cells[position][1]] >= 0:
            position += 1
        if position == len(cells):
            yield tuple(tuple(row) for row in table)
            return
        i, j = cells[position]
        for v in range(n):
            mark = len(trail)
            if place(i, j, v) and propagate():
                yield from fill(position + 1)
            pending.clear()
            undo(mark)

    yield from fill(0)

def brute_force_enumerate(n, progress=None):
    '''All groups of order n up to isomorphism, straight from the table search.'''
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise OrderCapExceeded(f'enumeration covers orders 1..{MAX_ENUMERATION_ORDER}, got {n}')
    classes = []
    tables = 0
    for table in cayley_tables(n):
        tables += 1
        group = validate(table)
        if find_isomorphic(group, classes) is None:
            name = f'T{n}.{len(classes) + 1}'
            classes.append(CatalogEntry(group.renamed(name), n, name, Provenance.ENUMERATED))
    if progress:
        progress(f'order {n}: {tables} tables, {len(classes)} classes')
    return classes
