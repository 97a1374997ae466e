from ..errors import AssociativityViolation, IdentityViolation, LatinSquareViolation, TableShapeError
from .SubsetMask import SubsetMask
from functools import cached_property
from typing import NamedTuple
from sympy import multiplicity
import numpy as np

# cells of the associativity cube compared per numpy call
_CUBE_CELLS = 1 << 18

class OrderFactorization(NamedTuple):
    '''|G| = 2**two_exponent * odd_part with odd_part odd.'''
    two_exponent: int
    odd_part: int

    @property
    def two_part(self):
        return 1 << self.two_exponent

    def __str__(self):
        return f'2^{self.two_exponent} * {self.odd_part}'

class Group:
    '''A finite group given by its Cayley table.

    Elements are the indices 0..n-1 and index 0 is the identity. Row i,
    column j of the table holds the index of the product i*j. Instances
    come from validate() or a constructor and never change afterwards;
    two groups compare equal when their tables are equal, whatever their
    names.
    '''

    def __init__(self, table, name='G'):
        array = np.array(table, dtype=np.int64)
        array.setflags(write=False)
        self._table = array
        self._rows = tuple(tuple(row) for row in array.tolist())
        self._name = name
        self._hash = hash((array.shape[0], array.tobytes()))

    def __repr__(self):
        return f"Group('{self._name}', order={self.order})"

    def __len__(self):
        return self.order

    def __eq__(self, other):
        if not isinstance(other, Group):
            return NotImplemented
        return self._hash == other._hash and np.array_equal(self._table, other._table)

    def __hash__(self):
        return self._hash

    @property
    def name(self):
        return self._name

    @property
    def order(self):
        return len(self._rows)

    @property
    def table(self):
        '''Read-only numpy view of the Cayley table.'''
        return self._table

    @property
    def rows(self):
        '''The Cayley table as nested tuples, for fast scalar lookups.'''
        return self._rows

    def renamed(self, name):
        return Group(self._table, name)

    def multiply(self, i, j):
        return self._rows[i][j]

    def inverse(self, i):
        return self.inverses[i]

    def element_order(self, i):
        return self.element_orders[i]

    def power(self, i, exponent):
        exponent %= self.element_orders[i]
        result = 0
        for _ in range(exponent):
            result = self._rows[result][i]
        return result

    def conjugate(self, x, g):
        '''g x g^-1'''
        return self._rows[self._rows[g][x]][self.inverses[g]]

    def commute(self, i, j):
        return self._rows[i][j] == self._rows[j][i]

    def factorize_order(self):
        two_exponent = int(multiplicity(2, self.order))
        return OrderFactorization(two_exponent, self.order >> two_exponent)

    @cached_property
    def inverses(self):
        return tuple(np.argmax(self._table == 0, axis=1).tolist())

    @cached_property
    def element_orders(self):
        rows = self._rows
        orders = []
        for i in range(self.order):
            x, k = i, 1
            while x != 0:
                x = rows[x][i]
                k += 1
            orders.append(k)
        return tuple(orders)

    @cached_property
    def is_abelian(self):
        return bool(np.array_equal(self._table, self._table.T))

    def mask(self, indices=()):
        return SubsetMask.from_indices(self.order, indices)

    def full_mask(self):
        return SubsetMask.full(self.order)

    def identity_mask(self):
        return SubsetMask.identity(self.order)

def validate(table, name='G'):
    '''Check the group axioms on a Cayley table and return the Group.

    Raises TableShapeError, IdentityViolation, LatinSquareViolation or
    AssociativityViolation; each carries the first offending position.
    '''
    try:
        array = np.array(table, dtype=np.int64)
    except (TypeError, ValueError) as e:
        raise TableShapeError(f'table is not a square array of indices: {e}') from e
    if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] == 0:
        raise TableShapeError(f'table must be a non-empty square array, got shape {array.shape}')
    n = array.shape[0]
    bad = np.argwhere((array < 0) | (array >= n))
    if len(bad):
        i, j = (int(v) for v in bad[0])
        raise TableShapeError(f'entry {array[i, j]} at ({i}, {j}) is not an element index', (i, j))
    _check_identity(array)
    _check_latin(array)
    _check_associative(array)
    return Group(array, name)

def _check_identity(array):
    n = array.shape[0]
    expected = np.arange(n)
    bad = np.flatnonzero(array[0] != expected)
    if len(bad):
        j = int(bad[0])
        raise IdentityViolation(f'0*{j} is {array[0, j]}, expected {j}', (0, j))
    bad = np.flatnonzero(array[:, 0] != expected)
    if len(bad):
        i = int(bad[0])
        raise IdentityViolation(f'{i}*0 is {array[i, 0]}, expected {i}', (i, 0))

def _first_repeat(line):
    seen = {}
    for position, value in enumerate(line.tolist()):
        if value in seen:
            return position, value
        seen[value] = position
    return None

def _check_latin(array):
    n = array.shape[0]
    for i in range(n):
        repeat = _first_repeat(array[i])
        if repeat:
            j, value = repeat
            raise LatinSquareViolation(f'row {i} repeats {value} at column {j}', (i, j))
    for j in range(n):
        repeat = _first_repeat(array[:, j])
        if repeat:
            i, value = repeat
            raise LatinSquareViolation(f'column {j} repeats {value} at row {i}', (i, j))

def _check_associative(array):
    n = array.shape[0]
    block = max(1, _CUBE_CELLS // (n * n))
    for start in range(0, n, block):
        rows = array[start:start + block]
        left = array[rows]          # (i*j)*k
        right = rows[:, array]      # i*(j*k)
        bad = np.argwhere(left != right)
        if len(bad):
            i, j, k = (int(v) for v in bad[0])
            i += start
            raise AssociativityViolation(
                f'({i}*{j})*{k} differs from {i}*({j}*{k})', (i, j, k))
