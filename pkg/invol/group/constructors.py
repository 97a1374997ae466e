'''Constructors for the group families and for direct and semidirect products.

Element numbering is fixed so that indices are reproducible:
  - cyclic(n): index i is g^i.
  - dihedral(2n): indices 0..n-1 are the rotations r^i, index n+i is r^i s.
  - dicyclic(4m): index i + 2m*e is a^i x^e.
  - elementary_abelian(k): indices are bit vectors, the product is XOR.
  - products: the pair (h, k) has index h*|K| + k.
'''
from ..errors import InvalidOrder, NonAbelianBase, NotAHomomorphism, NotAnAutomorphism
from .Group import validate
from dataclasses import dataclass
from functools import reduce
from itertools import product
from sympy import factorint
from sympy.utilities.iterables import partitions
from typing import Tuple
import numpy as np

@dataclass(frozen=True)
class AutomorphismAction:
    '''An action of Q on N given extensionally: images[q] permutes N's indices.'''
    acting_order: int
    images: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, 'images', tuple(tuple(int(v) for v in p) for p in self.images))

def cyclic(n):
    if n < 1:
        raise InvalidOrder(f'cyclic group order must be positive, got {n}')
    index = np.arange(n)
    return validate(np.add.outer(index, index) % n, f'C{n}')

def dihedral(two_n):
    if two_n < 2 or two_n % 2:
        raise InvalidOrder(f'dihedral group order must be even and at least 2, got {two_n}')
    n = two_n // 2
    rotation = np.arange(two_n) % n
    flipped = np.arange(two_n) // n
    sign = 1 - 2 * flipped
    # (r^a s^e)(r^b s^f) = r^(a + (-1)^e b) s^(e + f)
    a = (rotation[:, None] + sign[:, None] * rotation[None, :]) % n
    e = flipped[:, None] ^ flipped[None, :]
    return validate(a + n * e, f'D{two_n}')

def elementary_abelian(k):
    if k < 0:
        raise InvalidOrder(f'rank must be nonnegative, got {k}')
    index = np.arange(1 << k)
    name = 'C1' if k == 0 else 'C2' if k == 1 else f'C2^{k}'
    return validate(np.bitwise_xor.outer(index, index), name)

def dicyclic(four_m):
    '''<a, x | a^2m = 1, x^2 = a^m, x a x^-1 = a^-1>, of order 4m.'''
    if four_m < 4 or four_m % 4:
        raise InvalidOrder(f'dicyclic group order must be a positive multiple of 4, got {four_m}')
    m = four_m // 4
    two_m = 2 * m
    power = np.arange(four_m) % two_m
    flipped = np.arange(four_m) // two_m
    sign = 1 - 2 * flipped
    both = flipped[:, None] & flipped[None, :]
    a = (power[:, None] + sign[:, None] * power[None, :] + m * both) % two_m
    e = flipped[:, None] ^ flipped[None, :]
    return validate(a + two_m * e, f'Dic{four_m}')

def quaternion8():
    return dicyclic(8).renamed('Q8')

def direct_product(h, k, name=None):
    th, tk = h.table, k.table
    nk = k.order
    table = th[:, None, :, None] * nk + tk[None, :, None, :]
    size = h.order * nk
    return validate(table.reshape(size, size), name or f'{h.name}x{k.name}')

def check_action(n, q, action):
    '''Raise unless action is a homomorphism from q into Aut(n).'''
    if action.acting_order != q.order or len(action.images) != q.order:
        raise NotAHomomorphism(
            f'action is defined on {len(action.images)} elements, acting group has {q.order}')
    identity = tuple(range(n.order))
    tn = n.table
    for index, image in enumerate(action.images):
        if sorted(image) != list(identity):
            raise NotAnAutomorphism(f'image of {index} is not a permutation of {n.name}')
        p = np.array(image)
        if not np.array_equal(p[tn], tn[p[:, None], p[None, :]]):
            raise NotAnAutomorphism(f'image of {index} does not preserve the table of {n.name}')
    if action.images[0] != identity:
        raise NotAHomomorphism('the identity must act trivially')
    images = np.array(action.images)
    composed = images[np.arange(q.order)[:, None, None], images[None, :, :]]
    if not np.array_equal(images[q.table], composed):
        raise NotAHomomorphism(f'action does not respect the multiplication of {q.name}')

def semidirect_product(n, q, action, name=None):
    '''N x| Q with (n1, q1)(n2, q2) = (n1 q1(n2), q1 q2).'''
    check_action(n, q, action)
    nn, nq = n.order, q.order
    images = np.array(action.images)
    left = np.arange(nn)[:, None, None, None]
    moved = images[None, :, :, None]
    new_n = n.table[left, moved]
    new_q = q.table[None, :, None, :]
    table = new_n * nq + new_q
    size = nn * nq
    return validate(table.reshape(size, size), name or f'{n.name}:{q.name}')

def trivial_action(n, q):
    identity = tuple(range(n.order))
    return AutomorphismAction(q.order, (identity,) * q.order)

def cyclic_action(n, acting_order, generator):
    '''Action of C_k (numbered g^i) where g acts on n by the permutation generator.'''
    images = [tuple(range(n.order))]
    for _ in range(acting_order - 1):
        images.append(tuple(generator[v] for v in images[-1]))
    return AutomorphismAction(acting_order, tuple(images))

def inversion_action(n):
    '''C2 acting on n by inversion; an automorphism only when n is abelian.'''
    return cyclic_action(n, 2, n.inverses)

def generalized_dihedral(a):
    if not a.is_abelian:
        raise NonAbelianBase(f'{a.name} is not abelian')
    return semidirect_product(a, cyclic(2), inversion_action(a), f'Dih({a.name})')

def abelian_invariant_factors(order):
    '''Invariant factor lists of every abelian group of the given order, largest first.'''
    per_prime = []
    for p, e in sorted(factorint(order).items()):
        choices = []
        for part in partitions(e):
            exponents = sorted((k for k, count in part.items() for _ in range(count)), reverse=True)
            choices.append((p, exponents))
        per_prime.append(choices)
    result = []
    for combination in product(*per_prime):
        length = max((len(exponents) for _, exponents in combination), default=0)
        factors = []
        for i in range(length):
            factors.append(reduce(
                lambda acc, pe: acc * pe[0] ** (pe[1][i] if i < len(pe[1]) else 0),
                combination, 1))
        result.append(tuple(factors))
    return sorted(result, reverse=True)

def abelian_name(factors):
    parts = [f'C{d}' for d in factors if d != 2]
    twos = sum(1 for d in factors if d == 2)
    if twos:
        parts.append('C2' if twos == 1 else f'C2^{twos}')
    return 'x'.join(parts) or 'C1'

def abelian_group(factors):
    '''Direct product of cyclic groups with the given orders.'''
    pieces = [cyclic(d) for d in factors if d != 2]
    twos = sum(1 for d in factors if d == 2)
    if twos:
        pieces.append(elementary_abelian(twos))
    if not pieces:
        return cyclic(1)
    return reduce(direct_product, pieces).renamed(abelian_name(factors))

def abelian_groups(order):
    return [abelian_group(factors) for factors in abelian_invariant_factors(order)]
