from .constructors import dihedral, direct_product, elementary_abelian
from .homomorphisms import is_isomorphic
from functools import lru_cache

def is_elementary_abelian_2(group):
    rows = group.rows
    return all(rows[x][x] == 0 for x in range(group.order))

@lru_cache(maxsize=None)
def _d8_times_ea(k):
    return direct_product(dihedral(8), elementary_abelian(k))

def d8_ea_witness(group):
    '''(k, isomorphism onto D8 x C2^k), or None.

    Only groups of order 2^n with n >= 3 are searched.
    '''
    n, m = group.factorize_order()
    if m != 1 or n < 3:
        return None
    k = n - 3
    witness = is_isomorphic(group, _d8_times_ea(k))
    return None if witness is None else (k, witness)

def recognize_d8_ea(group):
    '''k with G isomorphic to D8 x C2^k, or None.'''
    found = d8_ea_witness(group)
    return None if found is None else found[0]
