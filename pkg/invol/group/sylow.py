from ..errors import SylowExtensionStalled
from .structure import generated_subgroup, normalizer
import random

def _is_two_power(n):
    return n & (n - 1) == 0

def sylow2(group, seed=None):
    '''A Sylow 2-subgroup.

    Starts from <x> for an element x of largest 2-power order and, while the
    subgroup P is too small, adjoins some g in N(P) - P with g^2 in P. Such
    g exists whenever P is not Sylow. A seed shuffles the scan order, which
    can pick a different (conjugate) subgroup.
    '''
    target = group.factorize_order().two_part
    if target == 1:
        return group.identity_mask()
    elements = list(range(group.order))
    if seed is not None:
        random.Random(seed).shuffle(elements)
    orders = group.element_orders
    start = max((x for x in elements if _is_two_power(orders[x])), key=lambda x: orders[x])
    p = generated_subgroup(group, [start])
    rows = group.rows
    while len(p) < target:
        n = normalizer(group, p)
        for g in elements:
            if g in n and g not in p and rows[g][g] in p:
                p = generated_subgroup(group, list(p) + [g])
                break
        else:
            raise SylowExtensionStalled(f'could not extend a 2-subgroup of order {len(p)} in {group.name}')
    return p
