from ..errors import OrderCapExceeded
from .Group import validate
from .homomorphisms import isomorphisms

AUTOMORPHISM_ORDER_CAP = 16
AUTOMORPHISM_GROUP_CAP = 512

def automorphisms(group, cap=AUTOMORPHISM_ORDER_CAP):
    '''All automorphisms as permutations of the element indices, identity first.'''
    if group.order > cap:
        raise OrderCapExceeded(f'automorphism search is capped at order {cap}, {group.name} has order {group.order}')
    return sorted(h.images for h in isomorphisms(group, group))

def automorphism_group(group, cap=AUTOMORPHISM_ORDER_CAP, group_cap=AUTOMORPHISM_GROUP_CAP):
    '''Aut(G) as a validated group, with the permutation behind each index.

    Index i of the returned group is perms[i]; the product a*b is the
    composition a(b(x)).
    '''
    perms = automorphisms(group, cap)
    if len(perms) > group_cap:
        raise OrderCapExceeded(f'Aut({group.name}) has {len(perms)} elements, the table is capped at {group_cap}')
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(a[v] for v in b)] for b in perms] for a in perms]
    return validate(table, f'Aut({group.name})'), perms

def inverted_element_count(group, beta):
    '''|{g : beta(g) = g^-1}|'''
    inverses = group.inverses
    return sum(1 for g in range(group.order) if beta[g] == inverses[g])
