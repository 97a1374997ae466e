'''Subgroups, centres, centralisers, conjugacy, normality and quotients.'''
from ..errors import NotASubgroup, NotNormal
from .Group import validate
from .Homomorphism import Homomorphism
from .SubsetMask import SubsetMask
import numpy as np

def closure(group, generators):
    '''Set of all products of the generators (the subgroup they generate).'''
    rows = group.rows
    generators = [g for g in dict.fromkeys(generators) if g != 0]
    found = {0}
    queue = [0]
    for x in queue:
        row = rows[x]
        for g in generators:
            y = row[g]
            if y not in found:
                found.add(y)
                queue.append(y)
    return found

def generated_subgroup(group, generators):
    generators = list(generators)
    for g in generators:
        if not 0 <= g < group.order:
            raise ValueError(f'{g} is not an element of {group.name}')
    return group.mask(closure(group, generators))

def is_subgroup(group, subset):
    if 0 not in subset:
        return False
    rows = group.rows
    members = subset.indices
    for a in members:
        row = rows[a]
        if group.inverse(a) not in subset:
            return False
        for b in members:
            if row[b] not in subset:
                return False
    return True

def require_subgroup(group, subset):
    if subset.parent_order != group.order or not is_subgroup(group, subset):
        raise NotASubgroup(f'{subset} is not a subgroup of {group.name}')

def center(group):
    table = group.table
    return group.mask(np.flatnonzero((table == table.T).all(axis=1)).tolist())

def centralizer(group, x):
    table = group.table
    return group.mask(np.flatnonzero(table[:, x] == table[x, :]).tolist())

def centralizer_orders(group):
    '''|C(x)| for every element x.'''
    table = group.table
    return tuple((table == table.T).sum(axis=0).tolist())

def class_sizes(group):
    '''|cl(x)| for every element x.'''
    return tuple(group.order // c for c in centralizer_orders(group))

def conjugacy_class(group, x):
    return group.mask(group.conjugate(x, g) for g in range(group.order))

def conjugacy_classes(group):
    classes = []
    seen = 0
    for x in range(group.order):
        if not seen >> x & 1:
            cls = conjugacy_class(group, x)
            seen |= cls.bits
            classes.append(cls)
    return classes

def conjugate_subset(group, subset, g):
    '''g H g^-1'''
    return group.mask(group.conjugate(h, g) for h in subset)

def is_normal(group, subset):
    return all(conjugate_subset(group, subset, g) == subset for g in range(group.order))

def normalizer(group, subset):
    return group.mask(g for g in range(group.order) if conjugate_subset(group, subset, g) == subset)

def normal_closure(group, x):
    return generated_subgroup(group, conjugacy_class(group, x))

def _joins(group, pieces):
    '''Every subgroup generated by a union of the given (normal) subgroups.'''
    trivial = group.identity_mask()
    found = {trivial}
    frontier = [trivial]
    for current in frontier:
        for piece in pieces:
            if piece.issubset(current):
                continue
            joined = generated_subgroup(group, (current | piece).indices)
            if joined not in found:
                found.add(joined)
                frontier.append(joined)
    return sorted(found, key=lambda mask: (len(mask), mask.bits))

def normal_subgroups(group):
    '''All normal subgroups, found as joins of normal closures of single elements.'''
    closures = {normal_closure(group, cls.indices[0]) for cls in conjugacy_classes(group)}
    return _joins(group, sorted(closures, key=lambda mask: (len(mask), mask.bits)))

def central_subgroups(group):
    '''All subgroups of the centre.'''
    cyclics = {generated_subgroup(group, [z]) for z in center(group)}
    return _joins(group, sorted(cyclics, key=lambda mask: (len(mask), mask.bits)))

def cosets(group, subset):
    '''Left cosets xH, each listed once, ordered by smallest element.'''
    rows = group.rows
    result = []
    seen = 0
    for x in range(group.order):
        if not seen >> x & 1:
            coset = group.mask(rows[x][h] for h in subset)
            seen |= coset.bits
            result.append(coset)
    return result

def quotient(group, subset, name=None):
    '''G/N on coset representatives with the canonical projection.

    Each coset is represented by its smallest index, so the identity coset
    comes first and the table is deterministic.
    '''
    require_subgroup(group, subset)
    if not is_normal(group, subset):
        raise NotNormal(f'{subset} is not normal in {group.name}')
    parts = cosets(group, subset)
    representatives = [coset.indices[0] for coset in parts]
    coset_of = [0] * group.order
    for index, coset in enumerate(parts):
        for x in coset:
            coset_of[x] = index
    rows = group.rows
    table = [[coset_of[rows[a][b]] for b in representatives] for a in representatives]
    factor = validate(table, name or f'{group.name}/N{len(subset)}')
    return factor, Homomorphism(group, factor, tuple(coset_of))

def subgroup_as_group(group, subset, name=None):
    '''Re-index a subgroup as a group of its own, keeping the identity at 0.'''
    require_subgroup(group, subset)
    members = subset.indices
    position = {x: i for i, x in enumerate(members)}
    rows = group.rows
    table = [[position[rows[a][b]] for b in members] for a in members]
    return validate(table, name or f'{group.name}[{len(members)}]')
