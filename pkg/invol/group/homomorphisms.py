'''Homomorphism search by generator images, and the isomorphism test built on it.

A generating set of the source is chosen greedily. Each generator in turn
is sent to a candidate image; after every choice the partial map is
extended over the subgroup generated so far, checking
phi(x g) = phi(x) phi(g) for every reached x and generator g, and the
branch is dropped on the first conflict.
'''
from .Homomorphism import Homomorphism
from .structure import center, class_sizes, closure
from collections import Counter
from functools import lru_cache

@lru_cache(maxsize=4096)
def generating_set(group):
    '''Greedy generating set, taking elements of largest order first.'''
    orders = group.element_orders
    generators = []
    reached = {0}
    for x in sorted(range(group.order), key=lambda x: (-orders[x], x)):
        if x not in reached:
            generators.append(x)
            reached = closure(group, generators)
    return tuple(generators)

@lru_cache(maxsize=4096)
def signature(group):
    '''Isomorphism invariants: order, j, element orders, centre order, class sizes.'''
    rows = group.rows
    involutions = sum(1 for x in range(group.order) if rows[x][x] == 0)
    return (
        group.order,
        involutions,
        tuple(sorted(Counter(group.element_orders).items())),
        len(center(group)),
        tuple(sorted(Counter(zip(group.element_orders, class_sizes(group))).items())),
    )

@lru_cache(maxsize=4096)
def _profiles(group):
    return tuple(zip(group.element_orders, class_sizes(group)))

def _extend(source, target, generators, images):
    '''Images of the homomorphism on <generators>, -1 outside it; None on conflict.'''
    srows, trows = source.rows, target.rows
    mapping = [-1] * source.order
    mapping[0] = 0
    queue = [0]
    pairs = list(zip(generators, images))
    for x in queue:
        fx = trows[mapping[x]]
        sx = srows[x]
        for g, h in pairs:
            y = sx[g]
            fy = fx[h]
            if mapping[y] < 0:
                mapping[y] = fy
                queue.append(y)
            elif mapping[y] != fy:
                return None
    return mapping

def _injective(mapping):
    defined = [v for v in mapping if v >= 0]
    return len(defined) == len(set(defined))

def homomorphisms(source, target, injective=False, surjective=False):
    '''Yield every homomorphism source -> target, optionally only injective or surjective ones.'''
    if injective and source.order > target.order:
        return
    if surjective and source.order < target.order:
        return
    generators = generating_set(source)
    if injective and source.order == target.order:
        # a bijection also preserves class sizes
        profiles = _profiles(target)
        wanted = _profiles(source)
        candidates = [[t for t in range(target.order) if profiles[t] == wanted[g]] for g in generators]
    elif injective:
        orders = target.element_orders
        candidates = [[t for t in range(target.order) if orders[t] == source.element_orders[g]] for g in generators]
    else:
        orders = target.element_orders
        candidates = [
            [t for t in range(target.order) if source.element_orders[g] % orders[t] == 0]
            for g in generators]

    def search(depth, images):
        if depth == len(generators):
            mapping = _extend(source, target, generators, images)
            result = Homomorphism(source, target, mapping)
            if surjective and not result.is_surjective:
                return
            yield result
            return
        for candidate in candidates[depth]:
            chosen = images + [candidate]
            mapping = _extend(source, target, generators[:depth + 1], chosen)
            if mapping is None or (injective and not _injective(mapping)):
                continue
            yield from search(depth + 1, chosen)

    yield from search(0, [])

def isomorphisms(source, target):
    if signature(source) != signature(target):
        return iter(())
    return homomorphisms(source, target, injective=True)

def is_isomorphic(source, target):
    '''A witness isomorphism source -> target, or None.'''
    return next(isomorphisms(source, target), None)

def surjections(source, target):
    return homomorphisms(source, target, surjective=True)
