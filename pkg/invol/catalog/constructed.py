from ..errors import OrderCapExceeded
from ..group.constructors import abelian_groups, dicyclic, dihedral, direct_product, generalized_dihedral, \
    quaternion8
from .CatalogEntry import CatalogEntry
from .dedupe import find_isomorphic
from .fixtures import CATALOG_FIXTURES

MAX_CATALOG_ORDER = 16

def _candidates(order, smaller):
    '''Constructions of the given order, in name preference order.

    Abelian groups come first, then dihedral, quaternion and dicyclic
    groups, nonabelian-by-abelian direct products, generalised dihedral
    groups and finally the committed semidirect fixtures. The first
    construction of each isomorphism class names it.
    '''
    yield from abelian_groups(order)
    if order % 2 == 0 and order >= 4:
        yield dihedral(order)
    if order == 8:
        yield quaternion8()
    if order % 4 == 0 and order >= 12:
        yield dicyclic(order)
    for h in smaller:
        if h.group.is_abelian or order % h.order:
            continue
        for k in smaller:
            if k.order > 1 and k.group.is_abelian and h.order * k.order == order:
                yield direct_product(h.group, k.group)
    if order % 2 == 0:
        for a in abelian_groups(order // 2):
            yield generalized_dihedral(a)
    for fixture in CATALOG_FIXTURES:
        if fixture.order == order:
            yield fixture.build()

def constructed_catalog(max_order=MAX_CATALOG_ORDER, progress=None):
    '''Every group of order <= max_order up to isomorphism, built from constructions.

    Orders up to 8 are cross-checked elsewhere against brute-force
    enumeration; above that the list is complete relative to the
    constructions tried here.
    '''
    if max_order > MAX_CATALOG_ORDER:
        raise OrderCapExceeded(f'the catalog stops at order {MAX_CATALOG_ORDER}, got {max_order}')
    entries = []
    for order in range(1, max_order + 1):
        found = []
        for group in _candidates(order, entries):
            if find_isomorphic(group, found) is None:
                found.append(CatalogEntry.of(group))
        entries.extend(found)
        if progress:
            progress(f'order {order}: {", ".join(e.name for e in found)}')
    return entries

def catalog_by_order(entries):
    by_order = {}
    for entry in entries:
        by_order.setdefault(entry.order, []).append(entry)
    return by_order
