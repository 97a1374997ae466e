from ..group.homomorphisms import is_isomorphic

def find_isomorphic(group, entries):
    '''First entry whose group is isomorphic to group, or None.'''
    for entry in entries:
        if entry.order == group.order and is_isomorphic(group, entry.group) is not None:
            return entry
    return None

def dedupe(entries):
    '''Keep the first entry of each isomorphism class, preserving order.'''
    kept = []
    for entry in entries:
        if find_isomorphic(entry.group, kept) is None:
            kept.append(entry)
    return kept
