'''The counting inequalities, each evaluated exactly on a concrete group.'''
from ..errors import InvalidOrder, NotCentral
from ..group.constructors import semidirect_product
from ..group.structure import center, normalizer, quotient, require_subgroup
from ..group.sylow import sylow2
from .stats import involution_set, stats
from dataclasses import dataclass
from fractions import Fraction

@dataclass(frozen=True)
class BoundCheck:
    '''lhs <= rhs, kept as exact fractions so tight cases can be reported.'''
    label: str
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self):
        return self.lhs <= self.rhs

    @property
    def equality(self):
        return self.lhs == self.rhs

    def __str__(self):
        relation = '=' if self.equality else '<=' if self.holds else '>'
        return f'{self.label}: {self.lhs} {relation} {self.rhs}'

def _check(label, lhs, rhs):
    return BoundCheck(label, Fraction(lhs), Fraction(rhs))

def check_central_bound(group, subset):
    '''j(G) <= j(G/H) j(H) and alpha(G) <= alpha(G/H) alpha(H) for central H.'''
    require_subgroup(group, subset)
    if not subset.issubset(center(group)):
        raise NotCentral(f'{subset} is not central in {group.name}')
    factor, _ = quotient(group, subset)
    j_h = len(involution_set(group) & subset)
    g, q = stats(group), stats(factor)
    return (
        _check('j(G) <= j(G/H) j(H)', g.j_count, q.j_count * j_h),
        _check('alpha(G) <= alpha(G/H) alpha(H)', g.alpha, q.alpha * Fraction(j_h, len(subset))),
    )

def check_normal_bound(group, subset):
    '''j(G) <= |H| j(G/H) and alpha(G) <= alpha(G/H) for normal H.'''
    factor, _ = quotient(group, subset)
    g, q = stats(group), stats(factor)
    return (
        _check('j(G) <= |H| j(G/H)', g.j_count, len(subset) * q.j_count),
        _check('alpha(G) <= alpha(G/H)', g.alpha, q.alpha),
    )

def check_sylow_bound(group):
    '''alpha(G) <= |S|/|N_G(S)|'''
    s = sylow2(group)
    n = normalizer(group, s)
    return _check('alpha(G) <= |S|/|N|', stats(group).alpha, Fraction(len(s), len(n)))

def _even_factorization(group):
    factorization = group.factorize_order()
    if factorization.two_exponent < 1:
        raise InvalidOrder(f'{group.name} has odd order {group.order}')
    return factorization

def check_edmonds_bound(group):
    '''j(G) <= 2^(n-1) (m+1) for |G| = 2^n m, m odd, n >= 1.'''
    n, m = _even_factorization(group)
    return _check('j(G) <= 2^(n-1)(m+1)', stats(group).j_count, (1 << (n - 1)) * (m + 1))

def check_edmonds_proportion_bound(group):
    '''alpha(G) <= (m+1)/2m'''
    _, m = _even_factorization(group)
    return _check('alpha(G) <= (m+1)/2m', stats(group).alpha, Fraction(m + 1, 2 * m))

def check_two_thirds_bound(group):
    '''alpha(G) <= 2/3 whenever the odd part m exceeds 1.'''
    _, m = _even_factorization(group)
    if m == 1:
        raise InvalidOrder(f'{group.name} is a 2-group')
    return _check('alpha(G) <= 2/3', stats(group).alpha, Fraction(2, 3))

def _embedded(n, q):
    '''Indices of N and Q inside the semidirect product (pairing n*|Q| + q).'''
    return [x * q.order for x in range(n.order)], list(range(q.order))

def check_semidirect_characterization(n, q, action):
    '''J(N x| Q) computed from the table equals {nq : q^2 = 1, qnq = n^-1}.'''
    g = semidirect_product(n, q, action)
    direct = set(involution_set(g))
    in_n, in_q = _embedded(n, q)
    rows = g.rows
    characterized = set()
    for qi in in_q:
        if rows[qi][qi] != 0:
            continue
        for ni in in_n:
            if rows[rows[qi][ni]][qi] == g.inverse(ni):
                characterized.add(rows[ni][qi])
    return direct == characterized

def coset_involution_counts(n, q, action):
    '''For each q: (q, involutions in the coset Nq, elements of N inverted by q).

    The two counts agree for every q with q^2 = 1, and both are 0 otherwise.
    '''
    g = semidirect_product(n, q, action)
    involutions = involution_set(g)
    counts = []
    for qi in range(q.order):
        in_coset = sum(1 for ni in range(n.order) if ni * q.order + qi in involutions)
        inverted = 0
        if q.multiply(qi, qi) == 0:
            inverted = sum(1 for ni in range(n.order) if action.images[qi][ni] == n.inverse(ni))
        counts.append((qi, in_coset, inverted))
    return counts
