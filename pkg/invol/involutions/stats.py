from ..group import OrderFactorization
from dataclasses import dataclass
from fractions import Fraction

@dataclass(frozen=True)
class InvolutionStats:
    order: int
    j_count: int
    alpha: Fraction
    factorization: OrderFactorization

    def __post_init__(self):
        if not 1 <= self.j_count <= self.order:
            raise ValueError(f'involution count {self.j_count} outside 1..{self.order}')
        if self.alpha != Fraction(self.j_count, self.order):
            raise ValueError('alpha must equal j/|G|')

def involution_set(group):
    '''J(G): every x with x*x = 1, the identity included.'''
    rows = group.rows
    return group.mask(x for x in range(group.order) if rows[x][x] == 0)

def stats(group):
    j = len(involution_set(group))
    return InvolutionStats(group.order, j, Fraction(j, group.order), group.factorize_order())

def dihedral_j_closed_form(n):
    '''j(D_2n)'''
    if n < 1:
        raise ValueError(f'n must be positive, got {n}')
    return n + 1 if n % 2 else n + 2

def dihedral_alpha_closed_form(n):
    '''alpha(D_2n) = 1/2 + 1/2n for odd n, 1/2 + 1/n for even n.'''
    if n < 1:
        raise ValueError(f'n must be positive, got {n}')
    return Fraction(1, 2) + (Fraction(1, 2 * n) if n % 2 else Fraction(1, n))
