'''The groups the checks run over: the catalog and the parameterised families.'''
from ..catalog import constructed_catalog
from ..group.constructors import abelian_groups, cyclic, dihedral, direct_product, elementary_abelian, \
    generalized_dihedral
from dataclasses import dataclass, field
from typing import Dict, List

FAMILY_MAX_ORDER = 64
PRODUCT_PAIR_MAX_ORDER = 64
DIHEDRAL_MAX_N = 64
# generalised dihedral groups are built over abelian groups up to this order
DIHEDRAL_BASE_MAX_ORDER = 32

@dataclass(frozen=True)
class Member:
    label: str
    group: object
    source: str

def _power_name(k):
    return 'C1' if k == 0 else 'C2' if k == 1 else f'C2^{k}'

def dihedral_family(max_n):
    return [Member(f'D{2 * n}', dihedral(2 * n), 'dihedral') for n in range(1, max_n + 1)]

def c4_family(max_order=FAMILY_MAX_ORDER):
    '''C4 x C2^(n-2) for n >= 2.'''
    members = []
    k = 0
    while 4 << k <= max_order:
        name = 'C4' if k == 0 else f'C4x{_power_name(k)}'
        members.append(Member(name, direct_product(cyclic(4), elementary_abelian(k), name), 'c4-by-ea'))
        k += 1
    return members

def d8_family(max_order=FAMILY_MAX_ORDER):
    '''D8 x C2^k'''
    members = []
    k = 0
    while 8 << k <= max_order:
        name = 'D8' if k == 0 else f'D8x{_power_name(k)}'
        members.append(Member(name, direct_product(dihedral(8), elementary_abelian(k), name), 'd8-by-ea'))
        k += 1
    return members

def generalized_dihedral_family(max_base_order=DIHEDRAL_BASE_MAX_ORDER):
    members = []
    for order in range(1, max_base_order + 1):
        for a in abelian_groups(order):
            group = generalized_dihedral(a)
            members.append(Member(group.name, group, 'generalized-dihedral'))
    return members

def dihedral_type_family(max_order=FAMILY_MAX_ORDER):
    '''C2^(n-1) x Dih(A) for abelian A of odd order m > 1, n >= 1.'''
    members = []
    for m in range(3, max_order // 2 + 1, 2):
        for a in abelian_groups(m):
            base = generalized_dihedral(a)
            n = 1
            while (m << n) <= max_order:
                name = base.name if n == 1 else f'{_power_name(n - 1)}x{base.name}'
                members.append(Member(name, direct_product(elementary_abelian(n - 1), base, name), 'dihedral-type'))
                n += 1
    return members

@dataclass
class Population:
    max_order: int
    dihedral_max_n: int
    enumerate_up_to: int = 0
    catalog: List = field(default_factory=list)
    families: Dict[str, List[Member]] = field(default_factory=dict)

    @property
    def catalog_members(self):
        return [Member(entry.name, entry.group, 'catalog') for entry in self.catalog]

    @property
    def family_members(self):
        return [member for members in self.families.values() for member in members]

    @property
    def everything(self):
        return self.catalog_members + self.family_members

    def describe_catalog(self):
        return f'catalog orders 1..{self.max_order} ({len(self.catalog)} groups)'

    def describe_everything(self):
        return (f'{self.describe_catalog()} + families up to order {FAMILY_MAX_ORDER} '
                f'and D_2n for n <= {self.dihedral_max_n} ({len(self.family_members)} groups)')

def build_population(max_order, dihedral_max_n=DIHEDRAL_MAX_N, enumerate_up_to=0, progress=None):
    population = Population(max_order, dihedral_max_n, enumerate_up_to, constructed_catalog(max_order, progress))
    population.families = {
        'dihedral': dihedral_family(dihedral_max_n),
        'c4-by-ea': c4_family(),
        'd8-by-ea': d8_family(),
        'generalized-dihedral': generalized_dihedral_family(),
        'dihedral-type': dihedral_type_family(),
    }
    if progress:
        progress(f'population: {len(population.catalog)} catalog groups, '
                 f'{len(population.family_members)} family groups')
    return population
