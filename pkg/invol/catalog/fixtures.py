'''Semidirect products committed as explicit action data.

Each fixture is N x| C_k where the generator of C_k acts on N by the listed
permutation of N's indices (see the numbering in group.constructors).
'''
from ..group.constructors import cyclic, cyclic_action, direct_product, elementary_abelian, semidirect_product
from typing import Callable, NamedTuple, Tuple

class ActionFixture(NamedTuple):
    name: str
    base: Callable
    acting_order: int
    generator: Tuple[int, ...]

    @property
    def order(self):
        return len(self.generator) * self.acting_order

    def parts(self):
        n = self.base()
        q = cyclic(self.acting_order)
        return n, q, cyclic_action(n, self.acting_order, self.generator)

    def build(self):
        return semidirect_product(*self.parts(), name=self.name)

def _c4xc2():
    return direct_product(cyclic(4), cyclic(2))

CATALOG_FIXTURES = (
    # x -> y -> xy -> x
    ActionFixture('A4', lambda: elementary_abelian(2), 3, (0, 2, 3, 1)),
    # a -> a^-1
    ActionFixture('C4:C4', lambda: cyclic(4), 4, (0, 3, 2, 1)),
    # x <-> y
    ActionFixture('C2^2:C4', lambda: elementary_abelian(2), 4, (0, 2, 1, 3)),
    # a -> a^5
    ActionFixture('M16', lambda: cyclic(8), 2, (0, 5, 2, 7, 4, 1, 6, 3)),
    # a -> a^3
    ActionFixture('SD16', lambda: cyclic(8), 2, (0, 3, 6, 1, 4, 7, 2, 5)),
    # a -> a, c -> a^2 c on C4 x C2
    ActionFixture('C4oD8', _c4xc2, 2, (0, 5, 2, 7, 4, 1, 6, 3)),
)

CHARACTERIZATION_FIXTURES = CATALOG_FIXTURES + (
    ActionFixture('C4:C2', lambda: cyclic(4), 2, (0, 3, 2, 1)),
    ActionFixture('C3:C2', lambda: cyclic(3), 2, (0, 2, 1)),
    ActionFixture('C5:C2', lambda: cyclic(5), 2, (0, 4, 3, 2, 1)),
    ActionFixture('C3xC2', lambda: cyclic(3), 2, (0, 1, 2)),
    ActionFixture('C4xC2xC2', _c4xc2, 2, (0, 1, 2, 3, 4, 5, 6, 7)),
    ActionFixture('C2^2xC3', lambda: elementary_abelian(2), 3, (0, 1, 2, 3)),
)
