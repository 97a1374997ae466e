from dataclasses import dataclass

@dataclass(frozen=True)
class SubsetMask:
    '''A subset of a group's element indices, stored as an integer bitset.

    Bit i is set when element i belongs to the subset. Masks stand for
    involution sets, subgroups, cosets and conjugacy classes alike.
    '''
    parent_order: int
    bits: int

    def __post_init__(self):
        if self.parent_order < 1:
            raise ValueError('parent order must be positive')
        if self.bits < 0 or self.bits >> self.parent_order:
            raise ValueError(f'bits exceed parent order {self.parent_order}')

    @classmethod
    def from_indices(cls, parent_order, indices):
        bits = 0
        for index in indices:
            if not 0 <= index < parent_order:
                raise ValueError(f'index {index} out of range for order {parent_order}')
            bits |= 1 << index
        return cls(parent_order, bits)

    @classmethod
    def full(cls, parent_order):
        return cls(parent_order, (1 << parent_order) - 1)

    @classmethod
    def identity(cls, parent_order):
        return cls(parent_order, 1)

    def __contains__(self, index):
        return 0 <= index < self.parent_order and bool(self.bits >> index & 1)

    def __iter__(self):
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self):
        return bin(self.bits).count('1')

    def __repr__(self):
        return f'SubsetMask({self.parent_order}, {sorted(self)})'

    def _same_parent(self, other):
        if self.parent_order != other.parent_order:
            raise ValueError('masks belong to groups of different orders')

    def __or__(self, other):
        self._same_parent(other)
        return SubsetMask(self.parent_order, self.bits | other.bits)

    def __and__(self, other):
        self._same_parent(other)
        return SubsetMask(self.parent_order, self.bits & other.bits)

    def __sub__(self, other):
        self._same_parent(other)
        return SubsetMask(self.parent_order, self.bits & ~other.bits)

    def issubset(self, other):
        self._same_parent(other)
        return self.bits & ~other.bits == 0

    @property
    def indices(self):
        return tuple(self)

    @property
    def is_full(self):
        return self.bits == (1 << self.parent_order) - 1
