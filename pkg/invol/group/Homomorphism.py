from .Group import Group
from .SubsetMask import SubsetMask
from dataclasses import dataclass
from typing import Tuple
import numpy as np

@dataclass(frozen=True)
class Homomorphism:
    '''A map between groups given by the image of every source index.'''
    source: Group
    target: Group
    images: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'images', tuple(int(v) for v in self.images))
        if len(self.images) != self.source.order:
            raise ValueError('one image per source element is required')

    def __call__(self, x):
        return self.images[x]

    def is_homomorphism(self):
        '''Full scan of images[a*b] == images[a]*images[b].'''
        if self.images[0] != 0:
            return False
        images = np.array(self.images)
        target = self.target.table
        return bool(np.array_equal(images[self.source.table], target[images[:, None], images[None, :]]))

    def kernel(self):
        return SubsetMask.from_indices(
            self.source.order, (x for x, y in enumerate(self.images) if y == 0))

    def image(self):
        return SubsetMask.from_indices(self.target.order, self.images)

    @property
    def is_injective(self):
        return len(set(self.images)) == self.source.order

    @property
    def is_surjective(self):
        return len(set(self.images)) == self.target.order

    @property
    def is_bijective(self):
        return self.is_injective and self.is_surjective
