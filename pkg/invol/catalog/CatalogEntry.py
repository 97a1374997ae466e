from ..group import Group
from dataclasses import dataclass
from enum import Enum

class Provenance(Enum):
    CONSTRUCTED = 'constructed'
    ENUMERATED = 'enumerated'

@dataclass(frozen=True)
class CatalogEntry:
    group: Group
    order: int
    name: str
    provenance: Provenance

    @classmethod
    def of(cls, group, provenance=Provenance.CONSTRUCTED):
        return cls(group, group.order, group.name, provenance)
