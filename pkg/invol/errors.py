'''Error taxonomy shared by the library and the command line.'''

class InvolError(Exception):
    pass

class GroupError(InvolError, ValueError):
    '''A Cayley table that does not describe a group.'''

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position

class TableShapeError(GroupError):
    pass

class IdentityViolation(GroupError):
    pass

class LatinSquareViolation(GroupError):
    pass

class AssociativityViolation(GroupError):
    pass

class TableFormatError(GroupError):
    pass

class ConstructionError(InvolError, ValueError):
    pass

class InvalidOrder(ConstructionError):
    pass

class NotAnAutomorphism(ConstructionError):
    pass

class NotAHomomorphism(ConstructionError):
    pass

class NonAbelianBase(ConstructionError):
    pass

class StructureError(InvolError, ValueError):
    pass

class NotASubgroup(StructureError):
    pass

class NotNormal(StructureError):
    pass

class NotCentral(StructureError):
    pass

class OrderCapExceeded(StructureError):
    pass

class SylowExtensionStalled(InvolError, RuntimeError):
    pass

class SpecError(InvolError, ValueError):
    pass

class SpecSyntaxError(SpecError):

    def __init__(self, message, position):
        super().__init__(f'{message} at position {position}')
        self.position = position

class SpecSemanticError(SpecError):
    pass
