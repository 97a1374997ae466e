from .nodes import Cyclic, Dicyclic, Dihedral, DirectProduct, ElementaryAbelian, GeneralizedDihedral, GroupSpec, \
    Quaternion8, TableFile
from .parser import parse_spec, tokens
