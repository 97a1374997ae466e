from .Group import Group, OrderFactorization, validate
from .SubsetMask import SubsetMask
from .Homomorphism import Homomorphism
from .table_format import format_table, parse_table, read_table, write_table
