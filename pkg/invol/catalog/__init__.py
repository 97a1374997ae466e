from .CatalogEntry import CatalogEntry, Provenance
from .constructed import MAX_CATALOG_ORDER, catalog_by_order, constructed_catalog
from .dedupe import dedupe, find_isomorphic
from .enumerate import MAX_ENUMERATION_ORDER, brute_force_enumerate, cayley_tables
from .export import INDEX_FIELDS, INDEX_FILE, export_catalog, read_index
from .fixtures import CATALOG_FIXTURES, CHARACTERIZATION_FIXTURES, ActionFixture
