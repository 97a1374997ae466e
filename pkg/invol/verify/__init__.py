from .anchors import ANCHORS, IN_SCOPE
from .checks import CHECK_FUNCTIONS, CHECKS
from .population import DIHEDRAL_MAX_N, FAMILY_MAX_ORDER, PRODUCT_PAIR_MAX_ORDER, Member, Population, \
    build_population
from .report import SCHEMA_VERSION, CheckResult, Tally, VerificationReport
from .runner import DEFAULT_ENUMERATE_UP_TO, verify_all
