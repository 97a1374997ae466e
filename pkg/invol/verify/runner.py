from ..catalog import MAX_CATALOG_ORDER, MAX_ENUMERATION_ORDER
from ..errors import OrderCapExceeded
from .checks import CHECK_FUNCTIONS, CHECKS
from .population import DIHEDRAL_MAX_N, build_population
from .report import VerificationReport
from concurrent.futures import ProcessPoolExecutor
import os

DEFAULT_ENUMERATE_UP_TO = MAX_ENUMERATION_ORDER

# the population each worker process builds once
_population = None

def _init_worker(max_order, dihedral_max_n, enumerate_up_to):
    global _population
    _population = build_population(max_order, dihedral_max_n, enumerate_up_to)

def _run_check(check_id):
    return CHECK_FUNCTIONS[check_id](_population)

def _notes(max_order, enumerate_up_to):
    top = min(enumerate_up_to, max_order)
    if top == max_order:
        return []
    confirmed = f'orders 1..{top} are confirmed by Cayley-table search' if top else 'no order was enumerated'
    return [f'catalog orders {top + 1}..{max_order} are complete only relative to the committed constructions; '
            f'{confirmed}']

def verify_all(max_order=MAX_CATALOG_ORDER, dihedral_max_n=DIHEDRAL_MAX_N, enumerate_up_to=DEFAULT_ENUMERATE_UP_TO,
               threads=None, progress=None):
    '''Run every check and collect the results in registry order.

    With threads > 1 the checks are spread over worker processes, each
    building its own copy of the population; the report does not depend
    on the worker count.
    '''
    if not 1 <= max_order <= MAX_CATALOG_ORDER:
        raise OrderCapExceeded(f'max order must be within 1..{MAX_CATALOG_ORDER}, got {max_order}')
    if not 0 <= enumerate_up_to <= MAX_ENUMERATION_ORDER:
        raise OrderCapExceeded(f'enumeration covers orders up to {MAX_ENUMERATION_ORDER}, got {enumerate_up_to}')
    if dihedral_max_n < 1:
        raise ValueError(f'dihedral family needs n >= 1, got {dihedral_max_n}')
    threads = threads or os.cpu_count() or 1
    ids = [check_id for check_id, _ in CHECKS]
    if threads == 1:
        population = build_population(max_order, dihedral_max_n, enumerate_up_to, progress)
        results = []
        for check_id, check in CHECKS:
            results.append(check(population))
            if progress:
                progress(f'{check_id}: {"ok" if results[-1].passed else "FAIL"}')
    else:
        if progress:
            progress(f'running {len(ids)} checks on {threads} workers')
        with ProcessPoolExecutor(min(threads, len(ids)), initializer=_init_worker,
                                 initargs=(max_order, dihedral_max_n, enumerate_up_to)) as executor:
            results = []
            for result in executor.map(_run_check, ids):
                results.append(result)
                if progress:
                    progress(f'{result.check_id}: {"ok" if result.passed else "FAIL"}')
    parameters = {'maxOrder': max_order, 'dihedralMaxN': dihedral_max_n, 'enumerateUpTo': enumerate_up_to}
    return VerificationReport(results, parameters, _notes(max_order, enumerate_up_to))
