from ..catalog import MAX_CATALOG_ORDER, MAX_ENUMERATION_ORDER
from ..group.automorphisms import AUTOMORPHISM_ORDER_CAP
from ..verify import DEFAULT_ENUMERATE_UP_TO, DIHEDRAL_MAX_N
import click

def cap():
    return click.option('--cap', default=AUTOMORPHISM_ORDER_CAP, show_default=True, type=click.IntRange(min=1),
                        help='Largest group order searched for automorphisms.')

def dihedral_max():
    return click.option('--dihedral-max', default=DIHEDRAL_MAX_N, show_default=True, type=click.IntRange(min=1),
                        help='Check D_2n for n up to this value.')

def enumerate_up_to():
    return click.option('--enumerate-up-to', default=DEFAULT_ENUMERATE_UP_TO, show_default=True,
                        type=click.IntRange(0, MAX_ENUMERATION_ORDER),
                        help='Confirm the catalog by Cayley-table search up to this order.')

def format():
    return click.option('--format', 'output_format', default='text', show_default=True,
                        type=click.Choice(['json', 'text']), help='Report format.')

def max_order(help='Largest catalog order.'):
    return click.option('--max-order', default=MAX_CATALOG_ORDER, show_default=True,
                        type=click.IntRange(1, MAX_CATALOG_ORDER), help=help)

def out():
    return click.option('--out', '-o', default=None, type=click.Path(dir_okay=False, writable=True),
                        help='Write the report to this file instead of standard output.')

def out_dir():
    return click.option('--out-dir', required=True, type=click.Path(file_okay=False),
                        help='Directory to write the catalog into.')

def threads():
    return click.option('--threads', '-j', default=None, type=click.IntRange(min=1),
                        help='Worker processes for verification (default: CPU count).')

def verbose():
    return click.option('--verbose', '-v', default=False, is_flag=True, help='Show additional output.')

def version():
    return click.option('--version', default=False, is_flag=True, help='Show version information.')
