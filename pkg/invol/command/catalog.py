from . import options
from .groups import IOFailure, progress_handler
from ..catalog import constructed_catalog, export_catalog
import click

@click.command('catalog')
@options.max_order(help='Export every group up to this order.')
@options.out_dir()
@options.verbose()
def catalog_command(max_order, out_dir, verbose):
    '''Export the group catalog as Cayley tables.

    Writes one table file per group and an index.tsv with the columns
    name, order, provenance, j, alpha and file.

    \b
    Examples:
      - invol catalog --out-dir groups
      - invol catalog --max-order 8 --out-dir groups
    '''
    entries = constructed_catalog(max_order, progress_handler(verbose))
    try:
        index = export_catalog(entries, out_dir)
    except OSError as e:
        raise IOFailure(f'{e.filename or out_dir}: {e.strerror or e}') from e
    click.echo(f'{len(entries)} groups written to {out_dir}')
    if verbose:
        click.echo(f'index: {index}')
