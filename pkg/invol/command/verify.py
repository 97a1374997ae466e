from . import options
from .groups import IOFailure, progress_handler
from ..verify import verify_all
import click

@click.command('verify')
@options.max_order()
@options.dihedral_max()
@options.enumerate_up_to()
@options.format()
@options.out()
@options.threads()
@options.verbose()
@click.pass_context
def verify_command(ctx, max_order, dihedral_max, enumerate_up_to, output_format, out, threads, verbose):
    '''Check every involution statement over the catalog and the group families.

    Exits with status 1 when any check fails.

    \b
    Examples:
      - invol verify
      - invol verify --max-order 8 --format json --out report.json
      - invol verify --enumerate-up-to 8 --threads 4 -v
    '''
    report = verify_all(max_order, dihedral_max, enumerate_up_to, threads, progress_handler(verbose))
    text = report.to_json() if output_format == 'json' else report.to_text()
    if out:
        try:
            with open(out, 'w', encoding='utf-8') as fh:
                fh.write(text)
        except OSError as e:
            raise IOFailure(f'{out}: {e.strerror or e}') from e
        if verbose:
            click.echo(f'report written to {out}', err=True)
    else:
        click.echo(text, nl=False)
    if not report.overall_pass:
        ctx.exit(1)
