from . import arguments
from .groups import evaluate, fraction
from ..group.recognition import is_elementary_abelian_2
from ..group.structure import center
from ..involutions import stats
import click

@click.command('stats')
@arguments.spec()
def stats_command(spec):
    '''Show involution statistics of a group.

    \b
    SPEC group spec, for example D8xC2^2, Dih(C3) or table:path/to/table.txt

    \b
    Examples:
      - invol stats D8
      - invol stats 'Dic12 x C2'
    '''
    group = evaluate(spec)
    s = stats(group)
    click.echo(f'group: {group.name}')
    click.echo(f'order: {s.order}')
    click.echo(f'j: {s.j_count}')
    click.echo(f'alpha: {fraction(s.alpha)}')
    click.echo(f'factorization: {s.factorization}')
    click.echo(f'center order: {len(center(group))}')
    click.echo(f'elementary abelian: {"yes" if is_elementary_abelian_2(group) else "no"}')
