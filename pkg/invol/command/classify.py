from . import arguments
from .groups import evaluate, fraction
from ..group.recognition import d8_ea_witness, is_elementary_abelian_2
from ..involutions import stats
from fractions import Fraction
import click

THREE_QUARTERS = Fraction(3, 4)

@click.command('classify')
@arguments.spec()
@click.pass_context
def classify_command(ctx, spec):
    '''Show which involution regime a group falls in.

    Groups with alpha > 3/4 are elementary abelian 2-groups and groups
    with alpha = 3/4 are D8 x C2^k; the witness for either is printed.
    A group breaking the pattern exits with status 1.

    \b
    SPEC group spec

    \b
    Examples:
      - invol classify EA5
      - invol classify D8xC2
    '''
    group = evaluate(spec)
    alpha = stats(group).alpha
    click.echo(f'group: {group.name}')
    click.echo(f'alpha: {fraction(alpha)}')
    if alpha > THREE_QUARTERS:
        click.echo('regime: alpha > 3/4')
        confirmed = is_elementary_abelian_2(group)
        click.echo(f'elementary abelian: {"yes" if confirmed else "no"}')
    elif alpha == THREE_QUARTERS:
        click.echo('regime: alpha = 3/4')
        found = d8_ea_witness(group)
        confirmed = found is not None
        if confirmed:
            k, witness = found
            name = 'D8' if k == 0 else 'D8xC2' if k == 1 else f'D8xC2^{k}'
            click.echo(f'witness: {name}')
            click.echo(f'isomorphism: {" ".join(str(v) for v in witness.images)}')
        else:
            click.echo('witness: none')
    else:
        click.echo('regime: alpha < 3/4')
        confirmed = True
    if not confirmed:
        click.echo(f'{group.name} is a counterexample', err=True)
        ctx.exit(1)
