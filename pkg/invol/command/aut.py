from . import arguments
from . import options
from .groups import evaluate
from ..errors import OrderCapExceeded
from ..group.automorphisms import automorphisms, inverted_element_count
import click

@click.command('aut')
@options.cap()
@arguments.spec()
def aut_command(cap, spec):
    '''Show the automorphisms of a group and how many elements each involution inverts.

    Involutions are counted with the identity included.

    \b
    SPEC group spec

    \b
    Examples:
      - invol aut D8
      - invol aut --cap 32 D8xC2^2
    '''
    group = evaluate(spec)
    try:
        perms = automorphisms(group, cap)
    except OrderCapExceeded as e:
        raise click.UsageError(f'{e}; raise --cap to search anyway') from e
    involutory = [p for p in perms if all(p[p[x]] == x for x in range(group.order))]
    click.echo(f'group: {group.name}')
    click.echo(f'|Aut|: {len(perms)}')
    click.echo(f'involutions in Aut: {len(involutory)}')
    for p in involutory:
        images = ' '.join(str(v) for v in p)
        click.echo(f'  inverts {inverted_element_count(group, p)}: {images}')
