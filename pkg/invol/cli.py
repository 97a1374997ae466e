from .command import options
from .command.aut import aut_command
from .command.catalog import catalog_command
from .command.classify import classify_command
from .command.stats import stats_command
from .command.verify import verify_command
from .command.version import version_command, show_version
import click

@click.group(invoke_without_command=True)
@options.version()
@click.pass_context
def cli(ctx, version):
    '''invol - involution statistics for finite groups

    \b
    Group specs:
      - C<n> cyclic, D<2n> dihedral, Dic<4m> dicyclic, Q8 quaternion
      - C2^<k> or EA<k> elementary abelian of order 2^k
      - Dih(<spec>) generalized dihedral over an abelian group
      - table:<path> a Cayley table file
      - <spec>x<spec> direct product, parentheses group

    \b
    Examples:
      - D8xC2^2
      - Dih(C3xC3) x C2
      - (table:groups/08-04-D8.txt)xC2
    '''
    if version:
        show_version()
    elif ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())

cli.add_command(aut_command)
cli.add_command(catalog_command)
cli.add_command(classify_command)
cli.add_command(stats_command)
cli.add_command(verify_command)
cli.add_command(version_command)
