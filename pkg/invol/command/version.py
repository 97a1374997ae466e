import click
import invol

@click.command('version')
def version_command():
    '''Show version information.

    \b
    Examples:
      - invol version
    '''
    show_version()

def show_version():
    click.echo(f'''invol {invol.__version__}
License {invol.__license__}: {invol.__license_long__}
This is free software: you are free to change and redistribute it.
There is NO WARRANTY, to the extent permitted by law.

Written by {invol.__author__}.''')
