from ..errors import InvolError
import click

# larger specs are refused before any table is built
MAX_SPEC_ORDER = 512

class IOFailure(click.ClickException):
    exit_code = 3

def evaluate(spec):
    '''Build the group a parsed spec names, mapping failures onto the exit codes.'''
    if spec.order is not None and spec.order > MAX_SPEC_ORDER:
        raise click.BadParameter(f'{spec} has order {spec.order}, the limit is {MAX_SPEC_ORDER}', param_hint="'SPEC'")
    try:
        return spec.evaluate()
    except OSError as e:
        raise IOFailure(f'{e.filename or spec}: {e.strerror or e}') from e
    except InvolError as e:
        raise click.BadParameter(str(e), param_hint="'SPEC'") from e

def fraction(value):
    '''3/4 (0.750000)'''
    return f'{value} ({float(value):.6f})'

def progress_handler(verbose):
    if not verbose:
        return None
    return lambda message: click.echo(message, err=True)
