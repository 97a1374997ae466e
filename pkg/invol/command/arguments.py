from ..errors import SpecError
from ..spec import parse_spec
import click

class GroupSpecType(click.ParamType):
    '''A group spec such as D8xC2^2, parsed but not yet evaluated.'''
    name = 'spec'

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return value
        try:
            return parse_spec(value)
        except SpecError as e:
            self.fail(str(e), param, ctx)

def spec():
    return click.argument('spec', type=GroupSpecType())
