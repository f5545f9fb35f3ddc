"""
Commands evaluating element expressions
"""
import click

from lpa_toolkit.commands.command_utils import emit, field_option, graph_command


@click.command(name='eval')
@graph_command
@field_option
@click.argument('expression')
def evaluate(service, g, selector, expression):
    """Normal form of EXPRESSION, e.g. "v - e*e'" """
    emit(service.evaluate(g, expression, selector))


@click.command(name='ghost-extract')
@graph_command
@field_option
@click.argument('expression')
def ghost_extract(service, g, selector, expression):
    """Nonzero ghost polynomial in the ideal generated by EXPRESSION"""
    emit(service.ghost_extract(g, expression, selector))


COMMANDS = [evaluate, ghost_extract]
