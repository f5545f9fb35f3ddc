"""
Commands printing a transformed graph in the graph text format
"""
import click

from lpa_toolkit.commands.command_utils import emit, graph_command, pair_option


@click.command()
@graph_command
@pair_option
def quotient(service, g, pair):
    """Quotient graph realizing L(E) modulo the ideal of the pair"""
    emit(service.quotient(g, pair))


@click.command()
@graph_command
@pair_option
def restrict(service, g, pair):
    """Restriction graph whose algebra is Morita equivalent to the ideal"""
    emit(service.restrict(g, pair))


@click.command()
@graph_command
@click.option('--depth', type=click.IntRange(min=1), default=None,
              help='Tail length at each singular vertex. Defaults to LPA_DESINGULARIZE_DEPTH.')
def desingularize(service, g, depth):
    """Truncated desingularization"""
    emit(service.desingularize(g, depth))


COMMANDS = [quotient, restrict, desingularize]
