"""
Commands on vertex sets, admissible pairs and graded ideals
"""
import click

from lpa_toolkit.commands.command_utils import emit, field_option, graph_command, pair_option


@click.command()
@graph_command
@click.option('--H', 'H', required=True, help='Comma-separated vertex ids')
def saturate(service, g, H):
    """Saturation of a hereditary set"""
    emit(service.saturate(g, H))


@click.command()
@graph_command
@click.option('--X', 'X', required=True, help='Comma-separated vertex ids')
def closure(service, g, X):
    """Least hereditary set containing X"""
    emit(service.closure(g, X))


@click.command()
@graph_command
@click.option('--H', 'H', required=True, help='Comma-separated vertex ids of a saturated hereditary set')
def breaking(service, g, H):
    """Breaking vertices of H"""
    emit(service.breaking(g, H))


@click.command()
@graph_command
def pairs(service, g):
    """All admissible pairs in canonical order"""
    emit(service.pairs(g))


@click.command()
@graph_command
@click.option('--dot', 'as_dot', is_flag=True, help='Print the Hasse diagram in DOT')
def lattice(service, g, as_dot):
    """Covering relations of the graded-ideal lattice"""
    emit(service.lattice(g, dot=as_dot))


@click.command()
@graph_command
@pair_option
@field_option
@click.argument('expression')
def member(service, g, pair, selector, expression):
    """Whether EXPRESSION lies in the graded ideal of the pair"""
    emit(service.member(g, pair, expression, selector))


COMMANDS = [saturate, closure, breaking, pairs, lattice, member]
