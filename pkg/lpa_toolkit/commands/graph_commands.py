"""
Commands reporting on the graph itself: validation, properties, simplicity, DOT
"""
import click

from lpa_toolkit.commands.command_utils import emit, graph_command


@click.command()
@graph_command
def validate(service, g):
    """Check the graph's structural invariants"""
    emit(service.validate(g))


@click.command()
@graph_command
def props(service, g):
    """Conditions (L) and (K), cofinality and simplicity as key=value lines"""
    emit(service.props(g))


@click.command()
@graph_command
def simple(service, g):
    """Simplicity verdict with every criterion and characterization"""
    emit(service.simple(g))


@click.command()
@graph_command
def dot(service, g):
    """Graphviz DOT rendering, bundles drawn bold"""
    emit(service.dot(g))


COMMANDS = [validate, props, simple, dot]
