"""
Shared options and helpers for command modules
"""
from collections.abc import Callable
from functools import wraps

import click

from lpa_toolkit.algebra.graph import Graph
from lpa_toolkit.services.analysis_service import GraphAnalysisService


def get_service(ctx: click.Context) -> GraphAnalysisService:
    return ctx.ensure_object(GraphAnalysisService)


def emit(lines: list[str]) -> None:
    """Write report lines to stdout, one per line"""
    for line in lines:
        click.echo(line)


def graph_command(func: Callable) -> Callable:
    """
    Add the GRAPH argument (file path, '-' for stdin, or catalogue name) and
    call the command with the service and the loaded graph
    """
    @click.argument('graph_source', metavar='GRAPH')
    @click.pass_context
    @wraps(func)
    def wrapper(ctx: click.Context, graph_source: str, **kwargs):
        service = get_service(ctx)
        g: Graph = service.load_graph(graph_source, click.get_text_stream('stdin'))
        return func(service, g, **kwargs)
    return wrapper


field_option = click.option(
    '--field', 'selector', default=None, metavar='{q|fP}',
    help='Coefficient field: q for the rationals, f<p> for GF(p). Defaults to LPA_FIELD.',
)

pair_option = click.option(
    '--pair', required=True, metavar='H={..};S={..}', help='Admissible pair, S optional',
)
