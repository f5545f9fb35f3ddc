"""
Command-line interface: a click group with one subcommand per analysis
"""
import click

from lpa_toolkit import Config
from lpa_toolkit.commands import algebra_commands, graph_commands, ideal_commands, transform_commands
from lpa_toolkit.services.analysis_service import GraphAnalysisService
from lpa_toolkit.shared.logging_config import set_project_log_level


def create_cli() -> click.Group:
    """Build the lpa command group and register every command module"""

    @click.group(context_settings={'help_option_names': ['-h', '--help']})
    @click.option('--verbose', '-v', is_flag=True, help='Debug logging on stderr')
    @click.pass_context
    def cli(ctx: click.Context, verbose: bool):
        """Leavitt path algebra toolkit

        GRAPH is a graph file, '-' for standard input, or a catalogue
        name (R1, R2, R3, A3, C3, T, L2, EX5).
        """
        config = Config()
        set_project_log_level('DEBUG' if verbose else config.log_level)
        ctx.obj = GraphAnalysisService(config)

    for module in (graph_commands, ideal_commands, transform_commands, algebra_commands):
        for command in module.COMMANDS:
            cli.add_command(command)

    return cli
