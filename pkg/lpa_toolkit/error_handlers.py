"""
Entry point mapping toolkit exceptions to exit statuses
"""
import sys

import click
from dotenv import load_dotenv

from lpa_toolkit.commands import create_cli
from lpa_toolkit.services.exceptions import ServiceError
from lpa_toolkit.shared.logging_config import setup_module_logger


logger = setup_module_logger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2


def run(argv: list[str] | None = None) -> int:
    """Run the lpa command line; 0 on success, 1 on a toolkit error, 2 on a usage error"""
    load_dotenv()
    try:
        result = create_cli().main(args=argv, prog_name='lpa', standalone_mode=False)
    except click.UsageError as e:
        e.show()
        return EXIT_USAGE_ERROR
    except ServiceError as e:
        logger.debug(f"Command failed: {e!r}")
        click.echo(f"error: {e}", err=True)
        return EXIT_DOMAIN_ERROR
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_DOMAIN_ERROR
    return result if isinstance(result, int) else EXIT_OK


def main() -> None:
    sys.exit(run())
