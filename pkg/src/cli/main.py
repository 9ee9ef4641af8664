"""Command-line interface for Ring Gate.

This is the main entry point that assembles all CLI commands from
modular subcommand files.
"""

import logging
import sys
from typing import Optional, Sequence

import click
from colorama import Fore, Style, init

from src import __version__

# Initialize colorama
init(autoreset=True)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

logger = logging.getLogger(__name__)


@click.group()
@click.version_option(version=__version__, prog_name='ringgate')
@click.option('--verbose', '-v', is_flag=True, help='Log debug details to stderr')
def cli(verbose: bool):
    """Ring Gate - spin transformations of Rashba quantum rings as qubit gates."""
    # Tables go to stdout, so logging stays quiet unless asked
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format=LOG_FORMAT,
        force=True,
    )


# Import and register commands from submodules
from src.cli.tmatrix import tmatrix  # noqa: E402
from src.cli.explore import scan, curves, lossless  # noqa: E402
from src.cli.compose import compose  # noqa: E402
from src.cli.units import units  # noqa: E402

cli.add_command(tmatrix)
cli.add_command(scan)
cli.add_command(curves)
cli.add_command(lossless)
cli.add_command(compose)
cli.add_command(units)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and return its exit code instead of exiting.

    Exit codes: 0 success, 1 other errors, 2 argument errors,
    3 degenerate or singular parameter points.
    """
    try:
        rv = cli.main(args=list(argv) if argv is not None else None, prog_name='ringgate', standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo(f"{Fore.RED}✗ Aborted{Style.RESET_ALL}", err=True)
        return 1
    return rv if isinstance(rv, int) else 0


def main() -> None:
    """Console-script entry point."""
    sys.exit(run())
