"""Gate composition command."""

import json

import click
from colorama import Fore, Style

from src.cli.explore import write_output
from src.cli.params import handle_errors
from src.cli.tables import FORMATS, emit_table
from src.cli.tmatrix import echo_matrix
from src.core.exceptions import InvalidParameterError
from src.gates.algebra import METHODS, GateSequence


@click.command()
@click.option('--file', 'path', type=click.Path(exists=True, dir_okay=False), required=True,
              help='Sequence document (JSON)')
@click.option('--method', type=click.Choice(METHODS), help='Ring engine (default: from the document, else closed)')
@click.option('--ideal', is_flag=True, help='Use only the unitary part of each ring')
@click.option('--output', '-o', type=click.Path(dir_okay=False), help='Write the result table to a file')
@click.option('--format', 'fmt', type=click.Choice(FORMATS), default='json', show_default=True)
@handle_errors
def compose(path: str, method, ideal: bool, output, fmt: str):
    """Compose rings in series and compare with X, Z and H."""
    try:
        with open(path, encoding='utf-8') as f:
            document = json.load(f)
    except json.JSONDecodeError as e:
        raise InvalidParameterError(f"{path} is not valid JSON: {e}") from e

    seq = GateSequence.from_dict(document, method=method, unitary_only=True if ideal else None)

    click.echo(f"{Fore.CYAN}Composed {len(seq.items)} item(s) with the {seq.method} engine{Style.RESET_ALL}", err=True)
    echo_matrix("composed", seq.composed)
    click.echo(f"total_efficiency = {seq.total_efficiency:.9f}")
    for name, value in seq.fidelities().items():
        click.echo(f"fidelity {name} = {value:.6f}")

    for warning in seq.warnings:
        click.echo(f"{Fore.YELLOW}⚠ {warning}{Style.RESET_ALL}", err=True)

    if output:
        write_output(emit_table(seq, fmt), output)
