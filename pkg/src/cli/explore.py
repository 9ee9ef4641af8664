"""Parameter-space exploration commands: scan, curves, lossless."""

import math
from pathlib import Path
from typing import Optional

import click
from colorama import Fore, Style

from src.analysis.curves import delta_zero_curves, lossless_points, lossless_points_diametric
from src.analysis.scan import scan_grid
from src.cli.params import ANGLE, handle_errors
from src.cli.tables import FORMATS, emit_table
from src.core.config import DEFAULT_WINDOW, TOLERANCES


def window_options(x_range, n_ka: Optional[int], n_x: int, n_ka_help: str = 'Samples along ka'):
    """Shared window and resolution flags; ``n_ka=None`` leaves the ka count to the command."""
    def decorator(func):
        options = [
            click.option('--ka-min', type=float, default=DEFAULT_WINDOW.ka_range[0], show_default=True),
            click.option('--ka-max', type=float, default=DEFAULT_WINDOW.ka_range[1], show_default=True),
            click.option('--x-min', type=float, default=x_range[0], show_default=True),
            click.option('--x-max', type=float, default=x_range[1], show_default=True),
            click.option('--n-ka', type=int, default=n_ka, show_default=n_ka is not None, help=n_ka_help),
            click.option('--n-x', type=int, default=n_x, show_default=True, help='Samples along x'),
        ]
        for option in reversed(options):
            func = option(func)
        return func
    return decorator


def output_options(func):
    """--output and --format flags."""
    func = click.option('--format', 'fmt', type=click.Choice(FORMATS), default='csv', show_default=True)(func)
    func = click.option('--output', '-o', type=click.Path(dir_okay=False), help='Write the table to a file')(func)
    return func


def write_output(data: bytes, output: Optional[str]) -> None:
    """Write to ``output`` or to stdout."""
    if output:
        Path(output).write_bytes(data)
        click.echo(f"{Fore.GREEN}✓ Wrote {len(data):,} bytes to {output}{Style.RESET_ALL}", err=True)
    else:
        click.echo(data.decode("utf-8"), nl=False)


@click.command()
@click.option('--gamma', type=ANGLE, default='pi', show_default=True, help='Junction angle')
@window_options(DEFAULT_WINDOW.x_range, *DEFAULT_WINDOW.scan_resolution)
@output_options
@click.option('--progress', is_flag=True, help='Show a progress bar')
@click.option('--workers', type=click.IntRange(1, 64), help='Thread count (default: RINGGATE_MAX_WORKERS)')
@handle_errors
def scan(gamma, ka_min, ka_max, x_min, x_max, n_ka, n_x, output, fmt, progress, workers):
    """Efficiency surface |T| over (ka, x)."""
    click.echo(f"{Fore.CYAN}Scanning {n_ka}x{n_x} points at gamma={gamma:.12g}{Style.RESET_ALL}", err=True)

    grid = scan_grid(
        gamma,
        ka_range=(ka_min, ka_max),
        x_range=(x_min, x_max),
        resolution=(n_ka, n_x),
        max_workers=workers,
        progress=progress,
    )

    n_bad = int(grid.degenerate.sum())
    click.echo(f"{Fore.GREEN}✓ max |T| = {grid.max_efficiency():.9f}{Style.RESET_ALL}", err=True)
    if n_bad:
        click.echo(f"{Fore.YELLOW}⚠ {n_bad} degenerate point(s) flagged{Style.RESET_ALL}", err=True)

    params = {"gamma": gamma, "ka_range": [ka_min, ka_max], "x_range": [x_min, x_max], "resolution": [n_ka, n_x]}
    write_output(emit_table(grid, fmt, params), output)


@click.command()
@click.option('--gamma', type=ANGLE, default='0.5pi', show_default=True, help='Junction angle (not pi)')
@window_options(DEFAULT_WINDOW.curve_x_range, *DEFAULT_WINDOW.curve_resolution)
@output_options
@handle_errors
def curves(gamma, ka_min, ka_max, x_min, x_max, n_ka, n_x, output, fmt):
    """Lines along which the ring is a gamma phase gate (delta = 0)."""
    found = delta_zero_curves(gamma, ka_range=(ka_min, ka_max), x_range=(x_min, x_max), resolution=(n_ka, n_x))

    if found:
        n_points = sum(len(c) for c in found)
        click.echo(f"{Fore.GREEN}✓ {len(found)} curve(s), {n_points} point(s){Style.RESET_ALL}", err=True)
    else:
        click.echo(f"{Fore.YELLOW}⚠ No phase-gate curve in this window{Style.RESET_ALL}", err=True)

    params = {"gamma": gamma, "ka_range": [ka_min, ka_max], "x_range": [x_min, x_max], "resolution": [n_ka, n_x]}
    write_output(emit_table(found, fmt, params, kind="curves"), output)


LOSSLESS_N_KA_HELP = (
    f"Samples along ka (default: {DEFAULT_WINDOW.diametric_resolution} at gamma = pi, "
    f"else {DEFAULT_WINDOW.curve_resolution[0]})"
)


@click.command()
@click.option('--gamma', type=ANGLE, default='pi', show_default=True,
              help='Junction angle; pi searches along ka at fixed --x, otherwise along delta = 0 curves')
@click.option('--x', 'x', type=float, default=1.0, show_default=True, help='Spin-orbit ratio (diametric search)')
@window_options(DEFAULT_WINDOW.curve_x_range, None, DEFAULT_WINDOW.curve_resolution[1], n_ka_help=LOSSLESS_N_KA_HELP)
@output_options
@handle_errors
def lossless(gamma, x, ka_min, ka_max, x_min, x_max, n_ka, n_x, output, fmt):
    """Lossless (reflectionless) gate points."""
    diametric = abs(gamma - math.pi) < TOLERANCES.gate_classification

    if diametric:
        n_ka = DEFAULT_WINDOW.diametric_resolution if n_ka is None else n_ka
        points = lossless_points_diametric(x, ka_range=(ka_min, ka_max), resolution=n_ka)
        params = {"gamma": math.pi, "x": x, "ka_range": [ka_min, ka_max], "resolution": n_ka}
    else:
        n_ka_curves = DEFAULT_WINDOW.curve_resolution[0] if n_ka is None else n_ka
        found = delta_zero_curves(
            gamma, ka_range=(ka_min, ka_max), x_range=(x_min, x_max), resolution=(n_ka_curves, n_x)
        )
        points = [p for curve in found for p in lossless_points(curve)]
        params = {
            "gamma": gamma, "ka_range": [ka_min, ka_max], "x_range": [x_min, x_max],
            "resolution": [n_ka_curves, n_x],
        }

    color = Fore.GREEN if points else Fore.YELLOW
    click.echo(f"{color}{len(points)} lossless point(s){Style.RESET_ALL}", err=True)
    write_output(emit_table(points, fmt, params, kind="points"), output)
