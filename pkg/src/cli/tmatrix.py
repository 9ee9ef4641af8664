"""Single-point transmission command."""

import math

import click
import numpy as np
from colorama import Fore, Style

from src.cli.params import ANGLE, handle_errors
from src.gates.algebra import fidelity_up_to_phase
from src.ring.closed_form import classify_gate, transmission
from src.ring.oracle import solve_scattering
from src.ring.spin_core import RingConfig


def format_complex(value: complex) -> str:
    return f"{value.real:+.12f}{value.imag:+.12f}j"


def echo_matrix(label: str, m: np.ndarray) -> None:
    click.echo(f"{label}:")
    for row in m:
        click.echo("  [" + ", ".join(format_complex(v) for v in row) + "]")


def format_angle(value: float) -> str:
    return f"{value:.15g} ({value / math.pi:.9f} pi)"


@click.command()
@click.option('--ka', type=float, required=True, help='Lead wavenumber times radius')
@click.option('--x', 'x', type=float, default=0.0, show_default=True, help='Spin-orbit ratio omega/Omega')
@click.option('--gamma', type=ANGLE, default='pi', show_default=True, help='Junction angle (radians, e.g. 0.5pi)')
@handle_errors
def tmatrix(ka: float, x: float, gamma: float):
    """Transmission matrix at one point, closed form and oracle side by side."""
    cfg = RingConfig(ka=ka, x=x, gamma=gamma)
    click.echo(f"{Fore.CYAN}Transmission at ka={ka}, x={x}, gamma={gamma:.12g}{Style.RESET_ALL}", err=True)

    dec = transmission(cfg)
    click.echo("[closed form]")
    click.echo(f"|T| = {dec.t_mag:.15g}")
    click.echo(f"delta = {format_angle(dec.delta)}")
    click.echo(f"delta0 = {format_angle(dec.delta0)}")
    click.echo(f"theta = {format_angle(dec.theta)}")
    click.echo(f"gate = {classify_gate(dec, cfg)}")
    echo_matrix("U", dec.U)
    echo_matrix("T", dec.T)

    sol = solve_scattering(cfg)
    click.echo("[oracle]")
    echo_matrix("T", sol.Tmat)
    echo_matrix("R", sol.Rmat)
    click.echo(f"residual = {sol.residual:.3e}")
    click.echo(f"conservation_defect = {sol.conservation_defect:.3e}")
    click.echo(f"condition_number = {sol.condition_number:.3e}")

    fidelity = fidelity_up_to_phase(dec.T, sol.Tmat)
    max_diff = float(np.max(np.abs(dec.T - sol.Tmat)))
    click.echo("[comparison]")
    click.echo(f"fidelity = {fidelity:.15f}")
    click.echo(f"max |T_closed - T_oracle| = {max_diff:.3e}")

    if dec.is_lossless:
        click.echo(f"{Fore.GREEN}✓ Lossless point{Style.RESET_ALL}", err=True)
