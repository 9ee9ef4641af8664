"""Unit conversion command."""

import math
from typing import Optional

import click
from colorama import Fore, Style

from src.cli.params import ANGLE, handle_errors
from src.core.units import PhysicalRing, alpha_for_theta, energy_for_ka, theta_from_x, to_dimensionless


@click.command()
@click.option('--radius', type=float, required=True, help='Ring radius in meters')
@click.option('--mass-ratio', type=float, required=True, help='Effective mass m*/m_e')
@click.option('--energy', type=float, help='Carrier energy in eV')
@click.option('--alpha', type=float, default=0.0, show_default=True, help='Rashba coefficient in eV m')
@click.option('--theta', type=ANGLE, help='Target spin tilt; prints the Rashba coefficient')
@click.option('--ka', type=float, help='Target ka; prints the carrier energy')
@handle_errors
def units(radius: float, mass_ratio: float, energy: Optional[float], alpha: float,
          theta: Optional[float], ka: Optional[float]):
    """Convert between laboratory and dimensionless parameters."""
    if theta is not None:
        click.echo(f"alpha_eVm = {alpha_for_theta(theta, radius, mass_ratio):.12g}")
        return

    if ka is not None:
        click.echo(f"energy_eV = {energy_for_ka(ka, radius, mass_ratio):.12g}")
        return

    if energy is None:
        raise click.UsageError("Give --energy, --theta or --ka")

    ring = PhysicalRing(radius_m=radius, mass_ratio=mass_ratio, alpha_eVm=alpha, energy_eV=energy)
    ka_value, x = to_dimensionless(ring)
    tilt = theta_from_x(x)

    click.echo(f"ka = {ka_value:.12g}")
    click.echo(f"x = {x:.12g}")
    click.echo(f"theta = {tilt:.12g}")
    click.echo(f"|theta|/(pi/2) = {abs(tilt) / (0.5 * math.pi):.9f}")
    click.echo(f"{Fore.GREEN}✓ Converted{Style.RESET_ALL}", err=True)
