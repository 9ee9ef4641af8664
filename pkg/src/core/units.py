"""Conversion between laboratory parameters and dimensionless ring parameters.

The ring problem depends on two numbers only:

    ka = a * sqrt(2 m* E) / hbar        (lead wavenumber times radius)
    x  = omega / Omega = 2 m* a alpha / hbar**2

with hbar*Omega = hbar**2 / (2 m* a**2) and omega = alpha / (hbar a).
The carrier energy in units of hbar*Omega is then exactly ka**2.
"""

import logging
import math
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .exceptions import InvalidParameterError

logger = logging.getLogger(__name__)

# CODATA 2018
HBAR = 1.054571817e-34  # J s
ELECTRON_MASS = 9.1093837015e-31  # kg
ELEMENTARY_CHARGE = 1.602176634e-19  # C (J per eV)


class PhysicalRing(BaseModel):
    """Laboratory description of a ring and its carriers."""

    model_config = ConfigDict(frozen=True)

    radius_m: float = Field(..., gt=0.0, description="Ring radius in meters")
    mass_ratio: float = Field(..., gt=0.0, description="Effective mass m*/m_e")
    alpha_eVm: float = Field(default=0.0, ge=0.0, description="Rashba coefficient in eV m")
    energy_eV: float = Field(..., gt=0.0, description="Carrier energy in eV")

    @field_validator("radius_m", "mass_ratio", "alpha_eVm", "energy_eV")
    @classmethod
    def validate_finite(cls, v: float) -> float:
        """Reject NaN and infinities."""
        if not math.isfinite(v):
            raise ValueError(f"Value must be finite, got {v}")
        return v

    @property
    def effective_mass_kg(self) -> float:
        return self.mass_ratio * ELECTRON_MASS


def to_dimensionless(p: PhysicalRing) -> Tuple[float, float]:
    """Convert a physical ring to ``(ka, x)``.

    Args:
        p: Validated laboratory parameters.

    Returns:
        Tuple of (ka, x = omega/Omega).
    """
    mass = p.effective_mass_kg
    energy_j = p.energy_eV * ELEMENTARY_CHARGE
    alpha_jm = p.alpha_eVm * ELEMENTARY_CHARGE

    ka = p.radius_m * math.sqrt(2.0 * mass * energy_j) / HBAR
    x = 2.0 * mass * p.radius_m * alpha_jm / HBAR**2

    logger.debug(f"{p!r} -> ka={ka:.6g}, x={x:.6g}")
    return ka, x


def theta_from_x(x: float) -> float:
    """Spin tilt angle, tan(theta) = -x, theta in (-pi/2, 0]."""
    return -math.atan(x)


def x_from_theta(theta: float) -> float:
    """Inverse of :func:`theta_from_x`; the sign of theta is not significant.

    Plot axes use |theta|, so a positive angle is read as its modulus.
    """
    if not abs(theta) < math.pi / 2:
        raise InvalidParameterError(f"|theta| must be below pi/2, got {theta!r}")
    return abs(math.tan(theta))


def alpha_for_theta(theta_target: float, radius_m: float, mass_ratio: float) -> float:
    """Rashba coefficient (eV m) that tilts the spin axis by ``theta_target``.

    Args:
        theta_target: Target tilt angle in radians, |theta| < pi/2.
        radius_m: Ring radius in meters.
        mass_ratio: Effective mass m*/m_e.

    Returns:
        alpha in eV m.

    Raises:
        InvalidParameterError: If the angle or the geometry is out of range.
    """
    if not (math.isfinite(radius_m) and radius_m > 0):
        raise InvalidParameterError(f"radius_m must be positive, got {radius_m!r}")
    if not (math.isfinite(mass_ratio) and mass_ratio > 0):
        raise InvalidParameterError(f"mass_ratio must be positive, got {mass_ratio!r}")

    x = x_from_theta(theta_target)
    mass = mass_ratio * ELECTRON_MASS
    alpha_jm = x * HBAR**2 / (2.0 * mass * radius_m)
    return alpha_jm / ELEMENTARY_CHARGE


def energy_for_ka(ka: float, radius_m: float, mass_ratio: float) -> float:
    """Carrier energy (eV) at which the lead wavenumber gives ``ka``."""
    if not (math.isfinite(ka) and ka > 0):
        raise InvalidParameterError(f"ka must be positive, got {ka!r}")
    if not (math.isfinite(radius_m) and radius_m > 0):
        raise InvalidParameterError(f"radius_m must be positive, got {radius_m!r}")
    if not (math.isfinite(mass_ratio) and mass_ratio > 0):
        raise InvalidParameterError(f"mass_ratio must be positive, got {mass_ratio!r}")

    k = ka / radius_m
    mass = mass_ratio * ELECTRON_MASS
    return (HBAR * k) ** 2 / (2.0 * mass) / ELEMENTARY_CHARGE
