"""Core infrastructure for Ring Gate.

This package provides shared infrastructure components:
- config: Application settings, tolerance table and default window
- exceptions: Error hierarchy shared by all engines
- units: Laboratory <-> dimensionless parameter conversion
"""

from .config import DEFAULT_WINDOW, TOLERANCES, ExplorationWindow, Settings, Tolerances, settings
from .exceptions import (
    POINT_ERRORS,
    ConservationError,
    DegeneratePointError,
    InvalidParameterError,
    RingGateError,
    SingularSystemError,
    UnknownGateError,
)
from .units import (
    ELECTRON_MASS,
    ELEMENTARY_CHARGE,
    HBAR,
    PhysicalRing,
    alpha_for_theta,
    energy_for_ka,
    theta_from_x,
    to_dimensionless,
    x_from_theta,
)

__all__ = [
    # Config
    'Settings',
    'settings',
    'Tolerances',
    'TOLERANCES',
    'ExplorationWindow',
    'DEFAULT_WINDOW',
    # Errors
    'RingGateError',
    'InvalidParameterError',
    'DegeneratePointError',
    'SingularSystemError',
    'ConservationError',
    'UnknownGateError',
    'POINT_ERRORS',
    # Units
    'HBAR',
    'ELECTRON_MASS',
    'ELEMENTARY_CHARGE',
    'PhysicalRing',
    'to_dimensionless',
    'alpha_for_theta',
    'energy_for_ka',
    'theta_from_x',
    'x_from_theta',
]
