"""
Ring Gate

Spin transformations of a one-dimensional quantum ring with Rashba
spin-orbit coupling, treated as single-qubit gates.

Core Mission:
    A carrier passing through a ring attached to two leads leaves with its
    spin rotated. Depending on the junction angle, the energy and the gate
    voltage that sets the spin-orbit strength, the ring acts as a phase
    gate or as a rotation about y, and rings in series build Z, Hadamard
    and NOT gates.

Key Features:
    - Closed-form transmission matrix and its gate decomposition
    - Independent boundary-matching scattering solver
    - Series composition with phase-insensitive gate fidelity
    - Efficiency scans, phase-gate curve tracing, lossless point search
    - Laboratory <-> dimensionless unit conversion

Quick Start:
    from src import RingConfig, transmission, compose, hadamard_recipe

    dec = transmission(RingConfig(ka=20.4, x=1.0, gamma=3.141592653589793))
    print(dec.t_mag, dec.delta)

    seq = compose(hadamard_recipe())
    print(seq.fidelities())
"""

__version__ = "1.0.0"

# Single-ring engines
from .ring import (
    RingConfig,
    TransmissionDecomposition,
    ScatteringSolution,
    transmission,
    transmission_diametric,
    classify_gate,
    solve_scattering,
)

# Gate algebra
from .gates import GateSequence, compose, fidelity_up_to_phase, hadamard_recipe, not_recipe, z_recipe

# Exploration
from .analysis import ScanGrid, Curve, CurvePoint, scan_grid, delta_zero_curves, lossless_points

# Units
from .core.units import PhysicalRing, to_dimensionless, alpha_for_theta

__all__ = [
    # Version
    '__version__',
    # Single ring
    'RingConfig',
    'TransmissionDecomposition',
    'ScatteringSolution',
    'transmission',
    'transmission_diametric',
    'classify_gate',
    'solve_scattering',
    # Gates
    'GateSequence',
    'compose',
    'fidelity_up_to_phase',
    'hadamard_recipe',
    'not_recipe',
    'z_recipe',
    # Exploration
    'ScanGrid',
    'Curve',
    'CurvePoint',
    'scan_grid',
    'delta_zero_curves',
    'lossless_points',
    # Units
    'PhysicalRing',
    'to_dimensionless',
    'alpha_for_theta',
]
