"""Single-ring physics for Ring Gate.

This package computes the spin transformation performed by one ring:
- spin_core: spectral parameters, eigenspinors, ring operators
- closed_form: analytic transmission matrix and gate decomposition
- oracle: boundary-matching scattering solver used as ground truth

Example:
    >>> from src.ring import RingConfig, transmission
    >>> dec = transmission(RingConfig(ka=20.4, x=1.0, gamma=3.141592653589793))
    >>> print(f"|T| = {dec.t_mag:.4f}, delta = {dec.delta:.4f}")
"""

from .spin_core import (
    RingConfig,
    RingEigenstate,
    SpectralSet,
    STATE_ORDER,
    apply_hamiltonian_fd,
    eigenspinor,
    eval_ring_state,
    ring_momentum,
    ring_states,
    spectral_params,
    spin_operator_tilted,
)
from .closed_form import (
    GateKind,
    GateLabel,
    TransmissionDecomposition,
    classify_gate,
    relative_phase_arctan,
    rotation_matrix,
    transmission,
    transmission_diametric,
    transmission_grid,
    unitary_factor,
)
from .oracle import ScatteringSolution, assemble_system, solve_scattering

__all__ = [
    'RingConfig',
    'RingEigenstate',
    'SpectralSet',
    'STATE_ORDER',
    'apply_hamiltonian_fd',
    'eigenspinor',
    'eval_ring_state',
    'ring_momentum',
    'ring_states',
    'spectral_params',
    'spin_operator_tilted',
    'GateKind',
    'GateLabel',
    'TransmissionDecomposition',
    'classify_gate',
    'relative_phase_arctan',
    'rotation_matrix',
    'transmission',
    'transmission_diametric',
    'transmission_grid',
    'unitary_factor',
    'ScatteringSolution',
    'assemble_system',
    'solve_scattering',
]
