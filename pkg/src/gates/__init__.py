"""Gate algebra package for Ring Gate.

This package composes ring transformations into qubit gates:
- algebra: series composition, target gates, fidelity and recipes

Example:
    >>> from src.gates import compose, hadamard_recipe
    >>> seq = compose(hadamard_recipe())
    >>> print(seq.fidelities()['H'])
"""

from .algebra import (
    RECIPES,
    GateSequence,
    PhaseElement,
    RotationElement,
    compose,
    compose_unitaries,
    fidelity_up_to_phase,
    gate_fidelities,
    hadamard_recipe,
    ideal_phase_gate,
    ideal_rotation,
    not_recipe,
    target_library,
    z_recipe,
)

__all__ = [
    'RECIPES',
    'GateSequence',
    'PhaseElement',
    'RotationElement',
    'compose',
    'compose_unitaries',
    'fidelity_up_to_phase',
    'gate_fidelities',
    'hadamard_recipe',
    'ideal_phase_gate',
    'ideal_rotation',
    'not_recipe',
    'target_library',
    'z_recipe',
]
