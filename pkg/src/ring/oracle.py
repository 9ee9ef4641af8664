"""Boundary-matching scattering solver for the ring with two leads.

Geometry (angles are physical polar angles on the ring):

    lead I  --- input junction at phi = gamma ---+--- upper arm, phi in [0, gamma]
                                                 +--- lower arm, phi in [gamma - 2 pi, 0]
    lead II --- output junction at phi = 0

Leads are spin-orbit-free wires. In each arm the wavefunction is a
combination of the four degenerate ring states of :mod:`spin_core`.
Matching uses Griffith conditions: the spinor is continuous at each
junction and the outward generalized momenta of all branches add to zero.

Unknown vector: (r1, r2, a_1..a_4, b_1..b_4, t1, t2), arm coefficients in
:data:`STATE_ORDER`.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy import linalg

from src.core.config import TOLERANCES
from src.core.exceptions import ConservationError, InvalidParameterError, SingularSystemError

from .spin_core import TWO_PI, RingConfig, eval_ring_state, ring_momentum, ring_states

logger = logging.getLogger(__name__)

N_UNKNOWNS = 12

# Column offsets in the unknown vector
R_COLS = slice(0, 2)
UPPER_COLS = slice(2, 6)
LOWER_COLS = slice(6, 10)
T_COLS = slice(10, 12)

SPIN_UP = np.array([1.0, 0.0], dtype=complex)
SPIN_DOWN = np.array([0.0, 1.0], dtype=complex)


@dataclass(frozen=True)
class ScatteringSolution:
    """Transmission and reflection responses for both incident spins.

    Column j of ``Tmat``/``Rmat`` is the response to incident spin j
    (0 = up, 1 = down).
    """

    Tmat: np.ndarray
    Rmat: np.ndarray
    residual: float
    conservation_defect: float
    condition_number: float

    @property
    def efficiency(self) -> float:
        """|T| = sqrt|det Tmat|, since the spin factor is unimodular."""
        return math.sqrt(abs(np.linalg.det(self.Tmat)))

    @property
    def reflection_norm(self) -> float:
        return float(np.linalg.norm(self.Rmat, 2))


def _basis_columns(cfg: RingConfig, phi: float, mixing: Optional[np.ndarray]) -> Tuple[np.ndarray, np.ndarray]:
    """Spinor values and momenta of the arm basis at ``phi``, as 2x4 blocks."""
    states = ring_states(cfg)
    values = np.column_stack([eval_ring_state(s, phi) for s in states])
    momenta = np.column_stack([ring_momentum(s, phi, cfg.x) for s in states])
    if mixing is not None:
        values = values @ mixing
        momenta = momenta @ mixing
    return values, momenta


def _check_spinor(incident: Sequence[complex]) -> np.ndarray:
    spinor = np.asarray(incident, dtype=complex).reshape(-1)
    if spinor.shape != (2,):
        raise InvalidParameterError(f"Incident spinor must have 2 components, got shape {spinor.shape}")
    norm = np.linalg.norm(spinor)
    if not abs(norm - 1.0) < 1e-12:
        raise InvalidParameterError(f"Incident spinor must be normalized, got norm {norm:.6g}")
    return spinor


def assemble_system(
    cfg: RingConfig,
    incident: Sequence[complex],
    basis_mixing: Optional[np.ndarray] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """Build the 12x12 junction-matching system.

    Rows 0-3 hold continuity at the input junction (upper arm, then lower
    arm), rows 4-7 continuity at the output junction, rows 8-9 the flux
    balance at the input junction and rows 10-11 the flux balance at the
    output junction. The incident spinor only enters rows 0-3 and 8-9.

    Args:
        cfg: Ring configuration.
        incident: Normalized incident spinor in lead I.
        basis_mixing: Optional invertible 4x4 matrix recombining the arm
            basis states (columns give the new states).

    Returns:
        Tuple of (matrix, right-hand side).
    """
    f = _check_spinor(incident)
    if basis_mixing is not None:
        basis_mixing = np.asarray(basis_mixing, dtype=complex)
        if basis_mixing.shape != (4, 4):
            raise InvalidParameterError(f"basis_mixing must be 4x4, got {basis_mixing.shape}")

    k = cfg.ka
    gamma = cfg.gamma

    psi_in_upper, pi_in_upper = _basis_columns(cfg, gamma, basis_mixing)
    psi_in_lower, pi_in_lower = _basis_columns(cfg, gamma - TWO_PI, basis_mixing)
    psi_out, pi_out = _basis_columns(cfg, 0.0, basis_mixing)

    eye = np.eye(2, dtype=complex)
    M = np.zeros((N_UNKNOWNS, N_UNKNOWNS), dtype=complex)
    rhs = np.zeros(N_UNKNOWNS, dtype=complex)

    # Input junction: f + r equals both arm spinors
    M[0:2, R_COLS] = eye
    M[0:2, UPPER_COLS] = -psi_in_upper
    rhs[0:2] = -f
    M[2:4, R_COLS] = eye
    M[2:4, LOWER_COLS] = -psi_in_lower
    rhs[2:4] = -f

    # Output junction: t equals both arm spinors
    M[4:6, UPPER_COLS] = -psi_out
    M[4:6, T_COLS] = eye
    M[6:8, LOWER_COLS] = -psi_out
    M[6:8, T_COLS] = eye

    # Input flux: lead I points to -x, upper arm to -phi, lower arm to +phi
    M[8:10, R_COLS] = k * eye
    M[8:10, UPPER_COLS] = -pi_in_upper
    M[8:10, LOWER_COLS] = pi_in_lower
    rhs[8:10] = k * f

    # Output flux: lead II points to +x, upper arm to +phi, lower arm to -phi
    M[10:12, UPPER_COLS] = pi_out
    M[10:12, LOWER_COLS] = -pi_out
    M[10:12, T_COLS] = k * eye

    return M, rhs


def solve_scattering(cfg: RingConfig, basis_mixing: Optional[np.ndarray] = None) -> ScatteringSolution:
    """Solve the matching system for incident spin up and spin down.

    Args:
        cfg: Ring configuration.
        basis_mixing: Optional recombination of the arm basis.

    Returns:
        ScatteringSolution with residual and conservation diagnostics.

    Raises:
        SingularSystemError: If the matrix condition number exceeds 1e12.
        ConservationError: If |t|^2 + |r|^2 departs from 1 by more than 1e-8.
    """
    M, rhs_up = assemble_system(cfg, SPIN_UP, basis_mixing)
    _, rhs_down = assemble_system(cfg, SPIN_DOWN, basis_mixing)

    condition_number = float(np.linalg.cond(M))
    if not condition_number <= TOLERANCES.singular_condition:
        logger.debug(f"Singular matching system at {cfg!r}: cond={condition_number:.3e}")
        raise SingularSystemError(condition_number, detail=cfg.model_dump())

    rhs = np.column_stack([rhs_up, rhs_down])
    lu_piv = linalg.lu_factor(M)
    z = linalg.lu_solve(lu_piv, rhs)

    residual = float(np.max(np.abs(M @ z - rhs)))
    Rmat = z[R_COLS, :]
    Tmat = z[T_COLS, :]

    flux = np.sum(np.abs(Tmat) ** 2, axis=0) + np.sum(np.abs(Rmat) ** 2, axis=0)
    conservation_defect = float(np.max(np.abs(1.0 - flux)))

    logger.debug(
        f"Oracle at ka={cfg.ka}, x={cfg.x}, gamma={cfg.gamma}: "
        f"cond={condition_number:.3e}, residual={residual:.3e}, defect={conservation_defect:.3e}"
    )

    if conservation_defect > TOLERANCES.conservation_failure:
        raise ConservationError(conservation_defect, detail=cfg.model_dump())

    return ScatteringSolution(
        Tmat=Tmat,
        Rmat=Rmat,
        residual=residual,
        conservation_defect=conservation_defect,
        condition_number=condition_number,
    )
