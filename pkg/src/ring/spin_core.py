"""Spectral quantities and eigenspinors of a Rashba ring.

All quantities are dimensionless: lengths in units of the radius ``a``,
energies in units of hbar*Omega = hbar**2 / (2 m* a**2). The ring
Hamiltonian is

    H = (-i d/dphi + (x/2) sigma_r(phi))**2 - x**2/4,
    sigma_r(phi) = sigma_x cos(phi) + sigma_y sin(phi),

and a carrier of lead wavenumber k has E / hbar*Omega = (ka)**2.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.core.exceptions import InvalidParameterError

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]

TWO_PI = 2.0 * math.pi

# Order of the four arm basis states: (j, mu)
STATE_ORDER: Tuple[Tuple[int, int], ...] = ((1, 1), (2, 1), (1, -1), (2, -1))

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)


class RingConfig(BaseModel):
    """Dimensionless description of a ring and its junctions."""

    model_config = ConfigDict(frozen=True)

    ka: float = Field(..., gt=0.0, description="Lead wavenumber times radius")
    x: float = Field(default=0.0, ge=0.0, description="Spin-orbit ratio omega/Omega")
    gamma: float = Field(default=math.pi, gt=0.0, lt=TWO_PI, description="Junction angle")

    @field_validator("ka", "x", "gamma")
    @classmethod
    def validate_finite(cls, v: float) -> float:
        """Reject NaN and infinities."""
        if not math.isfinite(v):
            raise ValueError(f"Value must be finite, got {v}")
        return v


@dataclass(frozen=True)
class SpectralSet:
    """Spectral data of the ring at the carrier energy."""

    w: float
    theta: float
    q: float
    kappa: Dict[Tuple[int, int], float]
    phi_plus: float
    phi_minus: float

    def energy(self, j: int, mu: int) -> float:
        """Energy (units of hbar*Omega) of the (j, mu) branch."""
        k = self.kappa[(j, mu)]
        return k * k - mu * k * self.w + 0.25


@dataclass(frozen=True)
class RingEigenstate:
    """Simultaneous eigenstate of H, K = L_z + S_z and the tilted spin."""

    kappa: float
    mu: int
    u: complex
    v: complex


def _check_mu(mu: int) -> None:
    if mu not in (1, -1):
        raise InvalidParameterError(f"mu must be +1 or -1, got {mu!r}")


def _check_x(x: float) -> None:
    if not (math.isfinite(x) and x >= 0):
        raise InvalidParameterError(f"x must be finite and non-negative, got {x!r}")


def spectral_params(cfg: RingConfig) -> SpectralSet:
    """Compute w, theta, q, the four kappa values and the AC phases.

    Args:
        cfg: Ring configuration.

    Returns:
        SpectralSet for the carrier energy (ka)**2.
    """
    x = cfg.x
    w = math.sqrt(1.0 + x * x)
    theta = -math.atan(x)
    q = math.sqrt(0.25 * x * x + cfg.ka * cfg.ka)

    kappa = {(j, mu): mu * (0.5 * w + (-1) ** j * q) for j, mu in STATE_ORDER}

    return SpectralSet(
        w=w,
        theta=theta,
        q=q,
        kappa=kappa,
        phi_plus=math.pi * (-1.0 + w),
        phi_minus=math.pi * (-1.0 - w),
    )


def eigenspinor(mu: int, x: float) -> Tuple[float, float]:
    """Normalized spinor (u, v) of the mu branch.

    Half-angle form of v/u = (1 - mu*w)/x, continuous at x = 0:
    mu=+1 -> (cos(theta/2), sin(theta/2)), mu=-1 -> (-sin(theta/2), cos(theta/2)),
    so u is real and non-negative.
    """
    _check_mu(mu)
    _check_x(x)

    half = -0.5 * math.atan(x)
    if mu == 1:
        return math.cos(half), math.sin(half)
    return -math.sin(half), math.cos(half)


def ring_states(cfg: RingConfig) -> List[RingEigenstate]:
    """The four degenerate arm basis states, in :data:`STATE_ORDER`."""
    spec = spectral_params(cfg)
    states = []
    for j, mu in STATE_ORDER:
        u, v = eigenspinor(mu, cfg.x)
        states.append(RingEigenstate(kappa=spec.kappa[(j, mu)], mu=mu, u=complex(u), v=complex(v)))
    return states


def eval_ring_state(state: RingEigenstate, phi: ArrayLike) -> np.ndarray:
    """psi(kappa, phi) = exp(i kappa phi) (exp(-i phi/2) u, exp(i phi/2) v).

    Returns an array of shape (2,) for scalar phi, (2, N) for an array.
    """
    phi = np.asarray(phi, dtype=float)
    return np.array([
        np.exp(1j * (state.kappa - 0.5) * phi) * state.u,
        np.exp(1j * (state.kappa + 0.5) * phi) * state.v,
    ])


def ring_state_derivative(state: RingEigenstate, phi: ArrayLike) -> np.ndarray:
    """Exact d psi / d phi."""
    phi = np.asarray(phi, dtype=float)
    return np.array([
        1j * (state.kappa - 0.5) * np.exp(1j * (state.kappa - 0.5) * phi) * state.u,
        1j * (state.kappa + 0.5) * np.exp(1j * (state.kappa + 0.5) * phi) * state.v,
    ])


def sigma_radial(phi: float) -> np.ndarray:
    """sigma_x cos(phi) + sigma_y sin(phi)."""
    return np.array([[0.0, np.exp(-1j * phi)], [np.exp(1j * phi), 0.0]], dtype=complex)


def _apply_sigma_radial(psi: np.ndarray, phi: np.ndarray) -> np.ndarray:
    return np.array([np.exp(-1j * phi) * psi[1], np.exp(1j * phi) * psi[0]])


def _apply_sigma_azimuthal(psi: np.ndarray, phi: np.ndarray) -> np.ndarray:
    # d sigma_r / d phi = -sigma_x sin(phi) + sigma_y cos(phi)
    return np.array([-1j * np.exp(-1j * phi) * psi[1], 1j * np.exp(1j * phi) * psi[0]])


def ring_momentum(state: RingEigenstate, phi: ArrayLike, x: float) -> np.ndarray:
    """Generalized tangential momentum (-i d/dphi + (x/2) sigma_r) psi.

    Oriented along increasing phi; the oracle flips the sign for branches
    that leave a junction towards decreasing phi.
    """
    phi = np.asarray(phi, dtype=float)
    psi = eval_ring_state(state, phi)
    return -1j * ring_state_derivative(state, phi) + 0.5 * x * _apply_sigma_radial(psi, phi)


def spin_operator_tilted(theta: float, phi: float) -> np.ndarray:
    """S_theta_phi, the spin component along the tilted local axis."""
    return 0.5 * (
        SIGMA_X * math.sin(theta) * math.cos(phi)
        + SIGMA_Y * math.sin(theta) * math.sin(phi)
        + SIGMA_Z * math.cos(theta)
    )


def apply_hamiltonian_fd(state: RingEigenstate, x: float, phi: ArrayLike, h: float) -> np.ndarray:
    """Apply the ring Hamiltonian with second-order central differences.

    Expanded form: H psi = -psi'' - i x sigma_r psi' - i (x/2) sigma_phi psi.

    Args:
        state: Eigenstate to differentiate numerically.
        x: Spin-orbit ratio.
        phi: Evaluation angles.
        h: Grid spacing.

    Returns:
        H psi at ``phi`` in units of hbar*Omega.
    """
    if not h > 0:
        raise InvalidParameterError(f"Grid spacing must be positive, got {h!r}")

    phi = np.asarray(phi, dtype=float)
    psi = eval_ring_state(state, phi)
    psi_fwd = eval_ring_state(state, phi + h)
    psi_bwd = eval_ring_state(state, phi - h)

    d1 = (psi_fwd - psi_bwd) / (2.0 * h)
    d2 = (psi_fwd - 2.0 * psi + psi_bwd) / (h * h)

    return -d2 - 1j * x * _apply_sigma_radial(d1, phi) - 0.5j * x * _apply_sigma_azimuthal(psi, phi)
