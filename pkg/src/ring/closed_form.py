"""Analytic transmission matrix of a Rashba ring and its gate decomposition.

For a carrier entering lead I the ring acts on the spin as

    T = |T| e^{i delta0/2} e^{-i gamma/2} U,

where U is unitary and unimodular. The two spin channels of the ring
decouple in the frame that follows the tilted spin axis; each channel is
a spinless two-arm ring threaded by its own Aharonov-Casher phase
``Phi_pm = pi (-1 +- w)``, and its transmission amplitude is the branch
value ``lambda_pm = |T| e^{i delta_pm}`` evaluated by :func:`branch_values`.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from src.core.config import TOLERANCES
from src.core.exceptions import DegeneratePointError, InvalidParameterError

from .spin_core import TWO_PI, RingConfig, spectral_params

logger = logging.getLogger(__name__)

# The scalar arctan form of delta only holds with the winding entering as
# w/2 per radian, and it returns -delta.
ARCTAN_WINDING = 0.5
ARCTAN_SIGN = -1.0


class GateKind(Enum):
    """Kind of single-qubit operation performed by one ring."""

    PHASE = "phase"
    ROTATION = "rotation"
    GENERIC = "generic"


@dataclass(frozen=True)
class GateLabel:
    """Result of :func:`classify_gate`.

    ``angle`` is gamma for a phase gate, 2*theta (about y) for a rotation,
    and None for a generic transformation.
    """

    kind: GateKind
    angle: Optional[float] = None

    def __str__(self) -> str:
        if self.kind is GateKind.PHASE:
            return f"PhaseGate({self.angle:.6g})"
        if self.kind is GateKind.ROTATION:
            return f"Rotation({self.angle:.6g} about y)"
        return "Generic"


@dataclass(frozen=True)
class TransmissionDecomposition:
    """Transmission matrix and its phase/unitary factorization."""

    t_mag: float
    delta_plus: float
    delta_minus: float
    delta0: float
    delta: float
    U: np.ndarray
    T: np.ndarray
    theta: float
    gamma: float

    @property
    def is_lossless(self) -> bool:
        return 1.0 - self.t_mag < TOLERANCES.lossless

    def to_dict(self) -> dict:
        """Plain-float view used by the table writers."""
        return {
            "t_mag": self.t_mag,
            "delta_plus": self.delta_plus,
            "delta_minus": self.delta_minus,
            "delta0": self.delta0,
            "delta": self.delta,
            "theta": self.theta,
            "gamma": self.gamma,
            "U": self.U,
            "T": self.T,
        }


def branch_values(ka, x, gamma) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Evaluate the two spin-channel amplitudes on broadcastable arrays.

    Args:
        ka: Lead wavenumber times radius.
        x: Spin-orbit ratio omega/Omega.
        gamma: Junction angle.

    Returns:
        Tuple (lambda_plus, lambda_minus, denominator, scale), where
        ``|denominator| / scale`` measures the distance from a resonance pole.
    """
    ka = np.asarray(ka, dtype=float)
    x = np.asarray(x, dtype=float)
    gamma = np.asarray(gamma, dtype=float)

    w = np.sqrt(1.0 + x * x)
    q = np.sqrt(0.25 * x * x + ka * ka)

    a_arm = np.sin(q * (TWO_PI - gamma))
    b_arm = np.sin(q * gamma)
    cos_phi = -np.cos(math.pi * w)

    denominator = (
        ka * ka * (np.cos(2.0 * q * (math.pi - gamma)) - np.cos(TWO_PI * q))
        + 4.0 * q * q * (cos_phi - np.cos(TWO_PI * q))
        + 4.0j * ka * q * np.sin(TWO_PI * q)
    )
    scale = ka * ka + 4.0 * q * q

    values = []
    for sign in (1.0, -1.0):
        phi = math.pi * (-1.0 + sign * w)
        numerator = 4.0j * ka * q * (a_arm + np.exp(1j * phi) * b_arm) * np.exp(-1j * gamma * phi / TWO_PI)
        with np.errstate(divide="ignore", invalid="ignore"):
            values.append(numerator / denominator)

    return values[0], values[1], denominator, scale


def fold_phases(delta_plus, delta_minus) -> Tuple[np.ndarray, np.ndarray]:
    """Reduce (delta_plus, delta_minus) to (delta, delta0).

    delta lies in (-pi, pi]; delta0 is shifted by the same multiple of 2*pi
    so that e^{i(delta0 +- delta)/2} = e^{i delta_pm}, then reported in
    (-2*pi, 2*pi].
    """
    delta_plus = np.asarray(delta_plus, dtype=float)
    delta_minus = np.asarray(delta_minus, dtype=float)
    fold = TOLERANCES.angle_fold

    raw = delta_plus - delta_minus
    delta = np.remainder(raw + math.pi, TWO_PI) - math.pi
    delta = np.where(delta <= -math.pi + fold, delta + TWO_PI, delta)
    shift = TWO_PI * np.round((delta - raw) / TWO_PI)
    delta = np.minimum(delta, math.pi)

    delta0 = delta_plus + delta_minus + shift
    delta0 = np.remainder(delta0 + TWO_PI, 2.0 * TWO_PI) - TWO_PI
    delta0 = np.where(delta0 <= -TWO_PI + fold, delta0 + 2.0 * TWO_PI, delta0)

    return delta, delta0


def unitary_factor(theta: float, delta: float, gamma: float) -> np.ndarray:
    """Unitary, unimodular spin factor U(theta, delta, gamma)."""
    c2 = math.cos(0.5 * theta) ** 2
    s2 = math.sin(0.5 * theta) ** 2

    u11 = (np.exp(0.5j * delta) * c2 + np.exp(-0.5j * delta) * s2) * np.exp(0.5j * gamma)
    u12 = 1j * math.sin(0.5 * delta) * math.sin(theta) * np.exp(-0.5j * gamma)

    return np.array([[u11, u12], [-np.conj(u12), np.conj(u11)]], dtype=complex)


def rotation_matrix(theta: float) -> np.ndarray:
    """Real rotation [[cos, -sin], [sin, cos]], a spin rotation by 2*theta about y."""
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]], dtype=complex)


def _check_denominator(ka: float, x: float, gamma: float, denominator: complex, scale: float) -> None:
    if not abs(denominator) >= TOLERANCES.degenerate_denominator * scale:
        logger.debug(f"Degenerate point ka={ka}, x={x}, gamma={gamma}: |D|={abs(denominator):.3e}")
        raise DegeneratePointError(ka=ka, x=x, gamma=gamma, denominator=abs(denominator))


def transmission(cfg: RingConfig) -> TransmissionDecomposition:
    """Transmission matrix of a ring with junction angle ``cfg.gamma``.

    Args:
        cfg: Ring configuration.

    Returns:
        TransmissionDecomposition with T assembled from (t_mag, delta0, U).

    Raises:
        DegeneratePointError: At a resonance pole of the closed form.
    """
    lam_p, lam_m, denominator, scale = branch_values(cfg.ka, cfg.x, cfg.gamma)
    _check_denominator(cfg.ka, cfg.x, cfg.gamma, complex(denominator), float(scale))

    lam_p, lam_m = complex(lam_p), complex(lam_m)
    t_mag = 0.5 * (abs(lam_p) + abs(lam_m))
    delta_plus, delta_minus = np.angle(lam_p), np.angle(lam_m)
    delta, delta0 = (float(v) for v in fold_phases(delta_plus, delta_minus))

    theta = spectral_params(cfg).theta
    U = unitary_factor(theta, delta, cfg.gamma)
    T = t_mag * np.exp(0.5j * delta0) * np.exp(-0.5j * cfg.gamma) * U

    return TransmissionDecomposition(
        t_mag=t_mag,
        delta_plus=float(delta_plus),
        delta_minus=float(delta_minus),
        delta0=delta0,
        delta=delta,
        U=U,
        T=T,
        theta=theta,
        gamma=cfg.gamma,
    )


def transmission_diametric(ka: float, x: float) -> TransmissionDecomposition:
    """Transmission of a diametric ring (gamma = pi).

    T = |T| e^{i(delta0+pi)/2} R(theta). The amplitude
    8i ka q sin(pi q) cos(Phi_+/2) / D is the branch value of the Phi_+
    channel, |T| e^{i delta_plus}; delta is pi at every energy.

    Raises:
        InvalidParameterError: If ka <= 0 or x < 0.
        DegeneratePointError: At a resonance pole.
    """
    if not (math.isfinite(ka) and ka > 0):
        raise InvalidParameterError(f"ka must be positive, got {ka!r}")
    if not (math.isfinite(x) and x >= 0):
        raise InvalidParameterError(f"x must be finite and non-negative, got {x!r}")

    w = math.sqrt(1.0 + x * x)
    q = math.sqrt(0.25 * x * x + ka * ka)
    theta = -math.atan(x)
    phi_plus = math.pi * (w - 1.0)

    cos_2pq = math.cos(TWO_PI * q)
    denominator = (
        ka * ka * (1.0 - cos_2pq)
        + 4.0 * q * q * (math.cos(phi_plus) - cos_2pq)
        + 4.0j * ka * q * math.sin(TWO_PI * q)
    )
    _check_denominator(ka, x, math.pi, denominator, ka * ka + 4.0 * q * q)

    amplitude = 8.0j * ka * q * math.sin(math.pi * q) * math.cos(0.5 * phi_plus) / denominator

    t_mag = abs(amplitude)
    delta_plus = float(np.angle(amplitude))
    delta_minus = float(np.angle(-amplitude))
    _, delta0 = fold_phases(delta_plus, delta_plus - math.pi)
    delta0 = float(delta0)

    U = rotation_matrix(theta)
    T = t_mag * np.exp(0.5j * (delta0 + math.pi)) * U

    return TransmissionDecomposition(
        t_mag=t_mag,
        delta_plus=delta_plus,
        delta_minus=delta_minus,
        delta0=delta0,
        delta=math.pi,
        U=U,
        T=T,
        theta=theta,
        gamma=math.pi,
    )


def relative_phase_arctan(cfg: RingConfig) -> float:
    """Scalar arctan expression for the relative phase.

    Kept as a cross-check of the branch-value phases: with
    :data:`ARCTAN_WINDING` and :data:`ARCTAN_SIGN`,
    e^{i ARCTAN_SIGN * result} equals e^{i delta}.
    """
    spec = spectral_params(cfg)
    q, gamma = spec.q, cfg.gamma
    winding = ARCTAN_WINDING * spec.w

    a_arm = math.sin(q * (TWO_PI - gamma))
    b_arm = math.sin(q * gamma)

    num = math.sin(winding * gamma) * a_arm + math.sin(winding * (TWO_PI - gamma)) * b_arm
    den = math.cos(winding * gamma) * a_arm - math.cos(winding * (TWO_PI - gamma)) * b_arm

    if den == 0.0:
        return math.copysign(math.pi, num)
    return 2.0 * math.atan(num / den)


def classify_gate(dec: TransmissionDecomposition, cfg: RingConfig, tol: Optional[float] = None) -> GateLabel:
    """Label the spin action of one ring.

    Args:
        dec: Decomposition computed for ``cfg``.
        cfg: Ring configuration.
        tol: Angle tolerance, defaults to the gate-classification tolerance.

    Returns:
        PhaseGate(gamma) when |delta| < tol, Rotation(2*theta) for a
        diametric ring with delta = pi, Generic otherwise.
    """
    tol = TOLERANCES.gate_classification if tol is None else tol

    if abs(dec.delta) < tol:
        return GateLabel(GateKind.PHASE, cfg.gamma)
    if abs(cfg.gamma - math.pi) < tol and abs(dec.delta - math.pi) < tol:
        return GateLabel(GateKind.ROTATION, 2.0 * dec.theta)
    return GateLabel(GateKind.GENERIC)


def transmission_grid(ka, x, gamma):
    """Vectorized efficiency and phases on broadcastable parameter arrays.

    Degenerate points carry NaN values and a True mask entry; they are
    never dropped.

    Returns:
        Tuple (t_mag, delta, delta0, degenerate_mask) of equal-shape arrays.
    """
    lam_p, lam_m, denominator, scale = branch_values(ka, x, gamma)
    degenerate = ~(np.abs(denominator) >= TOLERANCES.degenerate_denominator * scale)

    t_mag = 0.5 * (np.abs(lam_p) + np.abs(lam_m))
    delta, delta0 = fold_phases(np.angle(lam_p), np.angle(lam_m))

    t_mag = np.where(degenerate, np.nan, t_mag)
    delta = np.where(degenerate, np.nan, delta)
    delta0 = np.where(degenerate, np.nan, delta0)

    n_bad = int(np.count_nonzero(degenerate))
    if n_bad:
        logger.debug(f"{n_bad} degenerate point(s) flagged in grid of {degenerate.size}")

    return t_mag, delta, delta0, degenerate
