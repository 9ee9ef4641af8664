"""Single-qubit gate algebra for rings in series.

A carrier meets the items of a sequence left to right, so the composed
matrix is ``M_n ... M_2 M_1``. Ring items contribute their full
transmission matrix (efficiency and global phase included); ideal items
contribute only a unitary part. Gate identities are judged with
:func:`fidelity_up_to_phase`, which ignores the global phase.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Union

import numpy as np

from src.core.config import TOLERANCES
from src.core.exceptions import InvalidParameterError, UnknownGateError
from src.ring.closed_form import rotation_matrix, transmission
from src.ring.oracle import solve_scattering
from src.ring.spin_core import RingConfig

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
METHODS = ("closed", "oracle")

# Physical tilt at x = 1 (tan theta = -x)
QUARTER_TILT = -math.pi / 4

_H = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2.0)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)


@dataclass(frozen=True)
class PhaseElement:
    """Ideal phase gate diag(1, e^{-i gamma}), a lossless ring with delta = 0."""

    gamma: float

    def matrix(self) -> np.ndarray:
        return ideal_phase_gate(self.gamma)


@dataclass(frozen=True)
class RotationElement:
    """Ideal diametric ring: rotation by 2*theta about y."""

    theta: float

    def matrix(self) -> np.ndarray:
        return ideal_rotation(self.theta)


SequenceItem = Union[RingConfig, PhaseElement, RotationElement, "GateSequence"]


@dataclass
class GateSequence:
    """Result of composing rings and ideal elements in series."""

    items: List[SequenceItem]
    composed: np.ndarray
    total_efficiency: float
    efficiencies: List[float] = field(default_factory=list)
    link_phases: List[complex] = field(default_factory=list)
    method: str = "closed"
    unitary_only: bool = False
    warnings: List[str] = field(default_factory=list)

    @property
    def is_lossless(self) -> bool:
        return 1.0 - self.total_efficiency < TOLERANCES.lossless

    def fidelities(self) -> Dict[str, float]:
        """Fidelity of the composed matrix with X, Z and H."""
        return gate_fidelities(self.composed)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            'schema_version': SCHEMA_VERSION,
            'params': {
                'method': self.method,
                'unitary_only': self.unitary_only,
                'link_phases': [float(np.angle(p)) for p in self.link_phases],
            },
            'rows': [_item_to_row(item) for item in self.items],
            'composed': _matrix_to_rows(self.composed),
            'total_efficiency': self.total_efficiency,
            'efficiencies': list(self.efficiencies),
            'fidelities': self.fidelities(),
            'warnings': list(self.warnings),
        }

    @classmethod
    def from_dict(
        cls,
        data: Dict[str, Any],
        method: Optional[str] = None,
        unitary_only: Optional[bool] = None,
    ) -> "GateSequence":
        """Rebuild and recompose a sequence from its JSON form.

        Args:
            data: Mapping with ``rows`` and optional ``params``.
            method: Overrides ``params.method`` when given.
            unitary_only: Overrides ``params.unitary_only`` when given.

        Raises:
            InvalidParameterError: On a malformed document.
        """
        if not isinstance(data, dict):
            raise InvalidParameterError("Sequence document must be a JSON object")
        version = data.get('schema_version', SCHEMA_VERSION)
        if version != SCHEMA_VERSION:
            raise InvalidParameterError(f"Unsupported schema_version: {version!r}")

        params = data.get('params') or {}
        rows = data.get('rows')
        if not isinstance(rows, list) or not rows:
            raise InvalidParameterError("Sequence document needs a non-empty 'rows' list")

        method = method or params.get('method', 'closed')
        if unitary_only is None:
            unitary_only = bool(params.get('unitary_only', False))

        items = [_row_to_item(row, method, unitary_only) for row in rows]
        phases = params.get('link_phases') or None
        link_phases = [np.exp(1j * float(a)) for a in phases] if phases else None

        return compose(
            items,
            method=method,
            link_phases=link_phases,
            unitary_only=unitary_only,
        )


def _matrix_to_rows(m: np.ndarray) -> List[List[Dict[str, float]]]:
    return [[{'re': float(v.real), 'im': float(v.imag)} for v in row] for row in np.asarray(m, dtype=complex)]


def _item_to_row(item: SequenceItem) -> Dict[str, Any]:
    if isinstance(item, RingConfig):
        return {'kind': 'ring', 'ka': item.ka, 'x': item.x, 'gamma': item.gamma}
    if isinstance(item, PhaseElement):
        return {'kind': 'phase', 'gamma': item.gamma}
    if isinstance(item, RotationElement):
        return {'kind': 'rotation', 'theta': item.theta}
    if isinstance(item, GateSequence):
        return {
            'kind': 'sequence',
            'rows': [_item_to_row(i) for i in item.items],
            'link_phases': [float(np.angle(p)) for p in item.link_phases],
        }
    raise InvalidParameterError(f"Unsupported sequence item: {item!r}")


def _row_to_item(row: Dict[str, Any], method: str, unitary_only: bool) -> SequenceItem:
    if not isinstance(row, dict):
        raise InvalidParameterError(f"Sequence row must be an object, got {row!r}")

    kind = row.get('kind')
    try:
        if kind == 'ring':
            return RingConfig(ka=row['ka'], x=row.get('x', 0.0), gamma=row.get('gamma', math.pi))
        if kind == 'phase':
            return PhaseElement(gamma=float(row['gamma']))
        if kind == 'rotation':
            return RotationElement(theta=float(row['theta']))
        if kind == 'sequence':
            nested = {'rows': row.get('rows'), 'params': {'link_phases': row.get('link_phases')}}
            return GateSequence.from_dict(nested, method=method, unitary_only=unitary_only)
    except KeyError as e:
        raise InvalidParameterError(f"Row of kind {kind!r} is missing field {e}") from e
    except (TypeError, ValueError) as e:
        raise InvalidParameterError(f"Invalid row {row!r}: {e}") from e

    raise InvalidParameterError(f"Unknown row kind: {kind!r}")


def _as_matrix(m: Any, name: str) -> np.ndarray:
    arr = np.asarray(m, dtype=complex)
    if arr.shape != (2, 2):
        raise InvalidParameterError(f"{name} must be a 2x2 matrix, got shape {arr.shape}")
    return arr


def fidelity_up_to_phase(a: Any, b: Any) -> float:
    """Phase-insensitive overlap |tr(A^H B)| / sqrt(tr(A^H A) tr(B^H B)).

    Equals 1 exactly when A and B differ by a complex scalar.

    Raises:
        InvalidParameterError: If either matrix is zero or not 2x2.
    """
    a = _as_matrix(a, "A")
    b = _as_matrix(b, "B")

    norm = math.sqrt(np.vdot(a, a).real * np.vdot(b, b).real)
    if norm == 0.0:
        raise InvalidParameterError("Fidelity is undefined for a zero matrix")

    return min(1.0, abs(np.vdot(a, b)) / norm)


def ideal_phase_gate(gamma: float) -> np.ndarray:
    """diag(1, e^{-i gamma})."""
    return np.diag([1.0, np.exp(-1j * gamma)]).astype(complex)


def ideal_rotation(theta: float) -> np.ndarray:
    """Unitary part of a diametric ring with tilt ``theta``."""
    return rotation_matrix(theta)


def target_library(name: str, angle: Optional[float] = None) -> np.ndarray:
    """Conventional matrix of a named target gate.

    Args:
        name: One of X, Z, H, Phase, Ry (case-insensitive).
        angle: Required for Phase (gamma) and Ry (rotation angle).

    Raises:
        UnknownGateError: If the name is not in the library.
        InvalidParameterError: If a parametrized gate lacks its angle.
    """
    key = name.strip().lower()

    if key == 'x':
        return _X.copy()
    if key == 'z':
        return _Z.copy()
    if key == 'h':
        return _H.copy()
    if key in ('phase', 'ry'):
        if angle is None or not math.isfinite(angle):
            raise InvalidParameterError(f"Gate {name!r} needs a finite angle")
        if key == 'phase':
            return ideal_phase_gate(angle)
        return rotation_matrix(0.5 * angle)

    raise UnknownGateError(name)


def gate_fidelities(matrix: Any) -> Dict[str, float]:
    """Fidelity of ``matrix`` with X, Z and H."""
    return {name: fidelity_up_to_phase(matrix, target_library(name)) for name in ('X', 'Z', 'H')}


def compose_unitaries(matrices: Sequence[Any]) -> np.ndarray:
    """Product of bare 2x2 matrices, first listed acting first."""
    result = np.eye(2, dtype=complex)
    for i, m in enumerate(matrices):
        result = _as_matrix(m, f"matrix {i}") @ result
    return result


def _element(item: SequenceItem, method: str, unitary_only: bool):
    """Matrix, efficiency and warnings contributed by one item."""
    if isinstance(item, (PhaseElement, RotationElement)):
        return item.matrix(), 1.0, []
    if isinstance(item, GateSequence):
        # nested sequences follow the outer engine settings
        if item.method != method or item.unitary_only != unitary_only:
            item = compose(item.items, method=method, link_phases=item.link_phases, unitary_only=unitary_only)
        return item.composed, item.total_efficiency, list(item.warnings)
    if isinstance(item, RingConfig):
        if unitary_only:
            return transmission(item).U, 1.0, []
        if method == 'oracle':
            sol = solve_scattering(item)
            return sol.Tmat, sol.efficiency, []
        dec = transmission(item)
        return dec.T, dec.t_mag, []
    raise InvalidParameterError(f"Unsupported sequence item: {item!r}")


def compose(
    items: Sequence[SequenceItem],
    method: str = 'closed',
    link_phases: Optional[Sequence[complex]] = None,
    unitary_only: bool = False,
) -> GateSequence:
    """Compose rings and ideal elements in series.

    Args:
        items: Elements in the order the carrier meets them.
        method: ``closed`` (closed form) or ``oracle`` (matching solver) for rings.
        link_phases: Unit-modulus phases picked up between consecutive
            items, one per link; all 1 by default.
        unitary_only: Replace each ring by the unitary factor U of its
            closed-form decomposition, an ideal lossless element.

    Returns:
        GateSequence with the composed matrix and efficiency bookkeeping.

    Raises:
        InvalidParameterError: On bad method, empty sequence or bad link phases.
        DegeneratePointError: Propagated from a ring at a resonance pole.
    """
    if method not in METHODS:
        raise InvalidParameterError(f"method must be one of {METHODS}, got {method!r}")
    items = list(items)
    if not items:
        raise InvalidParameterError("Cannot compose an empty sequence")

    n_links = len(items) - 1
    if link_phases is None:
        phases = [1.0 + 0.0j] * n_links
    else:
        phases = [complex(p) for p in link_phases]
        if len(phases) != n_links:
            raise InvalidParameterError(f"Expected {n_links} link phase(s), got {len(phases)}")
        for p in phases:
            if not abs(abs(p) - 1.0) < 1e-12:
                raise InvalidParameterError(f"Link phase must have unit modulus, got {p!r}")

    composed = np.eye(2, dtype=complex)
    total = 1.0
    efficiencies: List[float] = []
    warnings: List[str] = []

    for i, item in enumerate(items):
        matrix, efficiency, inner_warnings = _element(item, method, unitary_only)
        if i > 0:
            composed = phases[i - 1] * composed
        composed = matrix @ composed
        total *= efficiency
        efficiencies.append(efficiency)

        warnings.extend(f"item {i}: {w}" for w in inner_warnings)
        if isinstance(item, RingConfig) and efficiency < 1.0 - TOLERANCES.lossless:
            message = f"item {i}: lossy element, t_mag={efficiency:.6f}"
            logger.warning(message)
            warnings.append(message)

    logger.debug(f"Composed {len(items)} item(s) with method={method}, efficiency={total:.6g}")

    return GateSequence(
        items=items,
        composed=composed,
        total_efficiency=total,
        efficiencies=efficiencies,
        link_phases=phases,
        method=method,
        unitary_only=unitary_only,
        warnings=warnings,
    )


def z_recipe() -> List[SequenceItem]:
    """Z from two quarter phase gates: diag(1, -i)^2 = Z."""
    return [PhaseElement(math.pi / 2), PhaseElement(math.pi / 2)]


def hadamard_recipe(theta: float = QUARTER_TILT) -> List[SequenceItem]:
    """H = Z R(theta) for theta = -pi/4: the diametric ring first, then Z."""
    return [RotationElement(theta)] + z_recipe()


def not_recipe(theta: float = QUARTER_TILT) -> List[SequenceItem]:
    """X = Z R(theta) R(theta) for theta = -pi/4.

    Two diametric rings followed by two quarter phase gates. Placing the
    phase gates between the rings gives R Z R = Z instead.
    """
    return [RotationElement(theta), RotationElement(theta)] + z_recipe()


RECIPES = {
    'Z': z_recipe,
    'H': hadamard_recipe,
    'X': not_recipe,
}
