"""Exception hierarchy for Ring Gate."""

from typing import Any, Optional


class RingGateError(Exception):
    """Base exception for every error raised by the library."""

    def __init__(self, message: str, detail: Optional[Any] = None):
        self.message = message
        self.detail = detail
        super().__init__(message)


class InvalidParameterError(RingGateError, ValueError):
    """Out-of-range or non-finite argument."""


class DegeneratePointError(RingGateError):
    """The closed-form denominator vanishes (resonance pole)."""

    def __init__(self, ka: float, x: float, gamma: float, denominator: float):
        super().__init__(
            message=(
                f"Degenerate denominator |D|={denominator:.3e} at "
                f"ka={ka!r}, x={x!r}, gamma={gamma!r}"
            ),
            detail={"ka": ka, "x": x, "gamma": gamma, "denominator": denominator},
        )
        self.denominator = denominator


class SingularSystemError(RingGateError):
    """The junction-matching system is numerically singular."""

    def __init__(self, condition_number: float, detail: Optional[Any] = None):
        super().__init__(
            message=f"Singular matching system (condition number {condition_number:.3e})",
            detail=detail,
        )
        self.condition_number = condition_number


class ConservationError(RingGateError):
    """Probability flux is not conserved by an oracle solution."""

    def __init__(self, defect: float, detail: Optional[Any] = None):
        super().__init__(
            message=f"Probability conservation violated (defect {defect:.3e})",
            detail=detail,
        )
        self.defect = defect


class UnknownGateError(RingGateError, KeyError):
    """Requested target gate is not in the library."""

    def __init__(self, name: str):
        super().__init__(message=f"Unknown gate: {name!r}", detail={"name": name})

    def __str__(self) -> str:
        return self.message


# Errors that mark a parameter point as unusable rather than a user mistake
POINT_ERRORS = (DegeneratePointError, SingularSystemError, ConservationError)
