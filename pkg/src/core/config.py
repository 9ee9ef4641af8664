"""Configuration management for Ring Gate.

Run-time settings come from the environment (and an optional ``.env`` file).
Numerical tolerances and the default exploration window are fixed tables:
they are part of the physics contract, not deployment knobs.
"""

from dataclasses import dataclass
from typing import Tuple

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables.

    Only the worker count is read from the environment
    (``RINGGATE_MAX_WORKERS``).
    """

    model_config = SettingsConfigDict(
        env_prefix="RINGGATE_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Processing
    max_workers: int = Field(default=1, ge=1, le=64)


@dataclass(frozen=True)
class Tolerances:
    """Numerical tolerances shared by the engines and the analysis layer."""

    # Closed form: |D| / (ka**2 + 4 q**2) below this is a 0/0 resonance pole
    degenerate_denominator: float = 1e-10
    # Oracle: condition number above this is a singular system
    singular_condition: float = 1e12
    # Oracle: conservation defect above this signals broken junction signs
    conservation_failure: float = 1e-8
    # Root refinement target and on-curve acceptance for |delta|
    root_target: float = 1e-10
    on_curve: float = 1e-8
    # 1 - t_mag below this is a lossless point
    lossless: float = 1e-6
    # Gate classification and angle folding
    gate_classification: float = 1e-9
    angle_fold: float = 1e-12


@dataclass(frozen=True)
class ExplorationWindow:
    """Default desk-scale window around k_F a = 20.4."""

    ka_range: Tuple[float, float] = (19.0, 22.0)
    x_range: Tuple[float, float] = (0.0, 3.5)
    # delta is ill-conditioned at zero coupling, curves start slightly above it
    curve_x_range: Tuple[float, float] = (0.1, 3.5)
    scan_resolution: Tuple[int, int] = (500, 350)
    curve_resolution: Tuple[int, int] = (601, 171)
    diametric_resolution: int = 3001


TOLERANCES = Tolerances()
DEFAULT_WINDOW = ExplorationWindow()

# Global settings instance
settings = Settings()
