"""Efficiency surfaces over (ka, x) at a fixed junction angle."""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

import numpy as np
from tqdm import tqdm

from src.core.config import DEFAULT_WINDOW, settings
from src.core.exceptions import InvalidParameterError
from src.ring.closed_form import transmission_grid

logger = logging.getLogger(__name__)

Range = Tuple[float, float]


@dataclass(frozen=True)
class ScanGrid:
    """Closed-form efficiency and phases on a rectangular (ka, x) grid.

    Cell arrays have shape (len(ka_axis), len(x_axis)). Degenerate cells
    hold NaN and are marked in ``degenerate``.
    """

    ka_axis: np.ndarray
    x_axis: np.ndarray
    gamma: float
    t_mag: np.ndarray
    delta: np.ndarray
    delta0: np.ndarray
    degenerate: np.ndarray

    @property
    def shape(self) -> Tuple[int, int]:
        return self.t_mag.shape

    def max_efficiency(self) -> float:
        """Largest finite t_mag on the grid."""
        return float(np.nanmax(self.t_mag))

    def column(self, x_index: int) -> np.ndarray:
        """t_mag along ka at ``x_axis[x_index]``."""
        return self.t_mag[:, x_index]

    def iter_cells(self) -> Iterator[Tuple[float, float, float, float, float, float, bool]]:
        """Yield (ka, x, gamma, t_mag, delta, delta0, degenerate), x outer."""
        for j, x in enumerate(self.x_axis):
            for i, ka in enumerate(self.ka_axis):
                yield (
                    float(ka),
                    float(x),
                    self.gamma,
                    float(self.t_mag[i, j]),
                    float(self.delta[i, j]),
                    float(self.delta0[i, j]),
                    bool(self.degenerate[i, j]),
                )


def make_axis(bounds: Range, n: int, name: str, lower: float, strict: bool) -> np.ndarray:
    """Validated, strictly increasing sample axis."""
    lo, hi = bounds
    if not (math.isfinite(lo) and math.isfinite(hi) and hi > lo):
        raise InvalidParameterError(f"{name} range must be finite and increasing, got {bounds!r}")
    if lo < lower or (strict and lo == lower):
        relation = ">" if strict else ">="
        raise InvalidParameterError(f"{name} range must start {relation} {lower}, got {lo!r}")
    if n < 2:
        raise InvalidParameterError(f"{name} resolution must be at least 2, got {n!r}")
    return np.linspace(lo, hi, n)


def scan_grid(
    gamma: float,
    ka_range: Range = DEFAULT_WINDOW.ka_range,
    x_range: Range = DEFAULT_WINDOW.x_range,
    resolution: Tuple[int, int] = DEFAULT_WINDOW.scan_resolution,
    max_workers: Optional[int] = None,
    progress: bool = False,
) -> ScanGrid:
    """Evaluate the closed form on a (ka, x) grid.

    Rows of constant x are evaluated on a thread pool; assembly follows the
    axis order, so the result does not depend on scheduling.

    Args:
        gamma: Junction angle in (0, 2*pi).
        ka_range: (min, max) of ka, min > 0.
        x_range: (min, max) of x, min >= 0.
        resolution: Number of samples along (ka, x).
        max_workers: Thread count, defaults to ``settings.max_workers``.
        progress: Show a progress bar on stderr.

    Returns:
        ScanGrid with degenerate points flagged.
    """
    if not (math.isfinite(gamma) and 0.0 < gamma < 2.0 * math.pi):
        raise InvalidParameterError(f"gamma must lie in (0, 2*pi), got {gamma!r}")

    ka_axis = make_axis(ka_range, resolution[0], "ka", 0.0, strict=True)
    x_axis = make_axis(x_range, resolution[1], "x", 0.0, strict=False)
    workers = max_workers or settings.max_workers

    logger.info(
        f"Scanning gamma={gamma:.6g} over {len(ka_axis)}x{len(x_axis)} points with {workers} worker(s)"
    )

    def evaluate_row(x: float):
        return transmission_grid(ka_axis, x, gamma)

    with ThreadPoolExecutor(max_workers=workers) as executor:
        rows = list(tqdm(
            executor.map(evaluate_row, x_axis),
            total=len(x_axis),
            desc="scan",
            unit="row",
            disable=not progress,
        ))

    t_mag, delta, delta0, degenerate = (np.column_stack([row[k] for row in rows]) for k in range(4))

    n_bad = int(np.count_nonzero(degenerate))
    if n_bad:
        logger.info(f"{n_bad} degenerate point(s) flagged")

    return ScanGrid(
        ka_axis=ka_axis,
        x_axis=x_axis,
        gamma=float(gamma),
        t_mag=t_mag,
        delta=delta,
        delta0=delta0,
        degenerate=degenerate.astype(bool),
    )


def spinless_efficiency(ka, gamma: float = math.pi) -> np.ndarray:
    """Efficiency of a ring without spin-orbit coupling.

    Reference for the x = 0 column. At gamma = pi the common sin(pi ka)
    factor cancels and |T| = 8 / sqrt(100 sin^2(pi ka) + 64 cos^2(pi ka)).
    """
    ka = np.asarray(ka, dtype=float)
    if math.isclose(gamma, math.pi, rel_tol=0.0, abs_tol=1e-15):
        s = np.sin(math.pi * ka)
        c = np.cos(math.pi * ka)
        return 8.0 / np.sqrt(100.0 * s * s + 64.0 * c * c)

    numerator = 4.0 * (np.sin(ka * (2.0 * math.pi - gamma)) + np.sin(ka * gamma))
    denominator = (
        np.cos(2.0 * ka * (math.pi - gamma)) - np.cos(2.0 * math.pi * ka)
        + 4.0 * (1.0 - np.cos(2.0 * math.pi * ka))
        + 4.0j * np.sin(2.0 * math.pi * ka)
    )
    return np.abs(numerator / denominator)
