"""Parameter-space exploration for Ring Gate.

This package provides:
- scan: efficiency surfaces over (ka, x) at fixed junction angle
- curves: phase-gate (delta = 0) curves and lossless points

Example:
    >>> from src.analysis import delta_zero_curves, lossless_points
    >>> curves = delta_zero_curves(gamma=1.5707963267948966)
    >>> points = [p for c in curves for p in lossless_points(c)]
"""

from .scan import ScanGrid, scan_grid, spinless_efficiency
from .curves import (
    Curve,
    CurvePoint,
    delta_zero_curves,
    evaluate_point,
    lossless_points,
    lossless_points_diametric,
    row_roots,
)

__all__ = [
    'ScanGrid',
    'scan_grid',
    'spinless_efficiency',
    'Curve',
    'CurvePoint',
    'delta_zero_curves',
    'evaluate_point',
    'lossless_points',
    'lossless_points_diametric',
    'row_roots',
]
