"""Phase-gate curves (delta = 0) and lossless points.

Along a line of constant x the relative phase delta is lifted to a
continuous function of ka; every crossing of a multiple of 2*pi is a
phase-gate root. Roots are refined by bracketing on the closed form and
linked across x rows into polylines.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from src.core.config import DEFAULT_WINDOW, TOLERANCES
from src.core.exceptions import InvalidParameterError
from src.ring.closed_form import transmission_grid

from .scan import Range, make_axis

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class CurvePoint:
    """A refined point of the (ka, x) plane, re-evaluated on the closed form."""

    ka: float
    x: float
    t_mag: float
    delta: float


@dataclass
class Curve:
    """Polyline of phase-gate points, ordered by increasing x."""

    gamma: float
    points: List[CurvePoint] = field(default_factory=list)
    # Largest allowed distance between consecutive points
    step_bound: float = math.inf

    def __len__(self) -> int:
        return len(self.points)

    @property
    def ka(self) -> np.ndarray:
        return np.array([p.ka for p in self.points])

    @property
    def x(self) -> np.ndarray:
        return np.array([p.x for p in self.points])

    @property
    def t_mag(self) -> np.ndarray:
        return np.array([p.t_mag for p in self.points])


def evaluate_point(ka: float, x: float, gamma: float) -> Tuple[float, float]:
    """(t_mag, delta) from the closed form; NaN at a degenerate point."""
    t_mag, delta, _, _ = transmission_grid(ka, x, gamma)
    return float(t_mag), float(delta)


def _delta_function(x: float, gamma: float) -> Callable[[float], float]:
    def delta_at(ka: float) -> float:
        return evaluate_point(ka, x, gamma)[1]
    return delta_at


def _refine_root(delta_at: Callable[[float], float], lo: float, hi: float) -> Optional[float]:
    """Bracketing refinement of delta = 0 inside [lo, hi]."""
    d_lo, d_hi = delta_at(lo), delta_at(hi)
    if not (math.isfinite(d_lo) and math.isfinite(d_hi)):
        return None
    if d_lo == 0.0:
        return lo
    if d_hi == 0.0:
        return hi
    # Both ends must sit on the continuous branch around zero
    if d_lo * d_hi > 0 or max(abs(d_lo), abs(d_hi)) >= 0.5 * math.pi:
        return None
    try:
        return brentq(delta_at, lo, hi, xtol=1e-14, maxiter=200)
    except (ValueError, RuntimeError) as e:
        logger.debug(f"Root refinement failed on [{lo}, {hi}]: {e}")
        return None


def row_roots(ka_axis: np.ndarray, delta_row: np.ndarray, x: float, gamma: float) -> List[CurvePoint]:
    """Phase-gate roots along one line of constant x.

    Args:
        ka_axis: Sample points along ka.
        delta_row: Wrapped delta at those points (NaN where degenerate).
        x: Spin-orbit ratio of the line.
        gamma: Junction angle.

    Returns:
        Refined roots, increasing in ka.
    """
    finite = np.isfinite(delta_row)
    delta_at = _delta_function(x, gamma)
    roots: List[CurvePoint] = []

    # Unwrap each run of finite samples separately
    edges = np.flatnonzero(np.diff(np.concatenate(([0], finite.astype(int), [0]))))
    for start, stop in zip(edges[::2], edges[1::2]):
        lift = np.unwrap(delta_row[start:stop])
        level = np.floor(lift / TWO_PI)
        for i in np.flatnonzero(np.diff(level)):
            lo, hi = ka_axis[start + i], ka_axis[start + i + 1]
            ka = _refine_root(delta_at, float(lo), float(hi))
            if ka is None:
                logger.debug(f"Dropped bracket [{lo:.6f}, {hi:.6f}] at x={x:.6f}")
                continue

            t_mag, delta = evaluate_point(ka, x, gamma)
            if not abs(delta) < TOLERANCES.on_curve:
                logger.debug(f"Rejected root ka={ka:.12f}, x={x:.6f}: |delta|={abs(delta):.3e}")
                continue
            if abs(delta) > TOLERANCES.root_target:
                logger.debug(f"Root ka={ka:.12f} above refinement target: |delta|={abs(delta):.3e}")

            if roots and abs(roots[-1].ka - ka) < 1e-12:
                continue
            roots.append(CurvePoint(ka=ka, x=float(x), t_mag=t_mag, delta=delta))

    return roots


def _link_rows(rows: Sequence[List[CurvePoint]], gamma: float, ka_bound: float, step_bound: float) -> List[Curve]:
    """Join roots of consecutive rows by nearest-neighbour matching."""
    finished: List[Curve] = []
    open_curves: List[Curve] = []

    for roots in rows:
        pairs = sorted(
            (abs(curve.points[-1].ka - p.ka), ci, pi)
            for ci, curve in enumerate(open_curves)
            for pi, p in enumerate(roots)
            if abs(curve.points[-1].ka - p.ka) <= ka_bound
        )

        used_curves, used_roots = set(), set()
        for _, ci, pi in pairs:
            if ci in used_curves or pi in used_roots:
                continue
            open_curves[ci].points.append(roots[pi])
            used_curves.add(ci)
            used_roots.add(pi)

        next_open = [c for ci, c in enumerate(open_curves) if ci in used_curves]
        finished.extend(c for ci, c in enumerate(open_curves) if ci not in used_curves)
        for pi, p in enumerate(roots):
            if pi not in used_roots:
                next_open.append(Curve(gamma=gamma, points=[p], step_bound=step_bound))
        open_curves = next_open

    finished.extend(open_curves)
    return finished


def delta_zero_curves(
    gamma: float,
    ka_range: Range = DEFAULT_WINDOW.ka_range,
    x_range: Range = DEFAULT_WINDOW.curve_x_range,
    resolution: Tuple[int, int] = DEFAULT_WINDOW.curve_resolution,
    link_factor: float = 3.0,
) -> List[Curve]:
    """Trace the lines along which a ring acts as a gamma phase gate.

    Args:
        gamma: Junction angle, not pi (delta is identically pi there).
        ka_range: ka window.
        x_range: x window; keep it away from x = 0, where delta is
            ill-conditioned.
        resolution: Coarse grid size (n_ka, n_x).
        link_factor: Roots of consecutive rows are joined when their ka
            differ by at most ``link_factor`` times the larger grid step.

    Returns:
        Curves with at least two points, ordered by starting x then ka.
        An empty list is a valid outcome.
    """
    if not (math.isfinite(gamma) and 0.0 < gamma < TWO_PI):
        raise InvalidParameterError(f"gamma must lie in (0, 2*pi), got {gamma!r}")
    if abs(gamma - math.pi) < TOLERANCES.gate_classification:
        raise InvalidParameterError("delta is identically pi for a diametric ring; no phase-gate curves")
    if not link_factor > 0:
        raise InvalidParameterError(f"link_factor must be positive, got {link_factor!r}")

    ka_axis = make_axis(ka_range, resolution[0], "ka", 0.0, strict=True)
    x_axis = make_axis(x_range, resolution[1], "x", 0.0, strict=False)

    _, delta, _, _ = transmission_grid(ka_axis[:, None], x_axis[None, :], gamma)
    rows = [row_roots(ka_axis, delta[:, j], float(x), gamma) for j, x in enumerate(x_axis)]

    ka_step = float(ka_axis[1] - ka_axis[0])
    x_step = float(x_axis[1] - x_axis[0])
    ka_bound = link_factor * max(ka_step, x_step)
    step_bound = math.hypot(ka_bound, x_step)

    curves = [c for c in _link_rows(rows, gamma, ka_bound, step_bound) if len(c) >= 2]
    curves.sort(key=lambda c: (c.points[0].x, c.points[0].ka))

    n_roots = sum(len(r) for r in rows)
    logger.info(f"gamma={gamma:.6g}: {n_roots} root(s) linked into {len(curves)} curve(s)")
    if not curves:
        logger.warning(f"No phase-gate curve found for gamma={gamma:.6g} in the given window")

    return curves


def _solve_ka_on_curve(x: float, guess: float, half_width: float, gamma: float) -> Optional[float]:
    """Re-solve delta(ka, x) = 0 near ``guess``, widening the bracket if needed."""
    delta_at = _delta_function(x, gamma)
    h = half_width / 16.0
    for _ in range(6):
        lo = max(guess - h, 0.5 * guess)
        ka = _refine_root(delta_at, lo, guess + h)
        if ka is not None:
            return ka
        h *= 2.0
    return None


def _dedupe(points: List[CurvePoint], tol: float = 1e-6) -> List[CurvePoint]:
    unique: List[CurvePoint] = []
    for p in sorted(points, key=lambda p: (p.x, p.ka)):
        if unique and abs(unique[-1].ka - p.ka) < tol and abs(unique[-1].x - p.x) < tol:
            if p.t_mag > unique[-1].t_mag:
                unique[-1] = p
            continue
        unique.append(p)
    return unique


def lossless_points(curve: Curve) -> List[CurvePoint]:
    """Lossless phase gates along a curve.

    Each interior local maximum of t_mag is refined with a bounded Brent
    search over the curve parameter x; ka(x) is re-solved on the curve at
    every trial x. Only points with 1 - t_mag < 1e-6 and |delta| < 1e-8
    are returned.
    """
    if len(curve) == 0:
        raise InvalidParameterError("lossless_points needs a non-empty curve")

    pts = curve.points
    t = curve.t_mag
    xs, kas = curve.x, curve.ka
    half_width = 0.5 * min(curve.step_bound, 1.0) if math.isfinite(curve.step_bound) else 0.05
    found: List[CurvePoint] = []

    for i in range(1, len(pts) - 1):
        if not (t[i] >= t[i - 1] and t[i] >= t[i + 1]):
            continue

        def objective(x: float) -> float:
            ka = _solve_ka_on_curve(x, float(np.interp(x, xs, kas)), half_width, curve.gamma)
            if ka is None:
                return 0.0
            t_mag, _ = evaluate_point(ka, x, curve.gamma)
            return -t_mag if math.isfinite(t_mag) else 0.0

        result = minimize_scalar(
            objective,
            bounds=(xs[i - 1], xs[i + 1]),
            method='bounded',
            options={'xatol': 1e-12},
        )

        x_best = float(result.x)
        ka_best = _solve_ka_on_curve(x_best, float(np.interp(x_best, xs, kas)), half_width, curve.gamma)
        if ka_best is None:
            continue

        t_mag, delta = evaluate_point(ka_best, x_best, curve.gamma)
        if 1.0 - t_mag < TOLERANCES.lossless and abs(delta) < TOLERANCES.on_curve:
            found.append(CurvePoint(ka=ka_best, x=x_best, t_mag=t_mag, delta=delta))
        else:
            logger.debug(f"Maximum near x={x_best:.6f} is lossy: t_mag={t_mag:.9f}")

    return _dedupe(found)


def lossless_points_diametric(
    x: float,
    ka_range: Range = DEFAULT_WINDOW.ka_range,
    resolution: int = DEFAULT_WINDOW.diametric_resolution,
) -> List[CurvePoint]:
    """Lossless energies of a diametric ring at fixed x.

    Local maxima of |T_pi|(ka) on a fine grid are refined by bounded Brent
    search; points with 1 - t_mag < 1e-6 are kept. Zeros of sin(pi q)
    never qualify since t_mag vanishes there.
    """
    if not (math.isfinite(x) and x >= 0):
        raise InvalidParameterError(f"x must be finite and non-negative, got {x!r}")

    ka_axis = make_axis(ka_range, resolution, "ka", 0.0, strict=True)
    t_grid, _, _, _ = transmission_grid(ka_axis, x, math.pi)
    t_safe = np.where(np.isfinite(t_grid), t_grid, -np.inf)

    def objective(ka: float) -> float:
        t_mag, _ = evaluate_point(ka, x, math.pi)
        return -t_mag if math.isfinite(t_mag) else 0.0

    found: List[CurvePoint] = []
    for i in range(1, len(ka_axis) - 1):
        if not (np.isfinite(t_grid[i]) and t_safe[i] >= t_safe[i - 1] and t_safe[i] >= t_safe[i + 1]):
            continue

        result = minimize_scalar(
            objective,
            bounds=(ka_axis[i - 1], ka_axis[i + 1]),
            method='bounded',
            options={'xatol': 1e-9},
        )
        ka_best = float(result.x)
        t_mag, delta = evaluate_point(ka_best, x, math.pi)
        if math.isfinite(t_mag) and 1.0 - t_mag < TOLERANCES.lossless:
            found.append(CurvePoint(ka=ka_best, x=float(x), t_mag=t_mag, delta=delta))

    points = _dedupe(found)
    logger.info(f"x={x:.6g}: {len(points)} lossless diametric point(s)")
    return points
