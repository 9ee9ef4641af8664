"""CSV and JSON table writers.

CSV floats use 17 significant digits so every value re-parses exactly;
complex values are split into ``_re``/``_im`` columns. JSON documents use
the envelope {"schema_version": 1, "params": {...}, "rows": [...]}.
"""

import csv
import io
import json
import math
from typing import Any, Dict, Iterable, List, Optional, Sequence

from src.analysis.curves import Curve, CurvePoint
from src.analysis.scan import ScanGrid
from src.core.exceptions import InvalidParameterError
from src.gates.algebra import SCHEMA_VERSION, GateSequence

FORMATS = ("csv", "json")

SCAN_COLUMNS = ["ka", "x", "gamma", "t_mag", "delta", "delta0", "flag"]
CURVE_COLUMNS = ["curve", "index", "ka", "x", "t_mag", "delta"]
POINT_COLUMNS = ["ka", "x", "gamma", "t_mag", "delta"]
MATRIX_COLUMNS = ["row", "col", "value_re", "value_im"]


def format_float(value: float) -> str:
    return format(float(value), ".17g")


def _json_value(value: Any) -> Any:
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def _scan_rows(grid: ScanGrid) -> List[Dict[str, Any]]:
    return [
        {
            "ka": ka, "x": x, "gamma": gamma, "t_mag": t_mag,
            "delta": delta, "delta0": delta0, "flag": int(degenerate),
        }
        for ka, x, gamma, t_mag, delta, delta0, degenerate in grid.iter_cells()
    ]


def _curve_rows(curves: Sequence[Curve]) -> List[Dict[str, Any]]:
    return [
        {"curve": ci, "index": pi, "ka": p.ka, "x": p.x, "t_mag": p.t_mag, "delta": p.delta}
        for ci, curve in enumerate(curves)
        for pi, p in enumerate(curve.points)
    ]


def _point_rows(points: Sequence[CurvePoint], gamma: float) -> List[Dict[str, Any]]:
    return [{"ka": p.ka, "x": p.x, "gamma": gamma, "t_mag": p.t_mag, "delta": p.delta} for p in points]


def _matrix_rows(seq: GateSequence) -> List[Dict[str, Any]]:
    return [
        {"row": i, "col": j, "value_re": float(v.real), "value_im": float(v.imag)}
        for i, row in enumerate(seq.composed)
        for j, v in enumerate(row)
    ]


def _to_csv(columns: List[str], rows: Iterable[Dict[str, Any]]) -> bytes:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([
            format_float(row[c]) if isinstance(row[c], float) else row[c]
            for c in columns
        ])
    return buffer.getvalue().encode("utf-8")


def _to_json(document: Dict[str, Any]) -> bytes:
    text = json.dumps(document, indent=2, allow_nan=False, default=str)
    return (text + "\n").encode("utf-8")


def _envelope(params: Dict[str, Any], rows: List[Dict[str, Any]]) -> Dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "params": params,
        "rows": [{k: _json_value(v) for k, v in row.items()} for row in rows],
    }


def _list_kind(data: Sequence[Any], kind: Optional[str]) -> Optional[str]:
    if not data:
        return kind
    if all(isinstance(d, Curve) for d in data):
        return "curves"
    if all(isinstance(d, CurvePoint) for d in data):
        return "points"
    return None


def emit_table(
    data: Any,
    fmt: str = "csv",
    params: Optional[Dict[str, Any]] = None,
    kind: Optional[str] = None,
) -> bytes:
    """Serialize analysis or composition results.

    Args:
        data: ScanGrid, Curve or list of Curves, list of CurvePoints, or
            GateSequence.
        fmt: ``csv`` or ``json``.
        params: Run parameters for the JSON envelope; point lists need
            ``params['gamma']``.
        kind: ``curves`` or ``points``; needed only for an empty list.

    Returns:
        Encoded table, byte-identical for identical inputs.

    Raises:
        InvalidParameterError: On an unsupported data/format combination.
    """
    if fmt not in FORMATS:
        raise InvalidParameterError(f"Unsupported format {fmt!r}, expected one of {FORMATS}")
    params = dict(params or {})

    if isinstance(data, GateSequence):
        if fmt == "csv":
            return _to_csv(MATRIX_COLUMNS, _matrix_rows(data))
        document = data.to_dict()
        document["params"].update(params)
        return _to_json(document)

    if isinstance(data, ScanGrid):
        columns, rows = SCAN_COLUMNS, _scan_rows(data)
        params.setdefault("gamma", data.gamma)
    elif isinstance(data, Curve):
        columns, rows = CURVE_COLUMNS, _curve_rows([data])
    elif isinstance(data, (list, tuple)) and _list_kind(data, kind) == "curves":
        columns, rows = CURVE_COLUMNS, _curve_rows(data)
    elif isinstance(data, (list, tuple)) and _list_kind(data, kind) == "points":
        if "gamma" not in params:
            raise InvalidParameterError("Point tables need params['gamma']")
        columns, rows = POINT_COLUMNS, _point_rows(data, float(params["gamma"]))
    else:
        raise InvalidParameterError(f"Cannot tabulate {type(data).__name__} as {fmt}")

    if fmt == "csv":
        return _to_csv(columns, rows)
    return _to_json(_envelope(params, rows))
