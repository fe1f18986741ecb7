"""JSON encoding of windows and intertwiner witnesses.

A window file looks like::

    {
      "algebra": {"d": 2, "lambdas": ["0", "2"]},
      "degrees": [-6, 0],
      "dims": [0, 0, 0, 1],
      "theta": [[], [], [], ["0"]],
      "f": [[], [], []],
      "delta": [[], [], []]
    }

``theta`` has one matrix per degree, ``f`` and ``delta`` one per edge
``(p, p+d)``; ``f`` maps ``T_p -> T_{p+d}`` and ``delta`` maps back. Each
matrix is a flat row-major array (shape implied by ``dims``) whose entries
are ``"num/den"`` strings, ``"/den"`` omitted for integers. Plain JSON
integers are tolerated as entries; floating-point literals are rejected.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .algebra import AlgebraError, AlgebraSpec, make_algebra
from .linalg import RatMatrix
from .window import GradedWindow, WindowError

__all__ = [
    "WindowFormatError",
    "format_rat",
    "parse_rat",
    "window_to_dict",
    "window_from_dict",
    "dumps_window",
    "loads_window",
    "load_window",
    "save_window",
    "witness_to_dict",
    "witness_from_dict",
]

_RAT = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


class WindowFormatError(ValueError):
    """Malformed window or witness document."""


def format_rat(x: Fraction) -> str:
    return str(x)


def parse_rat(value, where: str = "entry") -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise WindowFormatError(f"{where}: {value!r} is not an exact rational")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise WindowFormatError(f"{where}: expected a \"num/den\" string, got {type(value).__name__}")
    m = _RAT.match(value)
    if not m:
        raise WindowFormatError(f"{where}: {value!r} is not of the form num/den")
    den = int(m.group(2) or 1)
    if den == 0:
        raise WindowFormatError(f"{where}: zero denominator")
    return Fraction(int(m.group(1)), den)


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise WindowFormatError(f"{where}: expected an integer, got {value!r}")
    return value


def _matrix_to_list(M: RatMatrix) -> list[str]:
    return [format_rat(x) for x in M.entries]


def _matrix_from_list(data, rows: int, cols: int, where: str) -> RatMatrix:
    if not isinstance(data, list):
        raise WindowFormatError(f"{where}: expected an array")
    if data and all(isinstance(r, list) for r in data):
        data = [x for r in data for x in r]
    if len(data) != rows * cols:
        raise WindowFormatError(f"{where}: expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(data)}")
    return RatMatrix(rows, cols, [parse_rat(x, where) for x in data])


def spec_to_dict(spec: AlgebraSpec) -> dict:
    return {"d": spec.d, "lambdas": [format_rat(x) for x in spec.lambdas]}


def spec_from_dict(data) -> AlgebraSpec:
    if not isinstance(data, dict) or "d" not in data or "lambdas" not in data:
        raise WindowFormatError("algebra: expected an object with \"d\" and \"lambdas\"")
    lambdas = data["lambdas"]
    if not isinstance(lambdas, list):
        raise WindowFormatError("algebra.lambdas: expected an array")
    try:
        return make_algebra(_int(data["d"], "algebra.d"), [parse_rat(x, "algebra.lambdas") for x in lambdas])
    except AlgebraError as exc:
        raise WindowFormatError(f"algebra: {exc}") from exc


def window_to_dict(w: GradedWindow) -> dict:
    return {
        "algebra": spec_to_dict(w.spec),
        "degrees": [w.p_min, w.p_max],
        "dims": list(w.dims),
        "theta": [_matrix_to_list(m) for m in w.theta],
        "f": [_matrix_to_list(m) for m in w.fmaps],
        "delta": [_matrix_to_list(m) for m in w.dmaps],
    }


def window_from_dict(data) -> GradedWindow:
    if not isinstance(data, dict):
        raise WindowFormatError("window: expected a JSON object")
    missing = [k for k in ("algebra", "degrees", "dims", "theta", "f", "delta") if k not in data]
    if missing:
        raise WindowFormatError(f"window: missing fields {missing}")
    spec = spec_from_dict(data["algebra"])
    degrees = data["degrees"]
    if not isinstance(degrees, list) or len(degrees) != 2:
        raise WindowFormatError("degrees: expected [p_min, p_max]")
    p_min, p_max = _int(degrees[0], "degrees"), _int(degrees[1], "degrees")
    if p_max < p_min or (p_max - p_min) % spec.d:
        raise WindowFormatError(f"degrees: [{p_min}, {p_max}] is not a progression of step {spec.d}")
    n = (p_max - p_min) // spec.d + 1
    dims = data["dims"]
    if not isinstance(dims, list) or len(dims) != n:
        raise WindowFormatError(f"dims: expected {n} entries")
    dims = [_int(x, "dims") for x in dims]
    if any(x < 0 for x in dims):
        raise WindowFormatError("dims: negative dimension")
    for key, count in (("theta", n), ("f", n - 1), ("delta", n - 1)):
        if not isinstance(data[key], list) or len(data[key]) != count:
            raise WindowFormatError(f"{key}: expected {count} matrices")
    degs = [p_min + i * spec.d for i in range(n)]
    theta = [_matrix_from_list(m, dims[i], dims[i], f"theta[{degs[i]}]") for i, m in enumerate(data["theta"])]
    fmaps = [_matrix_from_list(m, dims[i + 1], dims[i], f"f[{degs[i]}]") for i, m in enumerate(data["f"])]
    dmaps = [_matrix_from_list(m, dims[i], dims[i + 1], f"delta[{degs[i]}]") for i, m in enumerate(data["delta"])]
    try:
        return GradedWindow(spec, p_min, p_max, dims, theta, fmaps, dmaps)
    except WindowError as exc:
        raise WindowFormatError(str(exc)) from exc


def dumps_window(w: GradedWindow) -> str:
    """Pretty JSON with one matrix per line."""
    doc = window_to_dict(w)
    lines = ["{"]
    keys = list(doc)
    for n, key in enumerate(keys):
        comma = "," if n < len(keys) - 1 else ""
        value = doc[key]
        if key in ("theta", "f", "delta"):
            inner = ",\n".join("    " + json.dumps(m) for m in value)
            body = f"[\n{inner}\n  ]" if value else "[]"
        else:
            body = json.dumps(value)
        lines.append(f"  {json.dumps(key)}: {body}{comma}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def loads_window(text: str) -> GradedWindow:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WindowFormatError(f"invalid JSON: {exc}") from exc
    return window_from_dict(data)


def load_window(path) -> GradedWindow:
    return loads_window(Path(path).read_text(encoding="utf-8"))


def save_window(w: GradedWindow, path) -> None:
    Path(path).write_text(dumps_window(w), encoding="utf-8")


def witness_to_dict(degrees, witness) -> dict:
    return {
        "degrees": list(degrees),
        "shapes": [[m.rows, m.cols] for m in witness],
        "maps": [_matrix_to_list(m) for m in witness],
    }


def witness_from_dict(data) -> tuple[list[int], list[RatMatrix]]:
    try:
        degrees = [_int(p, "degrees") for p in data["degrees"]]
        shapes = data["shapes"]
        maps = [
            _matrix_from_list(m, _int(r, "shapes"), _int(c, "shapes"), f"maps[{p}]")
            for p, (r, c), m in zip(degrees, shapes, data["maps"])
        ]
    except (KeyError, TypeError, ValueError) as exc:
        raise WindowFormatError(f"witness: {exc}") from exc
    return degrees, maps
