"""JSON state files: ``{"dims": [d1, d2, d3], "matrix": [[[re, im], ...], ...]}``.

Floats are written with ``repr`` (shortest round-tripping form, at most
17 significant digits), so write/read reproduces entries bit-exactly.
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import DimensionError, InvalidInputError
from .tensor import TripartiteDims, TripartiteState


def state_to_dict(rho: TripartiteState) -> dict:
    return {
        "dims": list(rho.dims.as_tuple()),
        "matrix": [[[float(z.real), float(z.imag)] for z in row] for row in rho.mat],
    }


def state_from_dict(obj) -> TripartiteState:
    if not isinstance(obj, dict) or "dims" not in obj or "matrix" not in obj:
        raise InvalidInputError("state file must be an object with 'dims' and 'matrix' keys")
    dims = obj["dims"]
    if not (isinstance(dims, list) and len(dims) == 3 and all(isinstance(d, int) and d > 0 for d in dims)):
        raise DimensionError(f"'dims' must be three positive integers, got {dims!r}")
    try:
        arr = np.array(obj["matrix"], dtype=np.float64)
    except (TypeError, ValueError):
        raise InvalidInputError("'matrix' must be a rectangular nested array of [re, im] pairs") from None
    n = int(np.prod(dims))
    if arr.shape != (n, n, 2):
        raise DimensionError(f"'matrix' has shape {arr.shape}, expected ({n}, {n}, 2) for dims {dims}")
    return TripartiteState(TripartiteDims(*dims), arr[..., 0] + 1j * arr[..., 1])


def write_state(rho: TripartiteState, path) -> None:
    Path(path).write_text(json.dumps(state_to_dict(rho)) + "\n")


def read_state(path) -> TripartiteState:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"malformed state file {path}: {exc}") from None
    return state_from_dict(obj)
