"""Parameter sweeps to CSV and threshold bisection along one axis."""
from __future__ import annotations

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Iterator, List, Optional, Tuple

import numpy as np

from .criteria import detect_gme
from .errors import NoCrossingError, ParameterError
from .states import FamilyParams, make_state

CSV_COLUMNS = ("x", "y", "M", "N", "score", "threshold", "is_gme", "bound_raw", "bound_clamped")


def grid_axis(start: float, stop: float, step: float) -> List[float]:
    """Inclusive arithmetic grid; points are rounded to 12 decimals to kill drift."""
    if step <= 0:
        raise ParameterError("step must be positive")
    if start > stop:
        raise ParameterError("start must not exceed stop")
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + k * step, 12) for k in range(count)]


@dataclass(frozen=True)
class SweepGrid:
    family: str
    x_range: Tuple[float, float, float] = (0.0, 1.0, 0.05)
    y_range: Optional[Tuple[float, float, float]] = None
    d: int = 2
    seed: int = 0

    def points(self) -> Iterator[Tuple[float, float]]:
        """Grid points in x-major order."""
        ys = grid_axis(*self.y_range) if self.y_range else [0.0]
        for x in grid_axis(*self.x_range):
            for y in ys:
                yield x, y


def _row(grid: SweepGrid, x: float, y: float) -> dict:
    row = {"x": x, "y": y}
    if grid.family == "ghz_w_qubit_mixture":
        row["invalid"] = bool(x < 0 or y < 0 or x + y > 1 + 1e-12)
        if row["invalid"]:
            return row
    rep = detect_gme(make_state(FamilyParams(grid.family, x=x, y=y, d=grid.d, seed=grid.seed)))
    row.update(
        M=rep.M,
        N=rep.N,
        score=rep.score,
        threshold=rep.threshold,
        is_gme=rep.is_gme,
        bound_raw=rep.concurrence_lower_bound,
        bound_clamped=rep.concurrence_lower_bound_clamped,
    )
    return row


def run_sweep(grid: SweepGrid, jobs: int = 1) -> List[dict]:
    """Evaluate every grid point; output order is grid order regardless of ``jobs``."""
    pts = list(grid.points())
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(lambda p: _row(grid, *p), pts))
    return [_row(grid, *p) for p in pts]


def rows_to_csv(rows: List[dict]) -> str:
    """Render rows; rows carrying an ``invalid`` flag get that column appended."""
    with_flag = any("invalid" in r for r in rows)
    cols = CSV_COLUMNS + (("invalid",) if with_flag else ())
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in rows:
        out = []
        for c in cols:
            v = r.get(c, "")
            if isinstance(v, bool):
                v = int(v)
            elif isinstance(v, float):
                v = repr(v)
            out.append(v)
        w.writerow(out)
    return buf.getvalue()


def find_threshold(
    params: FamilyParams, axis: str, lo: float, hi: float, tol: float = 1e-6
) -> float:
    """Bisect the strict predicate ``score > threshold`` along ``axis`` ('x' or 'y')."""
    if axis not in ("x", "y"):
        raise ParameterError(f"axis must be 'x' or 'y', got {axis!r}")
    if tol <= 0 or lo >= hi:
        raise ParameterError("need lo < hi and tol > 0")

    def detected(t: float) -> bool:
        return detect_gme(make_state(replace(params, **{axis: t}))).is_gme

    v_lo, v_hi = detected(lo), detected(hi)
    if v_lo == v_hi:
        raise NoCrossingError(
            f"no crossing on [{lo}, {hi}]: both endpoints are {'detected' if v_lo else 'not detected'}"
        )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if detected(mid) == v_lo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
