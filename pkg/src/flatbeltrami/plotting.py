"""Single-panel SVG charts from scan or suite CSV files."""

from __future__ import annotations

import csv
import logging
import math
import pathlib
from collections import defaultdict
from typing import Dict, List, Tuple

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from flatbeltrami.errors import DomainError

logger = logging.getLogger(__name__)

GROUP_COLUMN = "radius_fraction"

matplotlib.rcParams["svg.hashsalt"] = "flatbeltrami"


def read_columns(path: pathlib.Path, x: str, y: str) -> Dict[str, List[Tuple[float, float]]]:
    """Finite (x, y) pairs grouped by radius fraction (a single group when the column is absent)."""
    with path.open("r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        rows = list(reader)
    if not rows:
        raise DomainError(f"{path} holds no data rows")
    for column in (x, y):
        if column not in header:
            raise DomainError(f"column {column!r} not in {path}; available: {', '.join(header)}")
    groups: Dict[str, List[Tuple[float, float]]] = defaultdict(list)
    for row in rows:
        try:
            xv, yv = float(row[x]), float(row[y])
        except ValueError:
            continue
        if math.isfinite(xv) and math.isfinite(yv):
            groups[row.get(GROUP_COLUMN, "all")].append((xv, yv))
    if not groups:
        raise DomainError(f"no finite ({x}, {y}) pairs in {path}")
    return groups


def _envelope(points: List[Tuple[float, float]]) -> Tuple[List[float], List[float]]:
    # several angles share an x value; keep the largest y per x
    best: Dict[float, float] = {}
    for xv, yv in points:
        best[xv] = max(yv, best.get(xv, -math.inf))
    xs = sorted(best)
    return xs, [best[v] for v in xs]


def plot_csv(path: pathlib.Path, x: str, y: str, out: pathlib.Path, logscale: bool = False) -> int:
    """Write an SVG with one polyline per radius fraction; returns the number of polylines."""
    groups = read_columns(path, x, y)
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    try:
        for label in sorted(groups):
            xs, ys = _envelope(groups[label])
            ax.plot(xs, ys, marker=".", linewidth=1.0, label=f"{GROUP_COLUMN}={label}" if label != "all" else y)
        ax.set_xlabel(x)
        if logscale:
            ax.set_yscale("symlog")
            ax.set_ylabel(f"{y} (symlog scale)")
        else:
            ax.set_ylabel(y)
        ax.grid(True, linewidth=0.3)
        ax.legend(loc="best", fontsize="small")
        fig.tight_layout()
        fig.savefig(out, format="svg", metadata={"Date": None})
    finally:
        plt.close(fig)
    logger.info("wrote %s (%d series)", out, len(groups))
    return len(groups)


__all__ = ["plot_csv", "read_columns"]
