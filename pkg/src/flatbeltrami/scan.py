"""Grid scans of the first-derivative ratio and the coefficient matrix, written as CSV."""

from __future__ import annotations

import csv
import logging
import pathlib
from dataclasses import astuple, dataclass, fields
from typing import Iterable, List, Optional

from flatbeltrami.beltrami import dq22_dzbar, q_matrix
from flatbeltrami.errors import DomainError
from flatbeltrami.mapping import log_ratio, u_jet
from flatbeltrami.scheme import Scheme
from flatbeltrami.verify.base import SamplePoint, ordered_map, sample_grid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScanRow:
    n: int
    radius_fraction: float
    angle: float
    log_ratio: float
    log_q11: float
    log_q12: float
    log_q21: float
    log_q22: float
    log_dq22: Optional[float] = None


SCAN_COLUMNS = tuple(f.name for f in fields(ScanRow))


def scan_point(s: Scheme, point: SamplePoint, include_dq22: bool = True) -> ScanRow:
    jet = u_jet(s, point.z, n=point.n)
    q = q_matrix(jet)
    log_dq22 = dq22_dzbar(jet).total.log_mag if include_dq22 else None
    return ScanRow(
        n=point.n,
        radius_fraction=point.radius_fraction,
        angle=point.angle,
        log_ratio=log_ratio(jet),
        log_q11=q.q11.log_mag,
        log_q12=q.q12.log_mag,
        log_q21=q.q21.log_mag,
        log_q22=q.q22.log_mag,
        log_dq22=log_dq22,
    )


def scan(s: Scheme, n_min: int, n_max: int, angles: int, include_dq22: bool = True, workers: int = 1) -> List[ScanRow]:
    """Rows ordered by (n, radius_fraction, angle)."""
    if n_min < s.n_min or n_max < n_min:
        raise DomainError(f"scan range ({n_min}, {n_max}) is empty or below n = {s.n_min}")
    if angles < 1:
        raise DomainError(f"angles must be positive, got {angles}")
    s.prefill(n_max + 1)
    rows: List[ScanRow] = []
    for n in range(n_min, n_max + 1):
        points = sample_grid(s, n, angles)
        rows.extend(ordered_map(lambda p: scan_point(s, p, include_dq22), points, workers))
        logger.debug("scanned n=%d (%d points)", n, len(points))
    return rows


def _cell(value: object) -> str:
    if value is None:
        return ""
    return repr(value) if isinstance(value, float) else str(value)


def write_scan_csv(rows: Iterable[ScanRow], path: pathlib.Path) -> int:
    """Header plus one line per row, UTF-8 with LF endings; returns the row count."""
    count = 0
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(SCAN_COLUMNS)
        for row in rows:
            writer.writerow([_cell(v) for v in astuple(row)])
            count += 1
    logger.info("wrote %d scan rows to %s", count, path)
    return count


__all__ = ["ScanRow", "SCAN_COLUMNS", "scan", "scan_point", "write_scan_csv"]
