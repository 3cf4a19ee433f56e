"""CSV and JSON emission for run reports and sweeps."""
from __future__ import annotations

import csv
import io
import json
from typing import Sequence, TextIO

from ..dynamics import TrajectoryRow
from .scenario import RunReport, SweepRow

CSV_HEADER = (
    "t", "cv", "c12", "c13", "c23",
    "cv_closed", "c12_closed", "c13_closed", "c23_closed",
    "phase", "cycle",
)


def fmt(x: float | None) -> str:
    return "" if x is None else format(float(x), ".17g")


def _row_fields(r: TrajectoryRow, outputs: frozenset[str]) -> list[str]:
    show_cv = "cv" in outputs
    show_pw = "pairwise" in outputs
    show_closed = "closed_forms" in outputs
    return [
        fmt(r.t),
        fmt(r.cv) if show_cv else "",
        *(fmt(getattr(r, c)) if show_pw else "" for c in ("c12", "c13", "c23")),
        fmt(r.cv_closed) if show_closed and show_cv else "",
        *(fmt(getattr(r, c + "_closed")) if show_closed and show_pw else "" for c in ("c12", "c13", "c23")),
        r.phase,
        "" if r.cycle is None else str(r.cycle),
    ]


def write_rows_csv(rows: Sequence[TrajectoryRow], fh: TextIO, outputs=frozenset({"cv", "pairwise", "closed_forms"})) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow(_row_fields(r, outputs))


def report_csv(report: RunReport, free: bool = False) -> str:
    rows = report.free_rows if free else report.rows
    if rows is None:
        raise ValueError("report has no free-evolution rows")
    buf = io.StringIO()
    write_rows_csv(rows, buf, report.scenario.outputs)
    return buf.getvalue()


def _row_dict(r: TrajectoryRow) -> dict:
    return {
        "t": r.t,
        "cv": r.cv,
        "c12": r.c12,
        "c13": r.c13,
        "c23": r.c23,
        "cv_closed": r.cv_closed,
        "c12_closed": r.c12_closed,
        "c13_closed": r.c13_closed,
        "c23_closed": r.c23_closed,
        "phase": r.phase,
        "cycle": r.cycle,
        "pairwise": {f"{i}{j}" if max(i, j) < 10 else f"{i},{j}": v for (i, j), v in r.pairwise.items()},
    }


def report_dict(report: RunReport) -> dict:
    return {
        "scenario": report.scenario.describe(),
        "resolved": {"kick": report.kick, "offset": report.offset, "closed_forms": report.closed_forms},
        "summary": report.summary,
        "rows": [_row_dict(r) for r in report.rows],
        "free_rows": None if report.free_rows is None else [_row_dict(r) for r in report.free_rows],
    }


def report_json(report: RunReport) -> str:
    return json.dumps(report_dict(report), indent=2)


def sweep_csv(rows: Sequence[SweepRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("T", "achieved_min", "predicted_min"))
    for r in rows:
        w.writerow((fmt(r.T), fmt(r.achieved_min), fmt(r.predicted_min)))
    return buf.getvalue()
