# hommodels/reports.py
# -----------------------------------------------------------------------------
# Rendering of verification reports: a JSON document for machines and pandas
# tables for people. Wall time is included only when asked for.
# -----------------------------------------------------------------------------
from __future__ import annotations

import json
from typing import Any, Dict, List, Sequence

import pandas as pd

from .config import REPORT_SCHEMA_VERSION
from .models import FAIL, PASS, SKIPPED, HomologySummary, VerificationReport, combine_status


def overall_status(reports: Sequence[VerificationReport]) -> str:
    return combine_status(r.status for r in reports)


def exit_code(reports: Sequence[VerificationReport]) -> int:
    """1 iff an executed assertion failed; skipped checks do not fail a run."""
    return 1 if any(r.failed for r in reports) else 0


# ======================
# JSON
# ======================

def to_document(reports: Sequence[VerificationReport], timings: bool = False) -> Dict[str, Any]:
    return {
        "schema_version": REPORT_SCHEMA_VERSION,
        "status": overall_status(reports),
        "reports": [r.to_dict(timings) for r in reports],
    }


def render_json(reports: Sequence[VerificationReport], timings: bool = False) -> str:
    return json.dumps(to_document(reports, timings), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def dumps(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# ======================
# Text
# ======================

def checks_frame(report: VerificationReport) -> pd.DataFrame:
    rows = [
        {"check": c.name, "status": c.status, "detail": c.detail, "witness": c.witness or ""}
        for c in report.checks
    ]
    return pd.DataFrame(rows, columns=["check", "status", "detail", "witness"])


def summary_frame(reports: Sequence[VerificationReport], timings: bool = False) -> pd.DataFrame:
    rows = []
    for r in reports:
        row: Dict[str, Any] = {
            "scenario": r.scenario,
            "params": ", ".join(f"{k}={v}" for k, v in r.params.items()),
            "status": r.status,
            "passed": sum(c.status == PASS for c in r.checks),
            "failed": sum(c.status == FAIL for c in r.checks),
            "skipped": sum(c.status == SKIPPED for c in r.checks),
        }
        if timings:
            row["seconds"] = round(r.wall_time, 3)
        rows.append(row)
    return pd.DataFrame(rows)


def homology_text(name: str, h: HomologySummary) -> str:
    frame = h.to_frame()
    body = frame.to_string(index=False) if len(frame) else "(empty)"
    return f"homology {name}: {h.describe()}\n{body}"


def _frame_text(frame: pd.DataFrame) -> str:
    return frame.to_string(index=False) if len(frame) else "(none)"


def render_report(report: VerificationReport, timings: bool = False) -> str:
    params = ", ".join(f"{k}={v}" for k, v in report.params.items())
    head = f"== {report.scenario} ({params}): {report.status}"
    if timings:
        head += f" [{report.wall_time:.2f}s]"
    parts: List[str] = [head]
    if report.counts:
        parts.append("counts: " + ", ".join(f"{k}={v}" for k, v in sorted(report.counts.items())))
    parts.append(_frame_text(checks_frame(report)))
    for name, h in sorted(report.homology.items()):
        parts.append(homology_text(name, h))
    return "\n".join(parts) + "\n"


def render_text(reports: Sequence[VerificationReport], timings: bool = False) -> str:
    out = [render_report(r, timings) for r in reports]
    if len(reports) > 1:
        out.append("== summary: " + overall_status(reports) + "\n" + _frame_text(summary_frame(reports, timings)) + "\n")
    return "\n".join(out)
