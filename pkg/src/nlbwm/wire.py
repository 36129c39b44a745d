"""Shared external formats for the CLI and the HTTP service.

Both front ends funnel through these helpers so that identical inputs
produce byte-identical report JSON regardless of transport.
"""

from __future__ import annotations

import json
from typing import Any

from .analysis import AnalysisReport, analyze
from .errors import AggregationMismatchError, BwmError
from .pcs import PairwiseComparisonSystem, aggregate_geometric, from_dict


def round_floats(obj: Any, digits: int) -> Any:
    """Round every float in a JSON-like structure, for table-style display."""
    if isinstance(obj, float):
        return round(obj, digits)
    if isinstance(obj, list):
        return [round_floats(x, digits) for x in obj]
    if isinstance(obj, dict):
        return {k: round_floats(v, digits) for k, v in obj.items()}
    return obj


def report_json(report: AnalysisReport, round_digits: int | None = None) -> str:
    d = report.to_dict()
    if round_digits is not None:
        d = round_floats(d, round_digits)
    return json.dumps(d, indent=2)


def pcs_from_payload(payload: Any) -> PairwiseComparisonSystem:
    """Accept one system (object) or a group of systems (list, aggregated)."""
    if isinstance(payload, list):
        if len(payload) < 2:
            raise AggregationMismatchError("group input needs at least 2 systems")
        return aggregate_geometric([from_dict(item) for item in payload])
    return from_dict(payload)


def analyze_payload(
    payload: Any, legacy: bool = False, round_digits: int | None = None
) -> tuple[AnalysisReport, str]:
    report = analyze(pcs_from_payload(payload), legacy=legacy)
    return report, report_json(report, round_digits)


def error_payload(exc: Exception) -> dict:
    kind = type(exc).__name__ if isinstance(exc, BwmError) else "InvalidInput"
    return {"error": str(exc), "type": kind}
