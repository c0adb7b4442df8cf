"""Renders reports and listings as text, JSON or CSV."""

import csv
import dataclasses
import io
import json
from typing import Any, Dict, List, Sequence

from wzcheck.arith.exact import INFINITY
from wzcheck.claims.claim import Claim, VerificationOutcome
from wzcheck.config.config import OUTPUT_FORMATS
from wzcheck.engine.engine import GridResult, Report

OUTCOME_FIELDS = (
    "claim",
    "p",
    "instance",
    "holds",
    "lhs",
    "rhs",
    "modulus",
    "diff_valuation",
    "path",
)
CLAIM_FIELDS = ("id", "domain", "modulus", "source", "description")
GRID_FIELDS = ("pair", "grid", "cells", "failures", "holds")
EXACT_MODULUS = "exact"
# Valuations are displayed up to the modulus exponent plus this margin.
VALUATION_DISPLAY_MARGIN = 4


class Error(Exception):
    """Base Exception handling class."""


class UnknownFormatError(Error):
    """The output format is not one of OUTPUT_FORMATS."""


def outcome_record(outcome: VerificationOutcome) -> Dict[str, Any]:
    """One outcome as a flat JSON-safe record.

    eg:
        {"claim": "thm1", "p": 5, "instance": "", "holds": true, "lhs": "130",
         "rhs": "130", "modulus": "625", "diff_valuation": 4, "path": "both"}
    """
    m = outcome.modulus_exponent
    if outcome.diff_valuation is INFINITY:
        diff_valuation: Any = str(INFINITY)
    else:
        diff_valuation = min(outcome.diff_valuation, m + VALUATION_DISPLAY_MARGIN)
    return {
        "claim": outcome.claim_id,
        "p": outcome.p,
        "instance": outcome.instance,
        "holds": outcome.holds,
        "lhs": str(outcome.lhs_residue),
        "rhs": str(outcome.rhs_residue),
        "modulus": str(outcome.p**m) if m else EXACT_MODULUS,
        "diff_valuation": diff_valuation,
        "path": outcome.path,
    }


def claim_record(claim: Claim) -> Dict[str, Any]:
    return {
        "id": claim.id,
        "domain": str(claim.domain),
        "modulus": f"p^{claim.modulus_exponent}" if claim.modulus_exponent else EXACT_MODULUS,
        "source": claim.source,
        "description": claim.description,
    }


def grid_record(result: GridResult) -> Dict[str, Any]:
    return {
        "pair": str(result.pair),
        "grid": result.grid,
        "cells": result.cells,
        "failures": ";".join(f"({t.n},{t.k})" for t in result.failures),
        "holds": result.holds,
    }


def report_document(report: Report) -> Dict[str, Any]:
    return {
        "config": report.config,
        "outcomes": [outcome_record(o) for o in report.outcomes],
        "summary": {
            claim_id: dataclasses.asdict(counts)
            for claim_id, counts in report.summary.items()
        },
        "errors": [dataclasses.asdict(e) for e in report.errors],
        "timing": {claim_id: round(t, 3) for claim_id, t in report.timing.items()},
    }


def _check_format(fmt: str) -> None:
    if fmt not in OUTPUT_FORMATS:
        raise UnknownFormatError(f"Unknown format {fmt!r}, expected one of {OUTPUT_FORMATS}")


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "NO"
    return str(value)


def _table(rows: Sequence[Dict[str, Any]], fields: Sequence[str]) -> str:
    cells = [list(fields)] + [[_cell(row[f]) for f in fields] for row in rows]
    widths = [max(len(line[i]) for line in cells) for i in range(len(fields))]
    return "\n".join(
        "  ".join(value.ljust(width) for value, width in zip(line, widths)).rstrip()
        for line in cells
    )


def _csv(rows: Sequence[Dict[str, Any]], fields: Sequence[str]) -> str:
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=list(fields))
    writer.writeheader()
    writer.writerows(rows)
    return out.getvalue()


def format_rows(rows: List[Dict[str, Any]], fields: Sequence[str], fmt: str) -> str:
    """Renders flat records, one per line (text, CSV) or as a JSON list."""
    _check_format(fmt)
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if fmt == "csv":
        return _csv(rows, fields)
    return _table(rows, fields) + "\n"


def _summary_block(report: Report) -> str:
    lines = ["", "Summary"]
    rows = [
        {
            "claim": claim_id,
            "passed": counts.passed,
            "failed": counts.failed,
            "errors": counts.errors,
        }
        for claim_id, counts in report.summary.items()
    ]
    lines.append(_table(rows, ("claim", "passed", "failed", "errors")))
    for error in report.errors:
        instance = f" ({error.instance})" if error.instance else ""
        lines.append(f"error: {error.claim_id} at p={error.p}{instance}: {error.message}")
    verdict = "all checks hold" if report.all_hold else "SOME CHECKS FAILED"
    lines.append(f"{len(report.outcomes)} outcomes, {verdict}")
    return "\n".join(lines) + "\n"


def format_report(report: Report, fmt: str) -> str:
    """Renders a report.

    JSON is one document with config, outcomes, summary, errors and timing;
    CSV carries the outcome records only; text is a table plus a summary.
    """
    _check_format(fmt)
    if fmt == "json":
        return json.dumps(report_document(report), indent=2) + "\n"
    records = [outcome_record(o) for o in report.outcomes]
    if fmt == "csv":
        return _csv(records, OUTCOME_FIELDS)
    return _table(records, OUTCOME_FIELDS) + "\n" + _summary_block(report)
