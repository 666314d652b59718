from __future__ import annotations

import json
from collections import defaultdict
from typing import Any, Sequence

import numpy as np

from depbits.config import ReportFormat
from depbits.repair.models import REPAIR_KINDS
from depbits.stats.models import CoverageReport, TreebankProfile

MACRO_AVERAGE = "Macro average"

# (column, JSON field) in output order
_COVERAGE_COLUMNS: tuple[tuple[str, str], ...] = (
    ("Treebank", "treebank"),
    ("Encoding", "encoding"),
    ("L", "label_inventory"),
    ("C", "arc_coverage"),
    ("TreeC", "tree_coverage"),
    ("L+rel", "combined_inventory"),
    ("Sents", "sentences"),
    ("Words", "words"),
    ("Skipped", "skipped"),
    ("RepTrees", "repaired_sentences"),
    ("RepWords", "repaired_words"),
    ("Dropped", "dropped_arcs"),
)

_PROFILE_COLUMNS: tuple[tuple[str, str], ...] = (
    ("Treebank", "treebank"),
    ("Sents", "sentences"),
    ("Words", "words"),
    ("Proj", "projective_ratio"),
    ("1-planar", "planar_ratio"),
    ("RightArcs", "right_arc_ratio"),
    ("AvgD", "mean_distance"),
)

_RATIOS = {"arc_coverage", "tree_coverage", "projective_ratio", "planar_ratio", "right_arc_ratio"}


def format_coverage(value: float) -> str:
    """Percentage with two decimals; ``100`` only when exact, ``>99.99`` just below."""
    if value >= 1.0:
        return "100"
    pct = value * 100.0
    if round(pct, 2) >= 100.0:
        return ">99.99"
    return f"{pct:.2f}"


def _coverage_row(r: CoverageReport) -> dict[str, Any]:
    row: dict[str, Any] = {key: getattr(r, key) for _, key in _COVERAGE_COLUMNS}
    row["repair_counts"] = {k: r.repair_counts.get(k, 0) for k in REPAIR_KINDS}
    return row


def _profile_row(p: TreebankProfile) -> dict[str, Any]:
    return {key: getattr(p, key) for _, key in _PROFILE_COLUMNS}


def _macro_rows(rows: list[dict[str, Any]], columns: Sequence[tuple[str, str]], group: str | None) -> list[dict[str, Any]]:
    """One arithmetic-mean row per group having at least two treebanks."""
    buckets: dict[str, list[dict[str, Any]]] = defaultdict(list)
    for row in rows:
        buckets[row[group] if group else ""].append(row)
    out: list[dict[str, Any]] = []
    for key, members in buckets.items():
        if len({m["treebank"] for m in members}) < 2:
            continue
        avg: dict[str, Any] = {"treebank": MACRO_AVERAGE}
        if group:
            avg[group] = key
        for _, field_name in columns:
            if field_name in avg:
                continue
            avg[field_name] = float(np.mean([m[field_name] for m in members]))
        if "repair_counts" in members[0]:
            avg["repair_counts"] = {
                kind: float(np.mean([m["repair_counts"][kind] for m in members]))
                for kind in members[0]["repair_counts"]
            }
        out.append(avg)
    return out


def _cell(field_name: str, value: Any) -> str:
    if field_name in {"arc_coverage", "tree_coverage"}:
        return format_coverage(value)
    if field_name in _RATIOS:
        return f"{value * 100.0:.2f}"
    if isinstance(value, float):
        return f"{value:.3f}" if field_name == "mean_distance" else f"{value:.1f}"
    return str(value)


def _render(rows: list[dict[str, Any]], columns: Sequence[tuple[str, str]], fmt: ReportFormat) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2, sort_keys=False) + "\n"

    header = [name for name, _ in columns]
    body = [[_cell(key, row[key]) for _, key in columns] for row in rows]
    if fmt == "tsv":
        return "".join("\t".join(cells) + "\n" for cells in [header, *body])

    widths = [max(len(c) for c in col) for col in zip(header, *body)]
    lines = []
    for k, cells in enumerate([header, *body]):
        lines.append("  ".join(
            c.ljust(w) if i < 2 else c.rjust(w) for i, (c, w) in enumerate(zip(cells, widths))
        ).rstrip())
        if k == 0:
            lines.append("-" * len(lines[0]))
    return "\n".join(lines) + "\n"


def report(reports: Sequence[CoverageReport], fmt: ReportFormat = "text") -> str:
    """Coverage table with one row per (treebank, encoding) in input order.

    A macro-average row per encoding is appended when it covers two or more
    treebanks.  JSON rows also carry per-kind repair counts.
    """
    rows = [_coverage_row(r) for r in reports]
    rows += _macro_rows(rows, _COVERAGE_COLUMNS, group="encoding")
    return _render(rows, _COVERAGE_COLUMNS, fmt)


def report_profiles(profiles: Sequence[TreebankProfile], fmt: ReportFormat = "text") -> str:
    rows = [_profile_row(p) for p in profiles]
    rows += _macro_rows(rows, _PROFILE_COLUMNS, group=None)
    return _render(rows, _PROFILE_COLUMNS, fmt)
