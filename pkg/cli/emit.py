"""
Report emission as JSON, CSV or aligned text, and re-parsing of JSON reports.

JSON keeps full float precision so reports round-trip; CSV and text round
numbers to a fixed number of significant digits.
"""

import csv
import io
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, TextIO, Tuple, Type

from pydantic import BaseModel, ValidationError

from cli.models import BlockRequirementReport, BudgetReport, OutputFormat
from constants.models import TuringConstants
from optimize.models import SearchResult
from scanner.models import CertificationReport
from siegel.models import GrowthReport
from utils.errors import ParameterError, ReportIOError

SCHEMA_PREFIX = "turing-bounds"
SCHEMA_VERSION = 1

REPORT_KINDS: Dict[str, Type[BaseModel]] = {
    "constants": TuringConstants,
    "search": SearchResult,
    "budget": BudgetReport,
    "blocks-required": BlockRequirementReport,
    "growth": GrowthReport,
    "certification": CertificationReport,
}


def report_kind(report: BaseModel) -> str:
    """Schema kind of a report model."""
    for kind, model in REPORT_KINDS.items():
        if type(report) is model:
            return kind
    raise ParameterError(f"No report schema for {type(report).__name__}", field="report")


def schema_tag(kind: str) -> str:
    return f"{SCHEMA_PREFIX}/{kind}/v{SCHEMA_VERSION}"


def fmt_number(value: Any, digits: int) -> str:
    """Numbers to `digits` significant digits; everything else as text."""
    if isinstance(value, bool) or value is None:
        return "" if value is None else str(value).lower()
    if isinstance(value, float):
        return f"{value:.{digits}g}"
    if isinstance(value, (list, tuple)):
        return " ".join(fmt_number(v, digits) for v in value)
    if hasattr(value, "value"):
        return str(value.value)
    return str(value)


# ---------------------------------------------------------------------------
# Tabular views
# ---------------------------------------------------------------------------

def _table(report: BaseModel) -> Tuple[List[str], List[List[Any]]]:
    """Header and rows of the tabular (CSV) view of a report."""
    if isinstance(report, SearchResult):
        with_g = any(row.g is not None for row in report.table)
        header = ["c", "d", "a", "b"] + (["g"] if with_g else []) + ["objective"]
        rows = [
            [row.c, row.d, row.a, row.b] + ([row.g] if with_g else []) + [row.objective]
            for row in report.table
        ]
        return header, rows

    if isinstance(report, CertificationReport):
        header = ["start_index", "length", "counts", "rosser_ok"]
        rows = [[b.start_index, b.length, b.counts, b.rosser_ok] for b in report.blocks]
        return header, rows

    if isinstance(report, TuringConstants):
        header = ["family", "a", "b"] + (["g"] if report.g is not None else []) + ["t0"]
        row = [report.family, report.a, report.b] + ([report.g] if report.g is not None else []) + [report.t0]
        return header, [row]

    if isinstance(report, BudgetReport):
        header = ["family", "a", "b", "g", "log_term", "value"]
        c = report.constants
        return header, [[c.family, c.a, c.b, c.g, report.log_term, report.value]]

    if isinstance(report, BlockRequirementReport):
        header = ["a", "b", "g_p", "quadratic_coefficient", "linear_coefficient", "required_blocks"]
        c = report.constants
        return header, [[c.a, c.b, report.g_p, report.quadratic_coefficient,
                         report.linear_coefficient, report.required_blocks]]

    if isinstance(report, GrowthReport):
        header = ["t_lo", "t_hi", "samples", "max_ratio", "argmax", "bound", "passed"]
        return header, [[report.t_lo, report.t_hi, report.samples, report.max_ratio,
                         report.argmax, report.bound, report.passed]]

    raise ParameterError(f"No tabular view for {type(report).__name__}", field="report")


def render_json(report: BaseModel) -> str:
    payload = {"schema": schema_tag(report_kind(report))}
    payload.update(report.model_dump(mode="json"))
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def render_csv(report: BaseModel, digits: int) -> str:
    header, rows = _table(report)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt_number(v, digits) for v in row])
    return buffer.getvalue()


def _aligned(header: List[str], rows: List[List[str]]) -> List[str]:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in rows]
    return lines


def render_text(report: BaseModel, digits: int) -> str:
    lines: List[str] = []

    if isinstance(report, SearchResult):
        best = report.best_params
        lines.append(f"family      {report.family.value}")
        lines.append(f"best        c={fmt_number(best.c, digits)}  d={fmt_number(best.d, digits)}")
        lines.append(f"objective   {fmt_number(report.best_value, digits)}")
        lines.append(f"evaluated   {len(report.table)}")
        lines.append(f"skipped     {len(report.skipped)}")
        lines.append("")
        header, rows = _table(report)
        lines += _aligned(header, [[fmt_number(v, digits) for v in r] for r in rows])
        return "\n".join(lines) + "\n"

    if isinstance(report, CertificationReport):
        c = report.constants_used
        summary = [
            ("range", f"[g_{report.n}, g_{report.p}) = [{fmt_number(report.g_n, digits)}, "
                      f"{fmt_number(report.g_p, digits)})"),
            ("constants", f"a={fmt_number(c.a, digits)}  b={fmt_number(c.b, digits)}"),
            ("blocks", f"{report.blocks_used} (need {report.required_blocks})"),
            ("located", str(report.lower_count)),
            ("upper bound", str(report.upper_bound)),
            ("certified", fmt_number(report.certified, digits)),
            ("N(g_p)", "" if report.exact_count is None else str(report.exact_count)),
        ]
        width = max(len(k) for k, _ in summary)
        lines += [f"{k.ljust(width)}  {v}" for k, v in summary]
        lines.append("")
        header, rows = _table(report)
        lines += _aligned(header, [[fmt_number(v, digits) for v in r] for r in rows])
        return "\n".join(lines) + "\n"

    header, rows = _table(report)
    width = max(len(h) for h in header)
    for name, value in zip(header, rows[0]):
        lines.append(f"{name.ljust(width)}  {fmt_number(value, digits)}")
    return "\n".join(lines) + "\n"


def render(report: BaseModel, output_format: OutputFormat, digits: int = 6) -> str:
    """
    Report as text in the requested format.

    Args:
        report: Report model
        output_format: json, csv or text
        digits: Significant digits for csv and text

    Returns:
        Rendered report ending in a newline
    """
    output_format = OutputFormat(output_format)
    if output_format == OutputFormat.JSON:
        return render_json(report)
    if output_format == OutputFormat.CSV:
        return render_csv(report, digits)
    return render_text(report, digits)


def emit(
    report: BaseModel,
    output_format: OutputFormat,
    path: Optional[Path] = None,
    digits: int = 6,
    stream: Optional[TextIO] = None,
) -> int:
    """
    Write a report to a file or stream.

    Args:
        report: Report model
        output_format: json, csv or text
        path: Output file; standard output when None
        digits: Significant digits for csv and text
        stream: Stream used when path is None

    Returns:
        Number of bytes written

    Raises:
        ReportIOError: If the file cannot be written
    """
    text = render(report, output_format, digits)
    data = text.encode("utf-8")
    if path is None:
        out = stream if stream is not None else sys.stdout
        out.write(text)
        out.flush()
        return len(data)
    try:
        Path(path).write_bytes(data)
    except OSError as e:
        raise ReportIOError(f"Could not write {path}: {e.strerror or e}", path=str(path))
    return len(data)


def load_report(text: str) -> BaseModel:
    """
    Re-parse a JSON report into its model.

    Args:
        text: JSON emitted by render_json

    Returns:
        The report model
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParameterError(f"Report is not valid JSON: {e.msg}", field="report")
    schema = payload.pop("schema", None) if isinstance(payload, dict) else None
    if not isinstance(schema, str):
        raise ParameterError("Report has no schema field", field="schema")
    for kind, model in REPORT_KINDS.items():
        if schema == schema_tag(kind):
            try:
                return model.model_validate(payload)
            except ValidationError as e:
                raise ParameterError(f"Report does not match {schema}: {e.error_count()} errors", field="schema")
    raise ParameterError(f"Unknown report schema {schema!r}", field="schema")
