"""
Plain-text and CSV renderings of verification reports
"""
import csv
import io
from typing import List

from boolcat.models.dto import VerificationReport, VerificationRow

HEADER_LABELS = {
    "functional_equation": "fn-eq",
    "trees": "trees",
}


def _column_label(key: str) -> str:
    if key in HEADER_LABELS:
        return HEADER_LABELS[key]
    method, _, spec = key.partition(":")
    return f"{method} {spec}"


def _count_keys(report: VerificationReport) -> List[str]:
    keys: List[str] = []
    for row in report.rows:
        for key in row.counts:
            if key not in keys:
                keys.append(key)
    return keys


def render_table(report: VerificationReport, show_timing: bool = True) -> str:
    """Aligned table, one row per n, followed by the overall verdict"""
    keys = _count_keys(report)
    headers = ["n", "a_n"] + [_column_label(k) for k in keys] + ["C_n", "2^(n-1)", "status"]
    if show_timing:
        headers.append("ms")

    body: List[List[str]] = []
    for row in report.rows:
        cells = [str(row.n), str(row.a_n)]
        cells.extend(str(row.counts[k]) if k in row.counts else "-" for k in keys)
        cells.extend([str(row.catalan_n), str(row.power2_n), "PASS" if row.passed else "FAIL"])
        if show_timing:
            cells.append(f"{row.millis:.1f}")
        body.append(cells)

    widths = [len(h) for h in headers]
    for cells in body:
        widths = [max(w, len(c)) for w, c in zip(widths, cells)]

    def line(cells: List[str]) -> str:
        return "  ".join(c.rjust(w) for c, w in zip(cells, widths)).rstrip()

    summary = []
    summary.append("BOOLEAN-CATALAN PREIMAGE VERIFICATION")
    summary.append("=" * 50)
    summary.append(line(headers))
    summary.append("-" * len(line(headers)))
    summary.extend(line(cells) for cells in body)
    summary.append("")

    for row in report.rows:
        for failure in row.failures:
            summary.append(f"n={row.n}: {failure}")

    verdict = "ALL ROWS PASS" if report.passed else "VERIFICATION FAILED"
    summary.append(f"overall: {report.overall} ({verdict})")
    return "\n".join(summary) + "\n"


def render_csv(report: VerificationReport, show_timing: bool = True) -> str:
    keys = _count_keys(report)
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    header = ["n", "a_n", "catalan_n", "power2_n"] + keys + ["pass"]
    if show_timing:
        header.append("millis")
    writer.writerow(header)
    for row in report.rows:
        writer.writerow(_csv_cells(row, keys, show_timing))
    return out.getvalue()


def _csv_cells(row: VerificationRow, keys: List[str], show_timing: bool) -> List[str]:
    cells = [str(row.n), str(row.a_n), str(row.catalan_n), str(row.power2_n)]
    cells.extend(str(row.counts.get(k, "")) for k in keys)
    cells.append("true" if row.passed else "false")
    if show_timing:
        cells.append(f"{row.millis:.3f}")
    return cells
