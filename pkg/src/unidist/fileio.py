"""CSV sample ingestion and JSON/CSV report output."""

from __future__ import annotations

import csv
import io
import json
import math
import os
import sys
from pathlib import Path

import numpy as np


class DataError(ValueError):
    """Malformed input data; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None, path=None):
        self.line = line
        self.path = path
        parts = [str(path)] if path is not None else []
        if line is not None:
            parts.append(f"line {line}")
        super().__init__(": ".join(parts + [message]))


def read_samples_csv(path, header: bool = False) -> np.ndarray:
    """Read a numeric CSV, one row per observation and one column per feature.

    Returns an array of shape (observations, features).  Blank lines are
    skipped.  With ``header=True`` the first non-blank row is discarded.
    """
    rows = []
    width = None
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header_pending = header
        for row in reader:
            if not row or all(not cell.strip() for cell in row):
                continue
            if header_pending:
                header_pending = False
                continue
            try:
                values = [float(cell) for cell in row]
            except ValueError:
                raise DataError(f"non-numeric value in row {row!r}", line=reader.line_num, path=path) from None
            if not all(math.isfinite(v) for v in values):
                raise DataError("non-finite value", line=reader.line_num, path=path)
            if width is None:
                width = len(values)
            elif len(values) != width:
                raise DataError(f"expected {width} columns, got {len(values)}", line=reader.line_num, path=path)
            rows.append(values)
    if not rows:
        raise DataError("no data rows", path=path)
    return np.array(rows, dtype=float)


def read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise DataError(f"invalid JSON: {exc.msg}", line=exc.lineno, path=path) from None


def to_json(data) -> str:
    return json.dumps(data, indent=2, allow_nan=False) + "\n"


def to_csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def render_report(report, format: str = "json") -> str:
    if format == "json":
        return to_json(report.to_dict())
    if format == "csv":
        return to_csv(report.csv_header(), report.csv_rows())
    raise ValueError(f"unknown report format {format!r}; expected json or csv")


def write_text(text: str, destination=None):
    """Write to a path or open text stream; None or '-' means stdout."""
    if destination is None or destination == "-":
        sys.stdout.write(text)
        return
    if hasattr(destination, "write"):
        destination.write(text)
        return
    path = Path(destination)
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(exc.errno, f"cannot write report to {os.fspath(path)}: {exc.strerror}") from exc


def emit_report(report, format: str = "json", destination=None):
    """Serialize ``report`` (anything with ``to_dict`` and CSV rows) deterministically."""
    write_text(render_report(report, format), destination)
