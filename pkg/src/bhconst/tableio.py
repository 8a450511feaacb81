"""CSV/JSON emission with fixed significant digits and atomic file writes."""

from __future__ import annotations

import csv
import io
import json
import os
import sys
import tempfile
from dataclasses import dataclass

DEFAULT_PRECISION = 12


@dataclass(frozen=True)
class OutputSpec:
    format: str = "csv"
    precision: int = DEFAULT_PRECISION
    destination: str | None = None  # None or "-" means stdout

    def __post_init__(self):
        if self.format not in ("csv", "json"):
            raise ValueError(f"format must be csv or json, got {self.format!r}")
        if not 6 <= self.precision <= 17:
            raise ValueError(f"precision must lie in [6, 17], got {self.precision}")


def fmt(x, precision: int = DEFAULT_PRECISION) -> str:
    if isinstance(x, bool) or x is None:
        return "" if x is None else str(x).lower()
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        return "%.*g" % (precision, x)
    return str(x)


def rows_to_csv(header, rows, precision: int = DEFAULT_PRECISION) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(v, precision) for v in row])
    return buf.getvalue()


def parse_csv(text: str) -> tuple[list[str], list[list]]:
    """Inverse of rows_to_csv for numeric tables (ints stay ints)."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    rows = []
    for rec in reader:
        row = []
        for cell in rec:
            try:
                row.append(int(cell))
            except ValueError:
                try:
                    row.append(float(cell))
                except ValueError:
                    row.append(cell)
        rows.append(row)
    return header, rows


def rounded(x: float, precision: int = DEFAULT_PRECISION) -> float:
    return float("%.*g" % (precision, x))


def table_to_json(header, rows, precision: int = DEFAULT_PRECISION) -> str:
    objs = [
        {k: (rounded(v, precision) if isinstance(v, float) else v) for k, v in zip(header, row)}
        for row in rows
    ]
    return json.dumps(objs, ensure_ascii=False) + "\n"


def emit(text: str, destination: str | None) -> None:
    """Write to stdout, or atomically to a file (temp file + rename)."""
    if destination in (None, "-"):
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    directory = os.path.dirname(os.path.abspath(destination))
    fd, tmp = tempfile.mkstemp(prefix=".tmp-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, destination)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
