"""CSV and JSON emission of sweep, threshold and spectrum rows."""

import csv
import io
import json
import math

SIG_DIGITS = 12

SWEEP_COLUMNS = ("model", "n", "j", "gamma", "temp", "pair_i", "pair_j", "c1", "c2", "negativity")
THRESHOLD_COLUMNS = ("model", "n", "j", "gamma", "pair_i", "pair_j", "t_th", "t_lo", "t_hi",
                     "tol", "status")
SPECTRUM_COLUMNS = ("index", "energy", "sz_sector")


def _round(x):
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    x = float(x)
    if not math.isfinite(x):
        return None
    x = float(f"{x:.{SIG_DIGITS}g}")
    return 0.0 if x == 0 else x  # no "-0"


def _cell(x):
    x = _round(x)
    if x is None:
        return ""
    if isinstance(x, float):
        return f"{x:.{SIG_DIGITS}g}"
    return str(x)


def to_rows(records, columns):
    rows = []
    for r in records:
        d = r if isinstance(r, dict) else (r.as_dict() if hasattr(r, "as_dict") else dict(zip(columns, r)))
        rows.append({c: d.get(c) for c in columns})
    return rows


def format_csv(records, columns):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in to_rows(records, columns):
        writer.writerow([_cell(row[c]) for c in columns])
    return buf.getvalue()


def format_json(records, columns):
    rows = [{c: _round(row[c]) for c in columns} for row in to_rows(records, columns)]
    return json.dumps(rows, indent=2) + "\n"


def format_records(records, columns, fmt="csv"):
    if fmt == "csv":
        return format_csv(records, columns)
    if fmt == "json":
        return format_json(records, columns)
    raise ValueError(f"unknown format {fmt!r}")


def read_csv(text):
    return list(csv.DictReader(io.StringIO(text)))
