"""JSON and CSV serialisation of identity reports.

Numbers are rounded to 15 significant digits so identical runs produce
byte-identical output. Complex values become ``{"re": .., "im": ..}`` in JSON
and ``*_re`` / ``*_im`` column pairs in CSV.
"""

import csv
import io
import json
import math

SIG_DIGITS = 15

_COMPLEX = {
    "type": "object",
    "properties": {"re": {"type": ["number", "null"]}, "im": {"type": ["number", "null"]}},
    "required": ["re", "im"],
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "identity verification report",
    "type": "object",
    "required": ["command", "talbot_nodes", "passed", "runs"],
    "properties": {
        "command": {"enum": ["verify", "falsify", "eval", "table"]},
        "talbot_nodes": {"type": "integer", "minimum": 16, "maximum": 128},
        "passed": {"type": "boolean"},
        "runs": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["identity_id", "pair_id", "tol", "false_form", "grid", "reports", "passed"],
                "properties": {
                    "identity_id": {"type": "string"},
                    "pair_id": {"type": ["string", "null"]},
                    "tol": {"type": "number", "exclusiveMinimum": 0},
                    "false_form": {"type": "boolean"},
                    "passed": {"type": "boolean"},
                    "grid": {"type": "array", "items": {"type": "object"}},
                    "reports": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": [
                                "identity_id", "grid_point", "lhs", "rhs",
                                "abs_err", "rel_err", "verdict", "diagnostic",
                            ],
                            "properties": {
                                "identity_id": {"type": "string"},
                                "grid_point": {"type": "object"},
                                "lhs": _COMPLEX,
                                "rhs": _COMPLEX,
                                "abs_err": {"type": ["number", "null"], "minimum": 0},
                                "rel_err": {"type": ["number", "null"], "minimum": 0},
                                "verdict": {"enum": ["MATCH", "MISMATCH", "ERROR"]},
                                "diagnostic": {"type": "string"},
                            },
                        },
                    },
                },
            },
        },
    },
}


def fmt(x):
    """Round to 15 significant digits; non-finite values become None."""
    x = float(x)
    if not math.isfinite(x):
        return None
    return float(f"{x:.{SIG_DIGITS}g}")


def fmt_complex(z):
    z = complex(z)
    return {"re": fmt(z.real), "im": fmt(z.imag)}


def _fmt_value(v):
    if isinstance(v, str):
        return v
    if isinstance(v, (tuple, list)):
        return [_fmt_value(x) for x in v]
    z = complex(v)
    if z.imag == 0:
        return fmt(z.real)
    return fmt_complex(z)


def point_to_json(point):
    return {k: _fmt_value(v) for k, v in point.items()}


def report_to_json(r):
    return {
        "identity_id": r.identity_id,
        "grid_point": point_to_json(r.grid_point),
        "lhs": fmt_complex(r.lhs),
        "rhs": fmt_complex(r.rhs),
        "abs_err": fmt(r.abs_err),
        "rel_err": fmt(r.rel_err),
        "verdict": r.verdict,
        "diagnostic": r.diagnostic,
    }


def run_to_json(identity_id, pair_id, tol, false_form, grid, reports, passed):
    return {
        "identity_id": identity_id,
        "pair_id": pair_id,
        "tol": fmt(tol),
        "false_form": false_form,
        "passed": passed,
        "grid": [point_to_json(p) for p in grid],
        "reports": [report_to_json(r) for r in reports],
    }


def dumps_json(document):
    return json.dumps(document, indent=2) + "\n"


def _num(x):
    v = fmt(x)
    return "" if v is None else f"{v:.{SIG_DIGITS}g}"


def _complex_cells(z):
    z = complex(z)
    return [_num(z.real), _num(z.imag)]


CSV_PARAMS = ("s", "t", "a", "b", "alpha", "beta", "gamma")
CSV_HEADER = (
    ["identity_id", "pair_id"]
    + [f"{p}_{part}" for p in CSV_PARAMS for part in ("re", "im")]
    + ["coeffs", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_err", "rel_err", "verdict", "diagnostic"]
)


def reports_to_csv(reports):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in reports:
        point = r.grid_point
        row = [r.identity_id, point.get("pair", "")]
        for p in CSV_PARAMS:
            row += _complex_cells(point[p]) if p in point else ["", ""]
        coeffs = point.get("coeffs")
        row.append(
            "" if coeffs is None
            else ";".join(f"{_num(complex(c).real)}:{_num(complex(c).imag)}" for c in coeffs)
        )
        row += _complex_cells(r.lhs) + _complex_cells(r.rhs)
        row += [_num(r.abs_err), _num(r.rel_err), r.verdict, r.diagnostic]
        writer.writerow(row)
    return buf.getvalue()
