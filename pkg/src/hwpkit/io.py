"""Serialisation of operators and coefficient tables.

Operators use ``{"d": int, "rows": [[[re, im], ...], ...]}`` in row-major,
centered-basis order.  Tables are flat rows with columns
``nu, alpha, beta, re_F, im_F, Q, re_W, im_W``; any ordered subset that
keeps the three index columns is accepted.
Floats are written with ``repr`` precision, so a round trip is exact.
"""
from __future__ import annotations

import csv
import io as _io
import json
import math
import os
from typing import IO, Iterable

import numpy as np

from .ring import DimensionError, check_dim

__all__ = ["FormatError", "operator_to_dict", "operator_from_dict", "dump_operator", "load_operator",
           "COLUMNS", "INDEX_COLUMNS", "table_rows", "ww_rows", "format_table", "write_table",
           "load_table"]

INDEX_COLUMNS = ("nu", "alpha", "beta")
COLUMNS = INDEX_COLUMNS + ("re_F", "im_F", "Q", "re_W", "im_W")


class FormatError(ValueError):
    """Malformed input; ``location`` says where (a JSON path or ``line:col``)."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location


def _num(x) -> float:
    x = float(x)
    return 0.0 if x == 0 else x  # no "-0.0" in output


def operator_to_dict(M) -> dict:
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("operator must be a square matrix")
    return {"d": int(M.shape[0]),
            "rows": [[[_num(z.real), _num(z.imag)] for z in row] for row in M]}


def operator_from_dict(obj) -> np.ndarray:
    if not isinstance(obj, dict):
        raise FormatError("$", "expected an object with keys 'd' and 'rows'")
    for key in ("d", "rows"):
        if key not in obj:
            raise FormatError("$", f"missing key {key!r}")
    d = obj["d"]
    if not isinstance(d, int) or isinstance(d, bool):
        raise FormatError("$.d", "expected an integer")
    try:
        check_dim(d)
    except DimensionError as exc:
        raise FormatError("$.d", str(exc)) from None
    rows = obj["rows"]
    if not isinstance(rows, list) or len(rows) != d:
        raise FormatError("$.rows", f"expected a list of {d} rows")
    out = np.empty((d, d), dtype=complex)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != d:
            raise FormatError(f"$.rows[{i}]", f"expected a list of {d} entries")
        for j, z in enumerate(row):
            if (not isinstance(z, list) or len(z) != 2
                    or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in z)):
                raise FormatError(f"$.rows[{i}][{j}]", "expected [re, im] numbers")
            out[i, j] = complex(z[0], z[1])
    return out


def _open(target, mode):
    if isinstance(target, (str, os.PathLike)):
        return open(target, mode, newline="" if "w" in mode else None, encoding="utf-8")
    return None


def dump_operator(M, target: str | os.PathLike | IO[str]) -> None:
    text = json.dumps(operator_to_dict(M)) + "\n"
    fh = _open(target, "w")
    if fh is None:
        target.write(text)
    else:
        with fh:
            fh.write(text)


def _parse_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{exc.lineno}:{exc.colno}", exc.msg) from None


def load_operator(source: str | os.PathLike | IO[str]) -> np.ndarray:
    fh = _open(source, "r")
    if fh is None:
        text = source.read()
    else:
        with fh:
            text = fh.read()
    return operator_from_dict(_parse_json(text))


def table_rows(bargmann_table, ww_table=None, decimals: int | None = None) -> list[dict]:
    """Rows in frame order; ``decimals`` rounds for presentation only."""
    from .frames import q_function

    Q = q_function(bargmann_table)
    rows = []
    for a, b, n, F in bargmann_table.rows():
        row = {"nu": n, "alpha": a, "beta": b, "re_F": F.real, "im_F": F.imag,
               "Q": Q[n, a % bargmann_table.d, b % bargmann_table.d]}
        if ww_table is not None:
            W = ww_table[a, b, n]
            row["re_W"], row["im_W"] = W.real, W.imag
        rows.append(_present(row, decimals))
    return rows


def ww_rows(ww_table, decimals: int | None = None) -> list[dict]:
    """Rows of a unified Wigner-Weyl table in frame order."""
    from .frames import frame_indices

    rows = []
    for a, b, n in frame_indices(ww_table.d, "HWP"):
        W = ww_table[a, b, n]
        rows.append(_present({"nu": n, "alpha": a, "beta": b, "re_W": W.real, "im_W": W.imag}, decimals))
    return rows


def _present(row: dict, decimals) -> dict:
    for k in row:
        if k not in INDEX_COLUMNS:
            v = float(row[k])
            row[k] = _num(round(v, decimals) if decimals is not None else v)
    return row


def _columns(rows) -> tuple[str, ...]:
    keys = set(rows[0]) if rows else set(COLUMNS)
    return tuple(c for c in COLUMNS if c in keys)


def _valid_header(cols) -> bool:
    it = iter(COLUMNS)
    ordered = all(c in it for c in cols)  # consumes the iterator: an ordered-subset test
    return ordered and cols[:3] == INDEX_COLUMNS and len(set(cols)) == len(cols)


def format_table(rows: list[dict], fmt: str = "csv") -> str:
    cols = _columns(rows)
    if fmt == "json":
        return json.dumps({"columns": list(cols), "rows": [[r[c] for c in cols] for r in rows]}) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in rows:
        w.writerow([repr(r[c]) if isinstance(r[c], float) else r[c] for c in cols])
    return buf.getvalue()


def write_table(rows: list[dict], target, fmt: str = "csv") -> None:
    text = format_table(rows, fmt)
    fh = _open(target, "w")
    if fh is None:
        target.write(text)
    else:
        with fh:
            fh.write(text)


def _row(values: Iterable, cols, where: str) -> dict:
    values = list(values)
    if len(values) != len(cols):
        raise FormatError(where, f"expected {len(cols)} fields, got {len(values)}")
    row = {}
    for c, v in zip(cols, values):
        try:
            row[c] = int(v) if c in ("nu", "alpha", "beta") else float(v)
        except (TypeError, ValueError):
            raise FormatError(f"{where}.{c}", f"not a number: {v!r}") from None
        if isinstance(row[c], float) and not math.isfinite(row[c]):
            raise FormatError(f"{where}.{c}", "non-finite value")
    return row


def load_table(source, fmt: str = "csv") -> list[dict]:
    fh = _open(source, "r")
    if fh is None:
        text = source.read()
    else:
        with fh:
            text = fh.read()
    if fmt == "json":
        obj = _parse_json(text)
        if not isinstance(obj, dict) or "columns" not in obj or "rows" not in obj:
            raise FormatError("$", "expected an object with 'columns' and 'rows'")
        cols = tuple(obj["columns"]) if isinstance(obj["columns"], list) else ()
        if not _valid_header(cols):
            raise FormatError("$.columns", f"unexpected columns {list(cols)}")
        return [_row(r if isinstance(r, list) else [], cols, f"$.rows[{i}]")
                for i, r in enumerate(obj["rows"])]
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    lines = list(csv.reader(_io.StringIO(text)))
    if not lines:
        raise FormatError("line 1", "empty table")
    cols = tuple(lines[0])
    if not _valid_header(cols):
        raise FormatError("line 1", f"unexpected header {list(cols)}")
    return [_row(r, cols, f"line {i}") for i, r in enumerate(lines[1:], start=2)]
