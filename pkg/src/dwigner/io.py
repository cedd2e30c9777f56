"""File formats: JSON matrix files and grid serialization.

Matrices travel as JSON objects with separate real and imaginary arrays,
producible from any tomography pipeline.  Grids serialize to CSV, JSON,
or gnuplot-ready columns; floats use the shortest round-trip rendering,
so parse(emit(grid)) reproduces the grid bit for bit.
"""

from __future__ import annotations

import json

import numpy as np

GRID_FORMATS = ("csv", "json", "gnuplot")


def serialize_matrix(m) -> str:
    """Render a square complex matrix as a JSON object with keys dim/re/im."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    doc = {
        "dim": int(a.shape[0]),
        "re": [[float(v) for v in row] for row in a.real],
        "im": [[float(v) for v in row] for row in a.imag],
    }
    return json.dumps(doc, sort_keys=True)


def parse_matrix(text) -> np.ndarray:
    """Parse the JSON matrix format back into a complex ndarray.

    Reports malformed syntax with line/column positions, ragged rows with
    the offending row index, and dimension mismatches with both sizes.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed matrix file: {exc}") from exc
    if not isinstance(doc, dict):
        raise ValueError(f"matrix file must be a JSON object, got {type(doc).__name__}")
    for key in ("dim", "re", "im"):
        if key not in doc:
            raise ValueError(f"matrix file is missing required field {key!r}")
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise ValueError(f"field 'dim' must be a positive integer, got {dim!r}")
    parts = {}
    for key in ("re", "im"):
        rows = doc[key]
        if not isinstance(rows, list) or len(rows) != dim:
            count = len(rows) if isinstance(rows, list) else rows
            raise ValueError(f"field {key!r} must have {dim} rows, got {count!r}")
        for index, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != dim:
                raise ValueError(
                    f"row {index} of field {key!r} has {len(row) if isinstance(row, list) else 1} "
                    f"entries, expected {dim}"
                )
        parts[key] = np.array(rows, dtype=float)
    return parts["re"] + 1j * parts["im"]


def _grid_rows(values: np.ndarray):
    for index in np.ndindex(values.shape):
        yield index, values[index]


def _check_grid(values) -> np.ndarray:
    w = np.asarray(values, dtype=float)
    if w.ndim == 2 and w.shape[0] == w.shape[1]:
        return w
    if w.ndim == 4 and w.shape == (2, 2, 2, 2):
        return w
    raise ValueError(f"expected an N x N grid or a 2x2x2x2 pair grid, got shape {w.shape}")


def _columns(w: np.ndarray) -> list[str]:
    if w.ndim == 2:
        return ["mu", "nu", "w"]
    return ["mu1", "nu1", "mu2", "nu2", "w"]


def emit_grid(values, fmt: str = "csv") -> str:
    """Serialize a grid in lexicographic index order.

    Formats: ``csv`` with an index header, ``json`` with explicit column
    names, or ``gnuplot`` whitespace columns with a blank line between
    blocks of the leading index.
    """
    w = _check_grid(values)
    columns = _columns(w)
    if fmt == "csv":
        lines = [",".join(columns)]
        for index, value in _grid_rows(w):
            lines.append(",".join([str(i) for i in index] + [repr(float(value))]))
        return "\n".join(lines) + "\n"
    if fmt == "json":
        rows = [[*(int(i) for i in index), float(value)] for index, value in _grid_rows(w)]
        return json.dumps({"columns": columns, "rows": rows}) + "\n"
    if fmt == "gnuplot":
        lines = []
        previous_block = None
        for index, value in _grid_rows(w):
            if previous_block is not None and index[0] != previous_block:
                lines.append("")
            previous_block = index[0]
            lines.append(" ".join([str(i) for i in index] + [repr(float(value))]))
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown grid format {fmt!r}; expected one of {GRID_FORMATS}")


def _rows_to_grid(rows) -> np.ndarray:
    rows = list(rows)
    if not rows:
        raise ValueError("grid file contains no rows")
    width = len(rows[0])
    if width == 3:
        n = round(len(rows) ** 0.5)
        if n * n != len(rows):
            raise ValueError(f"grid file has {len(rows)} rows, not a perfect square")
        grid = np.empty((n, n))
    elif width == 5:
        if len(rows) != 16:
            raise ValueError(f"pair grid file must have 16 rows, got {len(rows)}")
        grid = np.empty((2, 2, 2, 2))
    else:
        raise ValueError(f"grid rows must have 3 or 5 columns, got {width}")
    seen = set()
    for row in rows:
        if len(row) != width:
            raise ValueError("grid file has rows of inconsistent width")
        index = tuple(int(v) for v in row[:-1])
        if index in seen:
            raise ValueError(f"duplicate grid index {index}")
        seen.add(index)
        try:
            grid[index] = float(row[-1])
        except IndexError:
            raise ValueError(f"grid index {index} out of range for shape {grid.shape}") from None
    if len(seen) != grid.size:
        raise ValueError("grid file does not cover every index")
    return grid


def parse_grid(text, fmt: str = "csv") -> np.ndarray:
    """Parse a serialized grid back into an ndarray (inverse of emit_grid)."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    if fmt == "csv":
        lines = [line for line in text.splitlines() if line.strip()]
        if not lines:
            raise ValueError("grid file is empty")
        return _rows_to_grid(line.split(",") for line in lines[1:])
    if fmt == "json":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed grid file: {exc}") from exc
        if not isinstance(doc, dict) or "rows" not in doc:
            raise ValueError("grid file must be a JSON object with a 'rows' field")
        return _rows_to_grid(doc["rows"])
    if fmt == "gnuplot":
        lines = [line for line in text.splitlines() if line.strip()]
        return _rows_to_grid(line.split() for line in lines)
    raise ValueError(f"unknown grid format {fmt!r}; expected one of {GRID_FORMATS}")
