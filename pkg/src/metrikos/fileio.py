"""On-disk formats: point-set JSON, graph JSON, and distance-matrix CSV.

Point sets:   {"dim": n, "points": [[x, y, ...], ...]}
Graphs:       {"vertices": n, "edges": [[u, v, length], ...],
               "coords": [[x, y], ...]}   (coords optional)
Matrix CSV:   n rows of n comma-separated decimals, with an optional first
              header row of labels. All values must be finite.
"""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path

import numpy as np

from .core import DistanceMatrix
from .graphs import WeightedGraph
from .points import as_point


def load_points(path) -> tuple[int, list[np.ndarray]]:
    """Read a point-set JSON file; returns (dim, points)."""
    with open(path) as f:
        data = json.load(f)
    if not isinstance(data, dict) or "dim" not in data or "points" not in data:
        raise ValueError(f"{path}: expected an object with 'dim' and 'points'")
    dim = int(data["dim"])
    if dim < 1:
        raise ValueError(f"{path}: dim must be a positive integer")
    points = [as_point(p, dim=dim) for p in data["points"]]
    return dim, points


def dump_points(path, points) -> None:
    pts = [as_point(p) for p in points]
    if not pts:
        raise ValueError("point set must be nonempty")
    dim = pts[0].size
    payload = {"dim": dim, "points": [[float(c) for c in as_point(p, dim=dim)] for p in pts]}
    Path(path).write_text(json.dumps(payload, indent=1) + "\n")


def load_graph(path) -> WeightedGraph:
    """Read a graph JSON file into a WeightedGraph."""
    with open(path) as f:
        data = json.load(f)
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise ValueError(f"{path}: expected an object with 'vertices' and 'edges'")
    edges = [tuple(e) for e in data["edges"]]
    return WeightedGraph(int(data["vertices"]), edges, coords=data.get("coords"))


def load_matrix_csv(path) -> DistanceMatrix:
    """Read a distance-matrix CSV, detecting an optional label header row."""
    with open(path, newline="") as f:
        rows = [row for row in csv.reader(f) if row and any(cell.strip() for cell in row)]
    if not rows:
        raise ValueError(f"{path}: empty matrix file")

    def parse_row(row):
        return [float(cell) for cell in row]

    labels = None
    try:
        parse_row(rows[0])
    except ValueError:
        labels = tuple(cell.strip() for cell in rows[0])
        rows = rows[1:]
        if not rows:
            raise ValueError(f"{path}: header row but no data rows")
    values = []
    for row in rows:
        parsed = parse_row(row)
        if any(not math.isfinite(v) for v in parsed):
            raise ValueError(f"{path}: matrix entries must be finite")
        values.append(parsed)
    widths = {len(r) for r in values}
    if len(widths) != 1 or widths.pop() != len(values):
        raise ValueError(f"{path}: matrix must be square")
    return DistanceMatrix(np.array(values), labels=labels)
