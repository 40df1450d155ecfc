"""Coordinate-point validation helpers.

Points are plain 1-D float64 numpy arrays; these helpers coerce user input
(tuples, lists, arrays) into that form and enforce finiteness.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np


def as_point(p, dim: int | None = None) -> np.ndarray:
    """Coerce ``p`` to a finite 1-D float64 array, optionally of length ``dim``."""
    arr = np.asarray(p, dtype=float)
    if arr.ndim == 0:
        arr = arr.reshape(1)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError(f"point must be a 1-D coordinate sequence, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"point coordinates must be finite, got {arr!r}")
    if dim is not None and arr.size != dim:
        raise ValueError(f"expected a {dim}-dimensional point, got {arr.size} coordinates")
    return arr.copy()


def as_real(x) -> float:
    """Coerce ``x`` (a scalar or a 1-coordinate point) to a finite float."""
    arr = np.asarray(x, dtype=float)
    if arr.ndim == 1 and arr.size == 1:
        arr = arr[0]
    if arr.ndim != 0:
        raise ValueError(f"expected a single real number, got shape {arr.shape}")
    v = float(arr)
    if not np.isfinite(v):
        raise ValueError(f"value must be finite, got {v!r}")
    return v


def same_dim(p: np.ndarray, q: np.ndarray) -> None:
    if p.size != q.size:
        raise ValueError(f"dimension mismatch: {p.size} vs {q.size}")


def point_key(p):
    """Hashable exact-equality key for a carrier point of any variant."""
    if isinstance(p, (int, np.integer)):
        return int(p)
    if isinstance(p, (float, np.floating)):
        return float(p)
    arr = np.asarray(p, dtype=float)
    if arr.ndim == 0:
        return float(arr)
    return tuple(float(c) for c in arr)


def points_equal(p, q) -> bool:
    """Exact coordinate equality (the identity-axiom notion of sameness)."""
    return point_key(p) == point_key(q)


def unique_keys(points: Iterable) -> frozenset:
    return frozenset(point_key(p) for p in points)


def as_point_list(points: Sequence, dim: int | None = None) -> list[np.ndarray]:
    return [as_point(p, dim=dim) for p in points]
