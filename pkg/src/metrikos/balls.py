"""Open balls, the nesting lemma as a runtime check, and unit-ball boundary
curves (circle, diamond, square) for the three plane metrics.

Membership is strict: B(p, r) holds the points at distance *less than* r, so
a point at distance exactly r is outside. On the real line the ball is the
open interval (p - r, p + r).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from . import plane
from .core import Chebyshev, Euclidean, MetricSpec, Taxicab, distance
from .points import as_point

BOUNDARY_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class Ball:
    """Open ball: all carrier points at distance < radius from the center."""

    metric: MetricSpec
    center: object
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "radius", float(self.radius))
        if not self.radius > 0:
            raise ValueError(f"radius must be positive, got {self.radius}")
        object.__setattr__(self, "center", self.metric.validate_point(self.center))

    def __contains__(self, x) -> bool:
        return ball_contains(self, x)


def ball_contains(b: Ball, x) -> bool:
    """Strict membership test: distance(center, x) < radius."""
    return distance(b.metric, b.center, x) < b.radius


class NestingWitness(NamedTuple):
    """A probe inside the inner ball that escaped the outer ball."""

    probe: object
    inner_distance: float
    outer_distance: float


def check_nesting(
    metric: MetricSpec, p, r: float, q, t: float, probes: Sequence
) -> tuple[bool, NestingWitness | None]:
    """Check B(q, t) <= B(p, r) over a probe set, given q in B(p, r) and
    0 < t <= r - d(p, q).

    The inclusion is a theorem of the metric axioms, so the preconditions are
    enforced as errors; a False verdict therefore indicates a broken distance
    implementation, and the violating probe is returned as evidence.
    """
    r, t = float(r), float(t)
    cp = metric.validate_point(p)
    cq = metric.validate_point(q)
    dpq = metric._eval(cp, cq)
    if not dpq < r:
        raise ValueError(f"q must lie inside B(p, r): d(p, q) = {dpq} >= r = {r}")
    if not 0 < t <= r - dpq:
        raise ValueError(f"need 0 < t <= r - d(p, q) = {r - dpq}, got t = {t}")
    for x in probes:
        cx = metric.validate_point(x)
        inner = metric._eval(cq, cx)
        if inner < t:
            outer = metric._eval(cp, cx)
            if not outer < r:
                return False, NestingWitness(x, float(inner), float(outer))
    return True, None


@dataclass(frozen=True, eq=False)
class BoundaryPolyline:
    """Ordered samples tracing {x : d(center, x) = radius} for a plane metric.

    Every sample's distance to the center is checked against the radius at
    construction (tolerance BOUNDARY_TOL).
    """

    metric_tag: str
    center: np.ndarray
    radius: float
    samples: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "center", as_point(self.center, dim=2))
        object.__setattr__(self, "radius", float(self.radius))
        samples = np.array(self.samples, dtype=float)
        if samples.ndim != 2 or samples.shape[1] != 2:
            raise ValueError("samples must be an (n, 2) array")
        dist_fn = _BOUNDARY_DISTANCES[self.metric_tag]
        for x in samples:
            d = dist_fn(self.center, x)
            if abs(d - self.radius) > BOUNDARY_TOL:
                raise ValueError(
                    f"boundary sample {x} is at distance {d}, expected {self.radius}"
                )
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)


_BOUNDARY_DISTANCES = {
    "euclidean": plane.euclidean_distance,
    "taxicab": plane.taxicab_distance,
    "chebyshev": plane.chebyshev_distance,
}


def _split_counts(n: int, parts: int) -> list[int]:
    base, extra = divmod(n, parts)
    return [base + (1 if k < extra else 0) for k in range(parts)]


def _complement_pair(r: float, v: float) -> tuple[float, float]:
    """Magnitudes (a, b) with a + b == r exactly in floating point, a at
    parameter 1-v of the edge. The smaller magnitude is always computed as
    r minus the larger, which subtracts exactly (Sterbenz), so taxicab edge
    samples sit on the boundary bit-for-bit when the center is the origin."""
    if v <= 0.5:
        a = r * (1.0 - v)
        return a, r - a
    b = r * v
    return r - b, b


def ball_boundary(metric: MetricSpec, center, radius: float, n: int = 256) -> BoundaryPolyline:
    """Trace the metric ball boundary around ``center`` with ``n`` samples.

    Supported metrics and their shapes: Euclidean (circle, parameterized by
    angle), Taxicab (diamond through center +- (r, 0) and (0, r)), Chebyshev
    (square with corners center + (+-r, +-r)). Samples run counterclockwise
    and include the polygon vertices exactly; n >= 8.
    """
    c = as_point(center, dim=2)
    radius = float(radius)
    if not radius > 0:
        raise ValueError(f"radius must be positive, got {radius}")
    n = int(n)
    if n < 8:
        raise ValueError(f"need at least 8 boundary samples, got {n}")

    if isinstance(metric, Euclidean):
        theta = 2.0 * math.pi * np.arange(n) / n
        offsets = radius * np.column_stack([np.cos(theta), np.sin(theta)])
        tag = "euclidean"
    elif isinstance(metric, Taxicab):
        # diamond edges CCW from (r, 0); per-edge quadrant signs
        signs = [(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)]
        swap = [False, True, False, True]
        offsets = np.empty((n, 2))
        row = 0
        for edge, m in enumerate(_split_counts(n, 4)):
            s1, s2 = signs[edge]
            for k in range(m):
                a, b = _complement_pair(radius, k / m)
                if swap[edge]:
                    a, b = b, a
                # + 0.0 normalizes -0.0 at the polygon vertices
                offsets[row] = (s1 * a + 0.0, s2 * b + 0.0)
                row += 1
        tag = "taxicab"
    elif isinstance(metric, Chebyshev):
        # square edges CCW from corner (r, -r)
        offsets = np.empty((n, 2))
        row = 0
        for edge, m in enumerate(_split_counts(n, 4)):
            for k in range(m):
                w = radius * (2.0 * (k / m) - 1.0)
                if edge == 0:
                    offsets[row] = (radius, w + 0.0)
                elif edge == 1:
                    offsets[row] = (-w + 0.0, radius)
                elif edge == 2:
                    offsets[row] = (-radius, -w + 0.0)
                else:
                    offsets[row] = (w + 0.0, -radius)
                row += 1
        tag = "chebyshev"
    else:
        raise ValueError(
            "ball boundaries are drawn for euclidean, taxicab, and chebyshev only"
        )

    return BoundaryPolyline(tag, c, radius, c + offsets)
