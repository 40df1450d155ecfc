"""The metric contract: variant dispatch and axiom certification.

A ``MetricSpec`` names which distance to evaluate and owns its carrier check;
``distance`` dispatches through it. ``verify_axioms`` certifies symmetry,
nonnegativity, identity of indiscernibles, and the triangle inequality on a
finite sample, exhaustively over all ordered triples, and reports explicit
witnesses for every violated axiom.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from . import sphere
from .errors import CarrierError
from .graphs import Polyline, WeightedGraph, shortest_path_distance
from .points import as_point, as_real, point_key, same_dim

# Certification keeps at most this many witnesses per axiom, in lexicographic
# index order, to bound report size on badly broken inputs.
MAX_WITNESSES_PER_AXIOM = 100


@dataclass(frozen=True)
class ToleranceConfig:
    """Absolute and relative slack used by certifiers.

    The triangle check allows abs_tol + rel_tol * (largest distance in the
    triple) of slack so that exact-real theorems survive floating-point
    rounding; the zero-distance test uses abs_tol alone.
    """

    abs_tol: float = 1e-9
    rel_tol: float = 1e-12

    def __post_init__(self):
        if self.abs_tol < 0 or self.rel_tol < 0:
            raise ValueError("tolerances must be nonnegative")


DEFAULT_TOL = ToleranceConfig()


@dataclass(frozen=True)
class DistanceMatrix:
    """Square matrix of candidate distances with optional row labels.

    Finiteness and squareness are enforced here; symmetry and the zero
    diagonal are deliberately *not* (the certifier checks them, so broken
    candidates can be ingested and diagnosed).
    """

    values: np.ndarray
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        v = np.array(self.values, dtype=float)
        if v.ndim != 2 or v.shape[0] != v.shape[1] or v.shape[0] == 0:
            raise ValueError(f"distance matrix must be square and nonempty, got shape {v.shape}")
        if not np.all(np.isfinite(v)):
            raise ValueError("distance matrix entries must be finite")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != v.shape[0]:
                raise ValueError("label count must match matrix size")
            object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return self.values.shape[0]


class MetricSpec:
    """Base for metric variants: a carrier check plus a distance formula.

    ``_eval`` computes on already-validated carrier points, so bulk callers
    (certifiers, probe loops) validate each point once, not per pair.
    """

    name = "abstract"

    def validate_point(self, x):
        """Coerce ``x`` to canonical carrier form or raise CarrierError."""
        raise NotImplementedError

    def _eval(self, x, y) -> float:
        """Distance between two already-validated carrier points."""
        raise NotImplementedError


@dataclass(frozen=True)
class Euclidean(MetricSpec):
    name = "euclidean"

    def validate_point(self, x):
        return as_point(x)

    def _eval(self, x, y):
        same_dim(x, y)
        return math.hypot(*(x - y))


@dataclass(frozen=True)
class Taxicab(MetricSpec):
    name = "taxicab"

    def validate_point(self, x):
        return as_point(x)

    def _eval(self, x, y):
        same_dim(x, y)
        return float(sum(abs(a - b) for a, b in zip(x, y)))


@dataclass(frozen=True)
class Chebyshev(MetricSpec):
    name = "chebyshev"

    def validate_point(self, x):
        return as_point(x)

    def _eval(self, x, y):
        same_dim(x, y)
        return float(max(abs(a - b) for a, b in zip(x, y)))


@dataclass(frozen=True)
class Discrete(MetricSpec):
    name = "discrete"

    def validate_point(self, x):
        return as_point(x)

    def _eval(self, x, y):
        same_dim(x, y)
        return 0.0 if all(a == b for a, b in zip(x, y)) else 1.0


@dataclass(frozen=True)
class RealLine(MetricSpec):
    name = "realline"

    def validate_point(self, x):
        return as_real(x)

    def _eval(self, x, y):
        return abs(x - y)


@dataclass(frozen=True)
class GreatCircle(MetricSpec):
    """Shorter great-circle arc length on the unit sphere."""

    name = "greatcircle"

    def validate_point(self, x):
        return sphere.sphere_point(x)

    def _eval(self, x, y):
        half = 0.5 * math.hypot(*(x - y))
        return 2.0 * math.asin(min(half, 1.0))


@dataclass(frozen=True, eq=False)
class GraphPath(MetricSpec):
    """Shortest-path metric over the vertices of a weighted graph."""

    graph: WeightedGraph
    name = "graphpath"

    def validate_point(self, x):
        try:
            return self.graph.check_vertex(x)
        except (ValueError, TypeError) as exc:
            raise CarrierError(str(exc)) from None

    def _eval(self, x, y):
        return shortest_path_distance(self.graph, x, y)


@dataclass(frozen=True, eq=False)
class PolylineArc(MetricSpec):
    """Arc-length metric over the vertices of a polyline."""

    polyline: Polyline
    name = "polylinearc"

    def validate_point(self, x):
        try:
            return self.polyline.check_index(x)
        except (ValueError, TypeError) as exc:
            raise CarrierError(str(exc)) from None

    def _eval(self, x, y):
        return self.polyline.arc_distance(x, y)


@dataclass(frozen=True, eq=False)
class Subspace(MetricSpec):
    """A base metric restricted to an explicit allowed point set."""

    base: MetricSpec
    allowed: frozenset
    name = "subspace"

    def validate_point(self, x):
        cx = self.base.validate_point(x)
        if point_key(cx) not in self.allowed:
            raise CarrierError("point is outside the restricted subspace")
        return cx

    def _eval(self, x, y):
        return self.base._eval(x, y)


@dataclass(frozen=True, eq=False)
class MatrixMetric(MetricSpec):
    """Candidate metric given extensionally by a distance matrix.

    Carrier points are row indices 0..n-1; nothing about the matrix is taken
    on trust beyond finiteness, so run ``verify_axioms`` to certify it.
    """

    matrix: DistanceMatrix
    name = "matrix"

    def validate_point(self, x):
        try:
            i = int(x)
        except (ValueError, TypeError) as exc:
            raise CarrierError(str(exc)) from None
        if (isinstance(x, float) and x != i) or not 0 <= i < self.matrix.n:
            raise CarrierError(f"index {x} outside 0..{self.matrix.n - 1}")
        return i

    def _eval(self, x, y):
        return float(self.matrix.values[x, y])


def restrict(spec: MetricSpec, allowed: Sequence) -> Subspace:
    """Restrict ``spec`` to a nonempty subset of its carrier.

    The restriction agrees with the base metric on the allowed set, and every
    metric axiom is inherited from the base space.
    """
    pts = list(allowed)
    if not pts:
        raise ValueError("allowed set must be nonempty")
    keys = frozenset(point_key(spec.validate_point(p)) for p in pts)
    return Subspace(base=spec, allowed=keys)


def distance(spec: MetricSpec, x, y) -> float:
    """Distance between two carrier points under the selected metric."""
    cx = spec.validate_point(x)
    cy = spec.validate_point(y)
    return float(spec._eval(cx, cy))


class Witness(NamedTuple):
    """One reproducible axiom violation over a certified sample."""

    axiom: str
    indices: tuple[int, ...]
    lhs: float
    rhs: float


@dataclass
class AxiomReport:
    """Per-axiom verdicts with explicit violating witnesses.

    Witness indices point into the certified sample; re-evaluating the
    distances they name reproduces the reported lhs/rhs values.
    """

    symmetry_ok: bool
    nonnegativity_ok: bool
    identity_ok: bool
    triangle_ok: bool
    witnesses: list[Witness] = field(default_factory=list)

    @property
    def all_ok(self) -> bool:
        return self.symmetry_ok and self.nonnegativity_ok and self.identity_ok and self.triangle_ok

    def for_axiom(self, axiom: str) -> list[Witness]:
        return [w for w in self.witnesses if w.axiom == axiom]


def _canonical_sample(spec: MetricSpec, sample: Sequence) -> list:
    if len(sample) == 0:
        raise ValueError("sample must be nonempty")
    return [spec.validate_point(x) for x in sample]


def _pairwise(spec: MetricSpec, pts: list) -> np.ndarray:
    n = len(pts)
    out = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            out[i, j] = spec._eval(pts[i], pts[j])
    return out


def pairwise_distances(spec: MetricSpec, sample: Sequence) -> np.ndarray:
    """Ordered distance matrix D[i, j] = d(sample[i], sample[j])."""
    return _pairwise(spec, _canonical_sample(spec, sample))


def matrix_from_points(spec: MetricSpec, sample: Sequence) -> DistanceMatrix:
    """Tabulate a metric over a sample as a DistanceMatrix."""
    return DistanceMatrix(pairwise_distances(spec, sample))


def verify_axioms(spec: MetricSpec, sample: Sequence, tol: ToleranceConfig = DEFAULT_TOL) -> AxiomReport:
    """Certify the metric axioms for ``spec`` over a finite sample.

    Checks, over every ordered pair and triple of sample indices:

    * symmetry: |d(p,q) - d(q,p)| within slack,
    * nonnegativity: d(p,q) >= 0,
    * identity: d(p,q) <= abs_tol exactly when p and q have equal
      coordinates (so distinct points closer than abs_tol are flagged),
    * triangle: d(x,z) <= d(x,y) + d(y,z) + slack, where slack is
      abs_tol + rel_tol * (largest of the three distances).

    The triple check is exhaustive (n^3), not sampled; witnesses are
    deterministic, in lexicographic index order, capped per axiom at
    MAX_WITNESSES_PER_AXIOM.
    """
    pts = _canonical_sample(spec, sample)
    D = _pairwise(spec, pts)
    n = D.shape[0]
    keys = [point_key(p) for p in pts]
    same = np.array([[keys[i] == keys[j] for j in range(n)] for i in range(n)])
    witnesses: list[Witness] = []

    def collect(axiom, index_pairs, lhs, rhs):
        for count, idx in enumerate(index_pairs):
            if count >= MAX_WITNESSES_PER_AXIOM:
                break
            ij = tuple(int(k) for k in idx)
            witnesses.append(Witness(axiom, ij, float(lhs[ij]), float(rhs[ij])))

    neg = D < 0
    nonnegativity_ok = not neg.any()
    if not nonnegativity_ok:
        collect("nonnegativity", np.argwhere(neg), D, np.zeros_like(D))

    slack_pair = tol.abs_tol + tol.rel_tol * np.maximum(np.abs(D), np.abs(D.T))
    asym = np.abs(D - D.T) > slack_pair
    np.fill_diagonal(asym, False)
    asym &= np.triu(np.ones((n, n), dtype=bool), k=1)
    symmetry_ok = not asym.any()
    if not symmetry_ok:
        collect("symmetry", np.argwhere(asym), D, D.T)

    ident = np.where(same, D > tol.abs_tol, D <= tol.abs_tol)
    identity_ok = not ident.any()
    if not identity_ok:
        collect("identity", np.argwhere(ident), D, np.zeros_like(D))

    lhs = D[:, None, :]  # d(x, z)
    rhs = D[:, :, None] + D[None, :, :]  # d(x, y) + d(y, z)
    slack = tol.abs_tol + tol.rel_tol * np.maximum(np.abs(lhs), np.maximum(np.abs(D)[:, :, None], np.abs(D)[None, :, :]))
    tri = lhs > rhs + slack
    triangle_ok = not tri.any()
    if not triangle_ok:
        bad = np.argwhere(tri)  # rows (x, y, z)
        for count, (x, y, z) in enumerate(bad):
            if count >= MAX_WITNESSES_PER_AXIOM:
                break
            witnesses.append(
                Witness("triangle", (int(x), int(y), int(z)), float(D[x, z]), float(D[x, y] + D[y, z]))
            )

    return AxiomReport(
        symmetry_ok=symmetry_ok,
        nonnegativity_ok=nonnegativity_ok,
        identity_ok=identity_ok,
        triangle_ok=triangle_ok,
        witnesses=witnesses,
    )
