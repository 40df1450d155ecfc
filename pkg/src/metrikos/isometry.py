"""Symmetry maps of the line, plane, and sphere, with a sample-based
isometry certifier.

Plane maps are affine (2x2 linear part plus offset); sphere maps are 3x3
orthogonal matrices. ``is_isometry`` tests whether a map preserves a chosen
metric on a finite sample and, when it does not, hands back the violating
pair with both distances. Certification is evidence over a sample, never a
symbolic proof.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .core import DEFAULT_TOL, MetricSpec, ToleranceConfig
from .points import as_point

ORTHOGONALITY_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class PlaneMap:
    """Affine map of the plane: x -> linear @ x + offset."""

    linear: np.ndarray
    offset: np.ndarray

    def __post_init__(self):
        lin = np.array(self.linear, dtype=float)
        off = np.array(self.offset, dtype=float)
        if lin.shape != (2, 2) or off.shape != (2,):
            raise ValueError("plane map needs a 2x2 linear part and a 2-vector offset")
        if not (np.all(np.isfinite(lin)) and np.all(np.isfinite(off))):
            raise ValueError("map entries must be finite")
        lin.setflags(write=False)
        off.setflags(write=False)
        object.__setattr__(self, "linear", lin)
        object.__setattr__(self, "offset", off)


@dataclass(frozen=True, eq=False)
class SphereMap:
    """Linear map of 3-space required to be orthogonal (within 1e-9
    entrywise on linear.T @ linear - I), so it carries the unit sphere to
    itself: rotations and reflections about the center."""

    linear: np.ndarray

    def __post_init__(self):
        lin = np.array(self.linear, dtype=float)
        if lin.shape != (3, 3):
            raise ValueError("sphere map needs a 3x3 matrix")
        if not np.all(np.isfinite(lin)):
            raise ValueError("map entries must be finite")
        err = np.abs(lin.T @ lin - np.eye(3)).max()
        if err > ORTHOGONALITY_TOL:
            raise ValueError(f"matrix is not orthogonal: max |A^T A - I| entry = {err:g}")
        lin.setflags(write=False)
        object.__setattr__(self, "linear", lin)


def identity_map() -> PlaneMap:
    return PlaneMap(np.eye(2), np.zeros(2))


def translation(a1: float, a2: float) -> PlaneMap:
    """(x1, x2) -> (x1 + a1, x2 + a2)."""
    return PlaneMap(np.eye(2), (a1, a2))


def reflect_origin() -> PlaneMap:
    """(x1, x2) -> (-x1, -x2)."""
    return PlaneMap(-np.eye(2), np.zeros(2))


def reflect_x1() -> PlaneMap:
    """(x1, x2) -> (-x1, x2)."""
    return PlaneMap([[-1.0, 0.0], [0.0, 1.0]], np.zeros(2))


def reflect_x2() -> PlaneMap:
    """(x1, x2) -> (x1, -x2)."""
    return PlaneMap([[1.0, 0.0], [0.0, -1.0]], np.zeros(2))


def swap_axes() -> PlaneMap:
    """(x1, x2) -> (x2, x1), the reflection about the diagonal line."""
    return PlaneMap([[0.0, 1.0], [1.0, 0.0]], np.zeros(2))


def rotation(theta: float) -> PlaneMap:
    """Rotation about the origin by ``theta`` radians."""
    c, s = math.cos(theta), math.sin(theta)
    return PlaneMap([[c, -s], [s, c]], np.zeros(2))


def reflect_about_point(a1: float, a2: float) -> PlaneMap:
    """x -> 2a - x, the point reflection through (a1, a2)."""
    return PlaneMap(-np.eye(2), (2.0 * a1, 2.0 * a2))


_NAMED_FACTORIES = {
    "identity": identity_map,
    "translation": translation,
    "reflect_origin": reflect_origin,
    "reflect_x1": reflect_x1,
    "reflect_x2": reflect_x2,
    "swap_axes": swap_axes,
    "rotation": rotation,
    "reflect_about_point": reflect_about_point,
}


def named_map(tag: str, *params: float) -> PlaneMap:
    """Build one of the named plane maps from its tag and parameters."""
    try:
        factory = _NAMED_FACTORIES[tag]
    except KeyError:
        raise ValueError(f"unknown map tag {tag!r}; expected one of {sorted(_NAMED_FACTORIES)}") from None
    return factory(*params)


def rotation_about_axis(axis, theta: float) -> SphereMap:
    """Rotation of 3-space by ``theta`` radians about the given axis."""
    v = as_point(axis, dim=3)
    n = math.hypot(*v)
    if n == 0.0:
        raise ValueError("rotation axis must be nonzero")
    x, y, z = v / n
    c, s = math.cos(theta), math.sin(theta)
    k = np.array([[0.0, -z, y], [z, 0.0, -x], [-y, x, 0.0]])
    outer = np.outer((x, y, z), (x, y, z))
    return SphereMap(c * np.eye(3) + s * k + (1.0 - c) * outer)


def rotation_sending(p, q) -> SphereMap:
    """An orthogonal map of the sphere taking ``p`` to ``q``.

    Rotates in the plane spanned by p and q; identity when they coincide,
    and a half-turn about any perpendicular axis when they are antipodal.
    """
    from .sphere import sphere_point

    pa, qa = sphere_point(p), sphere_point(q)
    cross = np.cross(pa, qa)
    sin_t = math.hypot(*cross)
    cos_t = float(np.dot(pa, qa))
    if sin_t <= 1e-15:
        if cos_t > 0:
            return SphereMap(np.eye(3))
        # antipodal: half-turn about any axis perpendicular to p
        helper = np.array([1.0, 0.0, 0.0]) if abs(pa[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
        axis = np.cross(pa, helper)
        return rotation_about_axis(axis, math.pi)
    return rotation_about_axis(cross, math.atan2(sin_t, cos_t))


def apply_map(m: PlaneMap | SphereMap, p) -> np.ndarray:
    """Image of a point under a plane or sphere map."""
    if isinstance(m, PlaneMap):
        pa = as_point(p, dim=2)
        return m.linear @ pa + m.offset
    if isinstance(m, SphereMap):
        pa = as_point(p, dim=3)
        return m.linear @ pa
    raise TypeError(f"expected PlaneMap or SphereMap, got {type(m).__name__}")


def compose(f: PlaneMap | SphereMap, g: PlaneMap | SphereMap):
    """The map x -> f(g(x)), folded into a single map of the same kind."""
    if isinstance(f, PlaneMap) and isinstance(g, PlaneMap):
        return PlaneMap(f.linear @ g.linear, f.linear @ g.offset + f.offset)
    if isinstance(f, SphereMap) and isinstance(g, SphereMap):
        return SphereMap(f.linear @ g.linear)
    raise TypeError("can only compose two maps of the same kind")


class IsometryWitness(NamedTuple):
    """A sample pair whose distance the map failed to preserve."""

    x: object
    y: object
    before: float
    after: float


def is_isometry(
    m: PlaneMap | SphereMap,
    spec: MetricSpec,
    sample: Sequence,
    tol: ToleranceConfig = DEFAULT_TOL,
) -> tuple[bool, IsometryWitness | None]:
    """Test whether ``m`` preserves ``spec`` distances on the sample.

    True iff |d(f(x), f(y)) - d(x, y)| <= abs_tol + rel_tol * d(x, y) for
    every sample pair; otherwise returns the first violating pair (in
    lexicographic index order) with both distances. Images must stay in the
    metric's carrier, or a CarrierError propagates.
    """
    pts = [spec.validate_point(x) for x in sample]
    images = [spec.validate_point(apply_map(m, p)) for p in pts]
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            before = spec._eval(pts[i], pts[j])
            after = spec._eval(images[i], images[j])
            if abs(after - before) > tol.abs_tol + tol.rel_tol * abs(before):
                return False, IsometryWitness(sample[i], sample[j], float(before), float(after))
    return True, None
