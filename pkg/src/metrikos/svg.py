"""Minimal deterministic SVG 1.1 emission for ball-boundary figures.

Figures are data-space geometry mapped through a fixed viewport: content is
centered with a 10% margin, aspect preserved, and the y-axis flipped so that
mathematical "up" points up on screen. Output is plain XML text built from
formatted floats, so identical inputs give byte-identical files.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .balls import BoundaryPolyline
from .points import as_point

MARGIN_FRACTION = 0.1


def _fmt(x: float) -> str:
    return f"{x:.2f}"


@dataclass(frozen=True)
class Viewport:
    """Affine data-to-pixel map with uniform scale and flipped y-axis."""

    scale: float
    x_shift: float
    y_shift: float
    height: float

    @classmethod
    def fit(cls, xmin, xmax, ymin, ymax, width: float, height: float) -> "Viewport":
        span_x = max(xmax - xmin, 1e-30)
        span_y = max(ymax - ymin, 1e-30)
        usable_w = width * (1.0 - 2.0 * MARGIN_FRACTION)
        usable_h = height * (1.0 - 2.0 * MARGIN_FRACTION)
        scale = min(usable_w / span_x, usable_h / span_y)
        # center the content in the viewport
        x_shift = 0.5 * width - scale * 0.5 * (xmin + xmax)
        y_shift = 0.5 * height + scale * 0.5 * (ymin + ymax)
        return cls(scale=scale, x_shift=x_shift, y_shift=y_shift, height=height)

    def map(self, p) -> tuple[float, float]:
        pa = as_point(p, dim=2)
        return (self.scale * pa[0] + self.x_shift, -self.scale * pa[1] + self.y_shift)


@dataclass
class SvgScene:
    """An SVG document assembled from polylines, markers, and labels."""

    width: int = 512
    height: int = 512
    elements: list[str] = field(default_factory=list)

    def add_polygon(self, pixel_points, stroke: str = "#1f4e8c", stroke_width: float = 1.5):
        pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pixel_points)
        self.elements.append(
            f'<polygon points="{pts}" fill="none" stroke="{stroke}" stroke-width="{stroke_width}"/>'
        )

    def add_cross(self, x: float, y: float, size: float = 5.0, stroke: str = "#b03030"):
        s = size
        self.elements.append(
            f'<path d="M {_fmt(x - s)} {_fmt(y)} L {_fmt(x + s)} {_fmt(y)} '
            f'M {_fmt(x)} {_fmt(y - s)} L {_fmt(x)} {_fmt(y + s)}" '
            f'stroke="{stroke}" stroke-width="1.5" fill="none"/>'
        )

    def add_text(self, x: float, y: float, text: str, size: int = 14):
        self.elements.append(
            f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-family="monospace" '
            f'font-size="{size}">{text}</text>'
        )

    def to_xml(self) -> str:
        body = "\n".join(f"  {el}" for el in self.elements)
        return (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{self.width}" height="{self.height}" '
            f'viewBox="0 0 {self.width} {self.height}">\n'
            f"{body}\n"
            "</svg>\n"
        )

    def write(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(self.to_xml())


def ball_figure(boundary: BoundaryPolyline, width: int = 512, height: int = 512) -> SvgScene:
    """Render a ball boundary as a closed curve with center marker and
    radius label."""
    samples = boundary.samples
    xs = np.append(samples[:, 0], boundary.center[0])
    ys = np.append(samples[:, 1], boundary.center[1])
    vp = Viewport.fit(xs.min(), xs.max(), ys.min(), ys.max(), width, height)
    scene = SvgScene(width=width, height=height)
    scene.add_polygon([vp.map(p) for p in samples])
    cx, cy = vp.map(boundary.center)
    scene.add_cross(cx, cy)
    scene.add_text(10.0, float(height) - 10.0, f"{boundary.metric_tag} ball, r = {boundary.radius:.12g}")
    return scene
