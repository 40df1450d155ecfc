"""Open balls, the nesting lemma, and the unit-ball gallery.

B(p, r) collects points strictly closer than r. On the line it is an open
interval; in the plane its boundary is a circle, a diamond, or a square,
depending on the metric. The demo writes the three figures as SVG files.
"""

from pathlib import Path

import numpy as np

import metrikos as mk
from metrikos.sampling import random_points
from metrikos.svg import ball_figure

# Open means open: the boundary never belongs to the ball.
b = mk.Ball(mk.RealLine(), 0.0, 1.0)
print("real-line ball B(0, 1) is the open interval (-1, 1):")
print("  0.999 inside:", mk.ball_contains(b, 0.999), " / 1.0 inside:", mk.ball_contains(b, 1.0))

# The nesting lemma: a ball around any interior point, with the leftover
# radius, stays inside. Follows from the triangle inequality alone, so it
# doubles as a regression check on every metric.
rng = np.random.default_rng(5)
probes = list(random_points(rng, 400, low=-2, high=2))
ok, _ = mk.check_nesting(mk.Taxicab(), (0, 0), 1.5, (0.5, 0.25), 0.75, probes)
print()
print("nesting: B((0.5,0.25), 0.75) fits inside B((0,0), 1.5) for taxicab:", ok)

out_dir = Path(__file__).resolve().parent / "out"
out_dir.mkdir(exist_ok=True)

print()
for spec, note in [
    (mk.Euclidean(), "the familiar circle"),
    (mk.Taxicab(), "a diamond: |x1| + |x2| = r"),
    (mk.Chebyshev(), "a square: max(|x1|, |x2|) = r"),
]:
    boundary = mk.ball_boundary(spec, (0, 0), 1.0, n=256)
    path = out_dir / f"ball_{spec.name}.svg"
    ball_figure(boundary).write(path)
    print(f"wrote {path.name:<22} {note}")

diamond = mk.ball_boundary(mk.Taxicab(), (0, 0), 1.0, n=8)
print()
print("diamond vertices and edge midpoints:")
print(diamond.samples)
