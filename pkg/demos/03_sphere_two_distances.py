"""Two distances on the unit sphere: through the ball, or along the surface.

The chord tunnels through ambient space; the great-circle arc stays on the
sphere. They are linked by chord = 2*sin(arc/2), agree to first order for
nearby points, and differ most at antipodes (2 vs pi).
"""

import numpy as np

import metrikos as mk
from metrikos.sampling import random_sphere_points

north, south = (0, 0, 1), (0, 0, -1)
print("antipodal points: chord", mk.chord_distance(north, south),
      " arc", mk.great_circle_distance(north, south))

p, q = (1, 0, 0), (0, 1, 0)
print("quarter turn:     chord", f"{mk.chord_distance(p, q):.6f}",
      " arc", f"{mk.great_circle_distance(p, q):.6f}")

rng = np.random.default_rng(1)
P = random_sphere_points(rng, 10_000)
Q = random_sphere_points(rng, 10_000)
chord = mk.chord_distances(P, Q)
arc = mk.great_circle_distances(P, Q)
print()
print("10k random pairs: chord <= arc everywhere:", bool(np.all(chord <= arc)))
print("conversion residual |2 sin(arc/2) - chord| worst case:",
      f"{np.max(np.abs(2 * np.sin(arc / 2) - chord)):.2e}")

# Locally the two are interchangeable: arc <= (1+eps) * chord once the chord
# is below a threshold delta(eps).
print()
print("  eps      delta(eps)")
for eps in (0.1, 0.01, 0.001, 0.0001):
    print(f"  {eps:<8g} {mk.comparability_delta(eps):.6f}")
print("(the sphere looks flat up close: tolerate 0.01% error and chords")
print(" out to ~0.049 still measure arcs)")

# The triangle inequality for arcs reduces to a single great circle: among
# all points at q's distance from r, the one farthest from p is coplanar
# with p, q, and the center.
p, q, r = random_sphere_points(rng, 3)
r0 = mk.farthest_equidistant_point(p, q, r)
print()
print("triangle-inequality reduction for a random triple:")
print("  arc(p,r)    =", f"{mk.great_circle_distance(p, r):.6f}")
print("  arc(p,r0)   =", f"{mk.great_circle_distance(p, r0):.6f}   (worst case over the circle)")
print("  arc(p,q) + arc(q,r) =",
      f"{mk.great_circle_distance(p, q) + mk.great_circle_distance(q, r):.6f}")
print("  r0 coplanar with p, q, center:",
      f"|triple product| = {abs(np.dot(np.cross(p, q), r0)):.2e}")

# Radial projection onto a circle never stretches exterior points; that is
# the engine behind "shorter arcs on bigger circles".
c = mk.Circle2D((0, 0), 1.0)
a, b = (2.0, 0.5), (1.5, -2.0)
pa, pb = mk.circular_projection(c, a), mk.circular_projection(c, b)
print()
print("circular projection is 1-Lipschitz outside the circle:")
print(f"  |a-b| = {mk.euclidean_distance(a, b):.6f} -> |proj a - proj b| = "
      f"{mk.euclidean_distance(pa, pb):.6f}")
