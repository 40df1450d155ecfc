"""Three ways to measure distance in the plane.

The same pair of points can be 1.41, 2, or 1 units apart depending on
whether you fly straight, drive a street grid, or move like a chess king.
"""

import numpy as np

import metrikos as mk

pairs = [((0, 0), (1, 1)), ((0, 0), (1, 0)), ((0, 0), (3, 4))]

print("point pair            euclidean   taxicab   chebyshev")
for p, q in pairs:
    e = mk.euclidean_distance(p, q)
    t = mk.taxicab_distance(p, q)
    c = mk.chebyshev_distance(p, q)
    print(f"{str(p):>8} -> {str(q):<8}  {e:9.6f} {t:9.6f} {c:11.6f}")

print()
print("The unit step (0,0)->(1,0) costs 1 in all three metrics;")
print("the diagonal separates them: sqrt(2) vs 2 vs 1.")

# The Euclidean formula is the Pythagorean theorem in disguise: split the
# segment from p to q at the axis-aligned corner (q1, p2).
p, q = (1.0, 2.0), (4.0, 6.0)
corner = (q[0], p[1])
hyp = mk.euclidean_distance(p, q)
legs = mk.euclidean_distance(p, corner), mk.euclidean_distance(corner, q)
print()
print(f"right triangle at {corner}: legs {legs[0]:g} and {legs[1]:g}, hypotenuse {hyp:g}")
print(f"hypotenuse^2 = {hyp**2:.12f} = {legs[0]**2:g} + {legs[1]**2:g}")

# However points are scattered, the three metrics always line up the same way.
rng = np.random.default_rng(0)
P = rng.uniform(-10, 10, size=(5000, 2))
Q = rng.uniform(-10, 10, size=(5000, 2))
che = mk.chebyshev_distances(P, Q)
euc = mk.euclidean_distances(P, Q)
tax = mk.taxicab_distances(P, Q)
print()
print("on 5000 random pairs: chebyshev <= euclidean <= taxicab <= 2*chebyshev:",
      bool(np.all(che <= euc) and np.all(euc <= tax) and np.all(tax <= 2 * che)))

# The real line is the one-dimensional special case.
print()
print("on the line, distance is plain absolute difference:",
      mk.real_line_distance(5, 2), mk.real_line_distance(-1, 1))
