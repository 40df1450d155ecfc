"""Certifying that a candidate distance really is a metric.

A distance matrix can look plausible and still break the triangle
inequality. The certifier checks every axiom over every ordered triple and
hands back concrete witnesses when something fails.
"""

import numpy as np

import metrikos as mk

rng = np.random.default_rng(7)

# A healthy example: the discrete metric on any point set.
sample = list(rng.uniform(-1, 1, size=(6, 2)))
report = mk.verify_axioms(mk.Discrete(), sample)
print("discrete metric on 6 random points:", "all axioms hold" if report.all_ok else "broken")

# A planted failure: "distance" = squared separation |i - j|^2.
values = np.array([[abs(i - j) ** 2 for j in range(3)] for i in range(3)], dtype=float)
candidate = mk.MatrixMetric(mk.DistanceMatrix(values))
report = mk.verify_axioms(candidate, [0, 1, 2])
print()
print("squared separation on {0, 1, 2}:")
print("  symmetry", report.symmetry_ok, "/ nonnegativity", report.nonnegativity_ok,
      "/ identity", report.identity_ok, "/ triangle", report.triangle_ok)
for w in report.for_axiom("triangle"):
    x, y, z = w.indices
    print(f"  witness: d({x},{z}) = {w.lhs:g} exceeds d({x},{y}) + d({y},{z}) = {w.rhs:g}")
print("  (squaring destroys the triangle inequality: long trips look too cheap to split)")

# Tabulating a genuine metric and re-certifying round-trips cleanly.
table = mk.matrix_from_points(mk.Euclidean(), sample)
report = mk.verify_axioms(mk.MatrixMetric(table), list(range(len(sample))))
print()
print("tabulated euclidean distances re-certify:", report.all_ok)

# Restriction: a metric stays a metric on any subset, no work needed.
corners = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0)]
sub = mk.restrict(mk.Euclidean(), corners)
print("restricted to three corners, d((0,0),(1,0)) =", mk.distance(sub, (0, 0), (1, 0)))
print("axioms inherited:", mk.verify_axioms(sub, corners).all_ok)
