"""Path metrics: distance as the cheapest route, not the straightest line.

On a street grid the shortest drive equals the taxicab formula, minimal
routes come in binomial multitudes, and the triangle inequality is free:
concatenating routes can never beat the optimum.
"""

import numpy as np

import metrikos as mk
from metrikos.sampling import random_connected_graph, random_polyline

g = mk.grid_graph(10, 10)
spec = mk.GraphPath(g)

print("10x10 street grid, starting from the corner (0,0):")
print("  target   drive   taxicab   minimal routes")
for i, j in [(1, 1), (2, 2), (3, 1), (5, 5)]:
    v = mk.grid_vertex(10, i, j)
    drive = mk.shortest_path_distance(g, 0, v)
    taxi = mk.taxicab_distance((0, 0), (i, j))
    routes = mk.count_geodesics(g, 0, v)
    print(f"  ({i},{j})    {drive:5g}   {taxi:7g}   {routes:8d} = C({i + j},{i})")

print()
print("route counts along the diagonal reproduce the central binomials:")
print(" ", [mk.count_geodesics(g, 0, mk.grid_vertex(10, k, k)) for k in range(6)])

# Any positive-length network is a metric space; certify one.
rng = np.random.default_rng(4)
net = random_connected_graph(rng, 20, extra_edges=25)
report = mk.verify_axioms(mk.GraphPath(net), list(range(20)))
print()
print("random 20-vertex network certifies as a metric space:", report.all_ok)

# A polyline carries two distances: the chord through the plane and the arc
# along the curve. The arc is never shorter, yet in its own metric the
# curve is indistinguishable from a straight segment.
bend = mk.Polyline([(0, 0), (1, 0), (1, 1)])
print()
print("right-angle polyline (0,0)-(1,0)-(1,1):")
print("  chord between the ends:", f"{mk.euclidean_distance((0, 0), (1, 1)):.6f}")
print("  arc along the curve:   ", bend.arc_distance(0, 2))

curve = random_polyline(rng, 8)
flat = all(
    curve.arc_distance(i, j) == mk.real_line_distance(curve.cumulative[i], curve.cumulative[j])
    for i in range(8)
    for j in range(8)
)
print()
print("random polyline: arc distances equal line distances of the")
print("cumulative arc-length parameters exactly:", flat)
print("(curved from outside, flat from inside)")
