"""Shared helpers for the test suite."""

import numpy as np

import metrikos as mk
from metrikos import sampling


def builtin_cases(rng: np.random.Generator, n: int = 16) -> list[tuple[mk.MetricSpec, list]]:
    """One (spec, in-carrier sample) pair per built-in metric variant."""
    pts2 = list(sampling.random_points(rng, n, dim=2))
    graph = sampling.random_connected_graph(rng, max(n, 8), extra_edges=n)
    poly = sampling.random_polyline(rng, max(n, 8))
    return [
        (mk.Euclidean(), pts2),
        (mk.Taxicab(), list(sampling.random_points(rng, n, dim=3))),
        (mk.Chebyshev(), pts2),
        (mk.Discrete(), pts2),
        (mk.RealLine(), [float(x) for x in rng.uniform(-5.0, 5.0, size=n)]),
        (mk.GreatCircle(), list(sampling.random_sphere_points(rng, n))),
        (mk.GraphPath(graph), list(range(min(n, graph.vertex_count)))),
        (mk.PolylineArc(poly), list(range(min(n, len(poly))))),
        (mk.restrict(mk.Euclidean(), pts2), pts2),
        (mk.MatrixMetric(mk.matrix_from_points(mk.Euclidean(), pts2)), list(range(n))),
    ]


def case_id(case) -> str:
    return case[0].name
