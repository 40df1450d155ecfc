"""metrikos: a metric-space toolkit.

Distance functions (coordinate, spherical, graph, and arc-length metrics),
finite-sample certification of the metric axioms with witness reporting,
isometry testing, open-ball machinery, and SVG unit-ball figures.
"""

from .balls import Ball, BoundaryPolyline, ball_boundary, ball_contains, check_nesting
from .core import (
    AxiomReport,
    Chebyshev,
    Discrete,
    DistanceMatrix,
    Euclidean,
    GraphPath,
    GreatCircle,
    MatrixMetric,
    MetricSpec,
    PolylineArc,
    RealLine,
    Subspace,
    Taxicab,
    ToleranceConfig,
    Witness,
    distance,
    matrix_from_points,
    pairwise_distances,
    restrict,
    verify_axioms,
)
from .errors import CarrierError, DegenerateGeometryError, UnreachableError
from .graphs import (
    Polyline,
    WeightedGraph,
    count_geodesics,
    grid_graph,
    grid_vertex,
    polyline_arc_distance,
    polyline_is_simple,
    shortest_path_distance,
)
from .isometry import (
    IsometryWitness,
    PlaneMap,
    SphereMap,
    apply_map,
    compose,
    identity_map,
    is_isometry,
    named_map,
    reflect_about_point,
    reflect_origin,
    reflect_x1,
    reflect_x2,
    rotation,
    rotation_about_axis,
    rotation_sending,
    swap_axes,
    translation,
)
from .plane import (
    chebyshev_distance,
    chebyshev_distances,
    discrete_distance,
    euclidean_distance,
    euclidean_distances,
    real_line_distance,
    taxicab_distance,
    taxicab_distances,
)
from .sphere import (
    Circle2D,
    Circle3D,
    arc_to_chord,
    chord_distance,
    chord_distances,
    circle_extremal_points,
    circular_projection,
    circular_projections,
    comparability_delta,
    equidistant_circle,
    farthest_equidistant_point,
    great_circle_distance,
    great_circle_distances,
    sinc,
    sphere_point,
    sphere_points,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "Ball",
    "BoundaryPolyline",
    "CarrierError",
    "Chebyshev",
    "Circle2D",
    "Circle3D",
    "DegenerateGeometryError",
    "Discrete",
    "DistanceMatrix",
    "Euclidean",
    "GraphPath",
    "GreatCircle",
    "IsometryWitness",
    "MatrixMetric",
    "MetricSpec",
    "PlaneMap",
    "Polyline",
    "PolylineArc",
    "RealLine",
    "SphereMap",
    "Subspace",
    "Taxicab",
    "ToleranceConfig",
    "UnreachableError",
    "WeightedGraph",
    "Witness",
    "apply_map",
    "arc_to_chord",
    "ball_boundary",
    "ball_contains",
    "chebyshev_distance",
    "chebyshev_distances",
    "check_nesting",
    "chord_distance",
    "chord_distances",
    "circle_extremal_points",
    "circular_projection",
    "circular_projections",
    "comparability_delta",
    "compose",
    "count_geodesics",
    "discrete_distance",
    "distance",
    "equidistant_circle",
    "euclidean_distance",
    "euclidean_distances",
    "farthest_equidistant_point",
    "great_circle_distance",
    "great_circle_distances",
    "grid_graph",
    "grid_vertex",
    "identity_map",
    "is_isometry",
    "matrix_from_points",
    "named_map",
    "pairwise_distances",
    "polyline_arc_distance",
    "polyline_is_simple",
    "real_line_distance",
    "reflect_about_point",
    "reflect_origin",
    "reflect_x1",
    "reflect_x2",
    "restrict",
    "rotation",
    "rotation_about_axis",
    "rotation_sending",
    "shortest_path_distance",
    "sinc",
    "sphere_point",
    "sphere_points",
    "swap_axes",
    "taxicab_distance",
    "taxicab_distances",
    "translation",
    "verify_axioms",
]
