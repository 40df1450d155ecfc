"""Path metrics: shortest-path distance on weighted graphs, unit grids,
geodesic counting, and arc length along polylines.

Distances defined by minimizing path lengths satisfy the triangle inequality
by route concatenation, so these carriers are metric spaces whenever every
vertex pair is connected.
"""

from __future__ import annotations

import heapq
import math
from typing import Sequence

import numpy as np

from .errors import UnreachableError
from .plane import euclidean_distance
from .points import as_point


class WeightedGraph:
    """Undirected graph with strictly positive edge lengths.

    Edges are (u, v, length) triples over vertex ids 0..vertex_count-1; loops,
    nonpositive lengths, and duplicate undirected edges are rejected.
    ``coords`` optionally embeds each vertex in the plane (used by grids).
    Shortest-path results are memoized per source; the graph must not be
    mutated after construction.
    """

    def __init__(self, vertex_count: int, edges: Sequence[tuple], coords=None):
        vertex_count = int(vertex_count)
        if vertex_count <= 0:
            raise ValueError(f"vertex_count must be positive, got {vertex_count}")
        self.vertex_count = vertex_count
        seen = set()
        cleaned = []
        for e in edges:
            u, v, length = e
            u, v = int(u), int(v)
            length = float(length)
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge {e} references a vertex outside 0..{vertex_count - 1}")
            if u == v:
                raise ValueError(f"loop edge at vertex {u} is not allowed")
            if not (length > 0 and math.isfinite(length)):
                raise ValueError(f"edge {e} must have a finite positive length")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate undirected edge {key}")
            seen.add(key)
            cleaned.append((u, v, length))
        self.edges = tuple(cleaned)
        adj: list[list[tuple[int, float]]] = [[] for _ in range(vertex_count)]
        for u, v, length in self.edges:
            adj[u].append((v, length))
            adj[v].append((u, length))
        self._adj = tuple(tuple(nbrs) for nbrs in adj)
        if coords is not None:
            coords = [as_point(c) for c in coords]
            if len(coords) != vertex_count:
                raise ValueError("coords must list one point per vertex")
        self.coords = coords
        self._sssp_cache: dict[int, np.ndarray] = {}

    def check_vertex(self, u) -> int:
        v = int(u)
        if isinstance(u, float) and u != v:
            raise ValueError(f"vertex id must be an integer, got {u}")
        if not 0 <= v < self.vertex_count:
            raise ValueError(f"vertex id {u} outside 0..{self.vertex_count - 1}")
        return v

    def single_source(self, source: int) -> np.ndarray:
        """Distances from ``source`` to every vertex (inf where unreachable).

        Label-setting Dijkstra with a binary heap; exact for the nonnegative
        weights enforced at construction.
        """
        source = self.check_vertex(source)
        cached = self._sssp_cache.get(source)
        if cached is not None:
            return cached
        dist = np.full(self.vertex_count, np.inf)
        dist[source] = 0.0
        done = np.zeros(self.vertex_count, dtype=bool)
        heap = [(0.0, source)]
        while heap:
            d, u = heapq.heappop(heap)
            if done[u]:
                continue
            done[u] = True
            for v, w in self._adj[u]:
                nd = d + w
                if nd < dist[v]:
                    dist[v] = nd
                    heapq.heappush(heap, (nd, v))
        dist.setflags(write=False)
        self._sssp_cache[source] = dist
        return dist


def shortest_path_distance(g: WeightedGraph, u, v) -> float:
    """Length of a minimum-length path between two vertices.

    Runs from the smaller vertex id, so the result is bitwise symmetric in
    (u, v). A disconnected pair raises UnreachableError: the vertex set is
    not a metric space when distances fail to be finite.
    """
    u, v = g.check_vertex(u), g.check_vertex(v)
    source, target = (u, v) if u <= v else (v, u)
    d = float(g.single_source(source)[target])
    if math.isinf(d):
        raise UnreachableError(
            f"no path joins vertices {u} and {v}: the distance is infinite, so a "
            "disconnected graph is not a metric space over all vertices"
        )
    return d


def grid_graph(width: int, height: int) -> WeightedGraph:
    """Unit-spacing street grid: lattice points (i, j) with 0 <= i < width,
    0 <= j < height, joined to horizontal and vertical neighbors by edges of
    length 1. Vertex (i, j) has id ``j * width + i`` and coords (i, j).
    """
    width, height = int(width), int(height)
    if width < 1 or height < 1:
        raise ValueError("grid dimensions must be at least 1")

    def vid(i, j):
        return j * width + i

    edges = []
    for j in range(height):
        for i in range(width):
            if i + 1 < width:
                edges.append((vid(i, j), vid(i + 1, j), 1))
            if j + 1 < height:
                edges.append((vid(i, j), vid(i, j + 1), 1))
    coords = [(float(i), float(j)) for j in range(height) for i in range(width)]
    return WeightedGraph(width * height, edges, coords=coords)


def grid_vertex(width: int, i: int, j: int) -> int:
    """Vertex id of lattice point (i, j) in a grid of the given width."""
    return int(j) * int(width) + int(i)


def count_geodesics(g: WeightedGraph, u, v) -> int:
    """Number of distinct minimum-length paths between two vertices.

    Requires every edge length to be a positive integer so that ties between
    path lengths are detected exactly; real-valued lengths are refused
    rather than compared against a tolerance. Counts by dynamic programming
    over the DAG of shortest-path edges.
    """
    u, v = g.check_vertex(u), g.check_vertex(v)
    weights = {}
    for a, b, length in g.edges:
        w = int(length)
        if w != length:
            raise ValueError(
                f"geodesic counting requires integer edge lengths, got {length}"
            )
        weights[(a, b)] = weights[(b, a)] = w
    # integer-exact Dijkstra from u
    dist: dict[int, int] = {u: 0}
    done = set()
    heap = [(0, u)]
    while heap:
        d, a = heapq.heappop(heap)
        if a in done:
            continue
        done.add(a)
        for b, _ in g._adj[a]:
            nd = d + weights[(a, b)]
            if b not in dist or nd < dist[b]:
                dist[b] = nd
                heapq.heappush(heap, (nd, b))
    if v not in done:
        raise UnreachableError(f"vertices {u} and {v} are in different components")
    counts: dict[int, int] = {u: 1}
    for a in sorted(done, key=lambda x: dist[x]):
        if a == u:
            continue
        counts[a] = sum(
            counts.get(b, 0)
            for b, _ in g._adj[a]
            if b in dist and dist[b] + weights[(b, a)] == dist[a]
        )
    return counts[v]


class Polyline:
    """An ordered chain of at least two plane points with distinct neighbors.

    ``arc_distance`` measures length along the chain. Internally each vertex
    gets a cumulative arc-length parameter; distances are absolute parameter
    differences, which makes the chain isometric to a segment of the real
    line (flat in its own metric, however curved it looks from outside).
    """

    def __init__(self, vertices: Sequence):
        pts = [as_point(p, dim=2) for p in vertices]
        if len(pts) < 2:
            raise ValueError("a polyline needs at least two vertices")
        for a, b in zip(pts, pts[1:]):
            if a[0] == b[0] and a[1] == b[1]:
                raise ValueError("consecutive polyline vertices must be distinct")
        self.vertices = pts
        cum = [0.0]
        for a, b in zip(pts, pts[1:]):
            cum.append(cum[-1] + euclidean_distance(a, b))
        self.cumulative = tuple(cum)

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def total_length(self) -> float:
        return self.cumulative[-1]

    def check_index(self, i) -> int:
        idx = int(i)
        if not 0 <= idx < len(self.vertices):
            raise ValueError(f"vertex index {i} outside 0..{len(self.vertices) - 1}")
        return idx

    def arc_distance(self, i, j) -> float:
        """Length along the chain between vertices i and j."""
        i, j = self.check_index(i), self.check_index(j)
        return abs(self.cumulative[j] - self.cumulative[i])


def polyline_arc_distance(c: Polyline, i, j) -> float:
    """Arc length along ``c`` between vertex positions i and j."""
    return c.arc_distance(i, j)


def _orient(a, b, c) -> float:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _on_segment(a, b, p) -> bool:
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def _segments_intersect(p1, p2, p3, p4) -> bool:
    d1 = _orient(p3, p4, p1)
    d2 = _orient(p3, p4, p2)
    d3 = _orient(p1, p2, p3)
    d4 = _orient(p1, p2, p4)
    if ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0)) and d1 != 0 and d2 != 0:
        return True
    if d1 == 0 and _on_segment(p3, p4, p1):
        return True
    if d2 == 0 and _on_segment(p3, p4, p2):
        return True
    if d3 == 0 and _on_segment(p1, p2, p3):
        return True
    if d4 == 0 and _on_segment(p1, p2, p4):
        return True
    return False


def polyline_is_simple(c: Polyline) -> bool:
    """True when the chain has no self-intersections.

    Adjacent segments may share their common vertex but must not double back
    over each other; non-adjacent segments must not touch at all (a chain
    whose last vertex revisits the first therefore counts as non-simple).
    """
    segs = list(zip(c.vertices, c.vertices[1:]))
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            a, b = segs[i]
            p, q = segs[j]
            if j == i + 1:
                # share vertex b == p; bad only if the chain folds back on itself
                if _orient(a, b, q) == 0 and float(np.dot(a - b, q - b)) > 0:
                    return False
                continue
            if _segments_intersect(a, b, p, q):
                return False
    return True
