"""Edge-based graph operators (line, Gallai, anti-Gallai) and vertex-set constructions.

For the three edge operators, derived vertex ``i`` stands for the ``i``-th edge
of the source graph's sorted edge list. Two distinct edges of a simple graph
share at most one endpoint, so every incident pair meets at a unique vertex
``w``; the pair is co-triangular exactly when its far endpoints are adjacent.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph

LINE, GALLAI, ANTI_GALLAI = "line", "gallai", "anti_gallai"


@dataclass(frozen=True)
class DerivedGraph:
    graph: Graph
    source_edges: tuple
    kind: str

    def vertex_of(self, edge) -> int:
        """Derived vertex standing for source ``edge``."""
        u, v = sorted(edge)
        return self.source_edges.index((u, v))


def _incident_pairs(g: Graph):
    """Yield ``(i, j, co_triangular)`` for every incident pair of edge indices."""
    index = {e: i for i, e in enumerate(g.edges)}
    for w in range(g.n):
        ends = sorted(g.neighbors(w))
        for a, b in combinations(ends, 2):
            i = index[(min(w, a), max(w, a))]
            j = index[(min(w, b), max(w, b))]
            yield i, j, g.has_edge(a, b)


def _derive(g: Graph, kind: str) -> DerivedGraph:
    if kind == LINE:
        keep = lambda tri: True
    elif kind == GALLAI:
        keep = lambda tri: not tri
    else:
        keep = lambda tri: tri
    edges = [(i, j) for i, j, tri in _incident_pairs(g) if keep(tri)]
    return DerivedGraph(Graph(g.m, edges), g.edges, kind)


def line_graph(g: Graph) -> DerivedGraph:
    return _derive(g, LINE)


def gallai(g: Graph) -> DerivedGraph:
    """Incident edge pairs that do not lie on a common triangle."""
    return _derive(g, GALLAI)


def anti_gallai(g: Graph) -> DerivedGraph:
    """Edge pairs that lie on a common triangle."""
    return _derive(g, ANTI_GALLAI)


def semi_total_point(g: Graph) -> Graph:
    """Replace every edge by a triangle.

    Vertices ``0..n-1`` keep their original adjacency; vertex ``n + i`` is
    new and adjacent to the two endpoints of edge ``i``.
    """
    extra = []
    for i, (u, v) in enumerate(g.edges):
        extra += [(u, g.n + i), (v, g.n + i)]
    return Graph(g.n + g.m, list(g.edges) + extra)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union with every vertex of ``g1`` joined to every vertex of ``g2``.

    ``g1`` keeps labels ``0..n1-1``; ``g2`` is shifted by ``n1``.
    """
    s = g1.n
    edges = list(g1.edges) + [(u + s, v + s) for u, v in g2.edges]
    edges += [(u, s + v) for u in range(g1.n) for v in range(g2.n)]
    return Graph(g1.n + g2.n, edges)


def complement(g: Graph) -> Graph:
    return Graph(g.n, [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)])


def cone_labeling(h: Graph) -> list[int]:
    """Map vertices of ``anti_gallai(join(h, K1))`` onto ``semi_total_point(h)``.

    The cone has hub ``h.n``. Spoke ``(u, hub)`` goes to original vertex ``u``;
    the rim edge equal to ``h.edges[i]`` goes to new vertex ``h.n + i``.
    Returned list is indexed by derived vertex.
    """
    hub = h.n
    rim = {e: i for i, e in enumerate(h.edges)}
    cone_edges = join(h, Graph(1)).edges
    return [u if v == hub else hub + rim[(u, v)] for u, v in cone_edges]
