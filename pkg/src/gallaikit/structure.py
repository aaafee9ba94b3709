"""Local structure: triangles, short cycles through given edges, fans, wheels,
articulation vertices and small forbidden induced patterns."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from . import kernels
from .errors import InputError
from .graph import Graph, components, induced_subgraph, is_connected

INCIDENT, DISJOINT = "incident", "disjoint"
PATTERNS = ("diamond", "C4", "K4")


def _edge(g: Graph, e) -> tuple:
    u, v = sorted(int(x) for x in e)
    if not g.has_edge(u, v):
        raise InputError(f"({u}, {v}) is not an edge")
    return u, v


@dataclass(frozen=True)
class EdgePair:
    e1: tuple
    e2: tuple
    relation: str

    @classmethod
    def of(cls, e1, e2) -> "EdgePair":
        e1, e2 = tuple(sorted(e1)), tuple(sorted(e2))
        if e1 == e2:
            raise InputError("an edge pair needs two different edges")
        return cls(e1, e2, INCIDENT if set(e1) & set(e2) else DISJOINT)


def edges_span_triangle(g: Graph, e1, e2) -> bool:
    e1, e2 = _edge(g, e1), _edge(g, e2)
    if e1 == e2:
        raise InputError("edges_span_triangle needs two different edges")
    shared = set(e1) & set(e2)
    if not shared:
        return False
    (a,) = set(e1) - shared
    (b,) = set(e2) - shared
    return g.has_edge(a, b)


def triangle_count_through_edge(g: Graph, e) -> int:
    u, v = _edge(g, e)
    return len(g.neighbors(u) & g.neighbors(v))


def cycle_through(g: Graph, length: int, edges=(), vertices=()) -> bool:
    """Is there a cycle (not necessarily induced) on exactly ``length`` vertices
    using every edge in ``edges`` and visiting every vertex in ``vertices``?"""
    edges = [tuple(sorted(e)) for e in edges]
    if any(not g.has_edge(u, v) for u, v in edges):
        return False
    if edges:
        start, first = edges[0]
    elif vertices:
        start, first = vertices[0], -1
    else:
        raise InputError("cycle_through needs at least one edge or vertex")
    return kernels.cycle_exists(g.adjacency_matrix(), length, start, first,
                                list(vertices), edges)


def edges_on_common_cycle(g: Graph, e1, e2, length: int) -> bool:
    """Do both edges lie on a common cycle of exactly ``length`` (4..6) vertices?"""
    if not 4 <= length <= 6:
        raise InputError(f"cycle length must be in 4..6, got {length}")
    if tuple(sorted(e1)) == tuple(sorted(e2)):
        raise InputError("edges_on_common_cycle needs two different edges")
    return cycle_through(g, length, edges=[e1, e2])


def neighborhood_graph(g: Graph, v: int) -> tuple[Graph, list[int]]:
    """Subgraph induced on N(v) and the original label of each of its vertices."""
    labels = sorted(g.neighbors(v))
    return induced_subgraph(g, labels), labels


def neighborhood_is_fan(g: Graph, v: int) -> bool:
    """Do ``v`` and its neighbours induce the fan ``F_{deg(v)/2}``?"""
    h, _ = neighborhood_graph(g, v)
    if h.n == 0 or h.n % 2:
        return False
    return all(d == 1 for d in h.degrees())


def _cycle_order(h: Graph, comp: list[int]) -> list[int]:
    start = comp[0]
    order, prev, cur = [start], start, min(h.neighbors(start))
    while cur != start:
        order.append(cur)
        (nxt,) = h.neighbors(cur) - {prev}
        prev, cur = cur, nxt
    return order


def wheels_at_vertex(g: Graph, v: int) -> list[list[int]]:
    """Components of the induced neighbourhood of ``v`` that are cycles.

    Each cycle is returned in traversal order starting from its smallest
    vertex and stepping to the smaller of that vertex's two neighbours.
    Together with ``v`` as hub each one is a wheel.
    """
    h, labels = neighborhood_graph(g, v)
    wheels = []
    for comp in components(h):
        if len(comp) >= 3 and all(len(h.neighbors(x)) == 2 for x in comp):
            wheels.append([labels[x] for x in _cycle_order(h, comp)])
    return wheels


def find_wheel(g: Graph, v: int) -> Optional[list[int]]:
    """Some cycle inside N(v) (any subgraph cycle, not only whole components),
    so ``v`` is the hub of a wheel; ``None`` if the neighbourhood is a forest."""
    h, labels = neighborhood_graph(g, v)
    parent = [-1] * h.n
    depth = [-1] * h.n
    for root in range(h.n):
        if depth[root] >= 0:
            continue
        depth[root] = 0
        stack = [root]
        while stack:
            x = stack.pop()
            for y in sorted(h.neighbors(x)):
                if y == parent[x]:
                    continue
                if depth[y] < 0:
                    depth[y], parent[y] = depth[x] + 1, x
                    stack.append(y)
                    continue
                # non-tree edge x-y: walk both ends up to their meeting point
                a, b, left, right = x, y, [x], [y]
                while a != b:
                    if depth[a] >= depth[b]:
                        a = parent[a]
                        left.append(a)
                    else:
                        b = parent[b]
                        right.append(b)
                cyc = left[:-1] + right[::-1]
                return [labels[z] for z in cyc]
    return None


def articulation_points(g: Graph) -> list[int]:
    """Cut vertices via iterative depth-first lowlink computation."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cut = set()
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(sorted(g.neighbors(root))))]
        while stack:
            x, parent, it = stack[-1]
            advanced = False
            for y in it:
                if disc[y] < 0:
                    disc[y] = low[y] = timer
                    timer += 1
                    if x == root:
                        root_children += 1
                    stack.append((y, x, iter(sorted(g.neighbors(y)))))
                    advanced = True
                    break
                if y != parent:
                    low[x] = min(low[x], disc[y])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[x])
                if parent != root and low[x] >= disc[parent]:
                    cut.add(parent)
        if root_children > 1:
            cut.add(root)
    return sorted(cut)


def is_two_connected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and not articulation_points(g)


def has_forbidden_induced(g: Graph, pattern: str) -> bool:
    """Does some 4-vertex subset induce ``pattern`` (diamond, C4 or K4)?

    Each pattern has a pair of vertices with two common neighbours: the
    pair is adjacent for diamond/K4 and non-adjacent for C4; the two
    common neighbours are adjacent only for K4.
    """
    if pattern not in PATTERNS:
        raise InputError(f"unknown pattern {pattern!r}; choose from {PATTERNS}")
    for u, v in combinations(range(g.n), 2):
        if g.has_edge(u, v) != (pattern != "C4"):
            continue
        for a, b in combinations(sorted(g.neighbors(u) & g.neighbors(v)), 2):
            if g.has_edge(a, b) == (pattern == "K4"):
                return True
    return False
