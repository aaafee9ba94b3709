"""Immutable undirected simple graphs with 0-based vertex labels."""
from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Sequence

import numpy as np

from .errors import InputError

#: Distance between vertices in different components.
INFINITY = math.inf


class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    The edge list is normalized to pairs ``(u, v)`` with ``u < v``, sorted
    lexicographically and free of duplicates; derived graphs rely on that
    order to label their vertices. Instances are immutable and hashable.
    """

    __slots__ = ("n", "edges", "_nbrs", "_matrix")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        nbrs = [set() for _ in range(n)]
        normalized = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u > v:
                u, v = v, u
            normalized.add((u, v))
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.edges = tuple(sorted(normalized))
        self._nbrs = tuple(frozenset(s) for s in nbrs)
        self._matrix = None

    @classmethod
    def from_matrix(cls, matrix) -> "Graph":
        a = np.asarray(matrix)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise InputError("adjacency matrix must be square")
        if np.any(np.diag(a)):
            raise InputError("adjacency matrix has a non-zero diagonal")
        if not np.array_equal(a != 0, (a != 0).T):
            raise InputError("adjacency matrix is not symmetric")
        iu, ju = np.nonzero(np.triu(a != 0, 1))
        return cls(a.shape[0], zip(iu.tolist(), ju.tolist()))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset:
        self._check(v)
        return self._nbrs[v]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._nbrs[u]

    def degrees(self) -> list[int]:
        return [len(s) for s in self._nbrs]

    def adjacency_matrix(self) -> np.ndarray:
        """Dense 0/1 ``uint8`` matrix (read-only, cached)."""
        if self._matrix is None:
            a = np.zeros((self.n, self.n), dtype=np.uint8)
            if self.edges:
                idx = np.array(self.edges)
                a[idx[:, 0], idx[:, 1]] = 1
                a[idx[:, 1], idx[:, 0]] = 1
            a.setflags(write=False)
            self._matrix = a
        return self._matrix

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} out of range for n={self.n}")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def degree(g: Graph, v: int) -> int:
    return len(g.neighbors(v))


def common_neighbors(g: Graph, u: int, v: int) -> frozenset:
    if u == v:
        raise InputError("common_neighbors needs two distinct vertices")
    return g.neighbors(u) & g.neighbors(v)


def bfs_distances(g: Graph, source: int) -> list:
    """Distances from ``source``; unreachable vertices get :data:`INFINITY`."""
    g._check(source)
    dist = [INFINITY] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g._nbrs[x]:
            if dist[y] == INFINITY:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distance(g: Graph, u: int, v: int):
    g._check(v)
    return bfs_distances(g, u)[v]


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in g._nbrs[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    """True when ``g`` has at most one component (the null graph counts)."""
    return len(components(g)) <= 1


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabeled in increasing order."""
    vs = sorted(set(vertices))
    for v in vs:
        g._check(v)
    index = {v: i for i, v in enumerate(vs)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph(len(vs), edges)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise InputError("relabeling must be a permutation of 0..n-1")
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
