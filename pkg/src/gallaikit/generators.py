"""Deterministic generators for the strongly regular verification corpus.

Vertex labelings (all 0-based):

* ``cycle(n)``: ``i ~ i+1 (mod n)``.
* ``path(n)``: ``i ~ i+1``.
* ``complete_bipartite(a, b)``: parts ``0..a-1`` and ``a..a+b-1``.
* ``petersen``: Kneser graph K(5,2); vertex ``i`` is the ``i``-th 2-subset of
  ``{0..4}`` in lexicographic order, adjacent iff disjoint.
* ``paley(q)``: ``i ~ j`` iff ``j - i`` is a non-zero square mod ``q``.
* ``octahedron``: K(2,2,2); ``i`` and ``j`` non-adjacent iff ``i // 2 == j // 2``.
* ``rook(m)``: vertex ``i*m + j`` is cell ``(i, j)``; same row or column.
  Identical to ``line_graph(complete_bipartite(m, m))`` vertex for vertex.
* ``triangular(m)``: vertex ``i`` is the ``i``-th 2-subset of ``{0..m-1}``;
  adjacent iff the subsets meet. Identical to ``line_graph(complete(m))``.
* ``folded5cube``: 4-bit vectors, adjacent iff the XOR has weight 1 or 4.
* ``wheel(n)``: rim ``0..n-1`` as ``cycle(n)``, hub ``n``.
* ``fan(n)``: center ``0``; triangle ``0, 2i+1, 2i+2`` for ``i < n``.
"""
from __future__ import annotations

from itertools import combinations
from typing import Callable, Sequence

from .errors import InputError
from .graph import Graph


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InputError(msg)


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


def empty(n: int) -> Graph:
    _need(n >= 0, "empty graph needs n >= 0")
    return Graph(n)


def complete(n: int) -> Graph:
    _need(n >= 0, "complete graph needs n >= 0")
    return Graph(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    _need(a >= 0 and b >= 0, "complete_bipartite needs non-negative part sizes")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    pairs = list(combinations(range(5), 2))
    return Graph(10, [(i, j) for (i, p), (j, q) in combinations(enumerate(pairs), 2)
                      if not set(p) & set(q)])


def paley(q: int) -> Graph:
    _need(is_prime(q), f"paley needs a prime order, got {q}")
    _need(q % 4 == 1, f"paley needs q = 1 (mod 4), got {q}")
    squares = {(x * x) % q for x in range(1, q)}
    return Graph(q, [(i, j) for i, j in combinations(range(q), 2) if (j - i) % q in squares])


def octahedron() -> Graph:
    return Graph(6, [(i, j) for i, j in combinations(range(6), 2) if i // 2 != j // 2])


def rook(m: int) -> Graph:
    _need(m >= 1, f"rook needs m >= 1, got {m}")
    cells = [(i, j) for i in range(m) for j in range(m)]
    return Graph(m * m, [(a, b) for (a, p), (b, q) in combinations(enumerate(cells), 2)
                         if p[0] == q[0] or p[1] == q[1]])


def triangular(m: int) -> Graph:
    _need(m >= 2, f"triangular needs m >= 2, got {m}")
    pairs = list(combinations(range(m), 2))
    return Graph(len(pairs), [(i, j) for (i, p), (j, q) in combinations(enumerate(pairs), 2)
                              if set(p) & set(q)])


def folded5cube() -> Graph:
    return Graph(16, [(i, j) for i, j in combinations(range(16), 2)
                      if bin(i ^ j).count("1") in (1, 4)])


def wheel(n: int) -> Graph:
    _need(n >= 3, f"wheel needs n >= 3, got {n}")
    return Graph(n + 1, list(cycle(n).edges) + [(i, n) for i in range(n)])


def fan(n: int) -> Graph:
    _need(n >= 1, f"fan needs n >= 1, got {n}")
    edges = []
    for i in range(n):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return Graph(2 * n + 1, edges)


GENERATORS: dict[str, tuple[int, Callable[..., Graph]]] = {
    "empty": (1, empty),
    "complete": (1, complete),
    "cycle": (1, cycle),
    "path": (1, path),
    "complete_bipartite": (2, complete_bipartite),
    "petersen": (0, petersen),
    "paley": (1, paley),
    "octahedron": (0, octahedron),
    "rook": (1, rook),
    "triangular": (1, triangular),
    "folded5cube": (0, folded5cube),
    "wheel": (1, wheel),
    "fan": (1, fan),
}


def generate(name: str, params: Sequence[int] = ()) -> Graph:
    """Build the named graph; raises :class:`InputError` on bad name or parameters."""
    try:
        arity, fn = GENERATORS[name]
    except KeyError:
        raise InputError(f"unknown generator {name!r}; choose from {', '.join(GENERATORS)}") from None
    if len(params) != arity:
        raise InputError(f"generator {name!r} takes {arity} integer parameter(s), got {len(params)}")
    return fn(*(int(p) for p in params))


#: Strongly regular members of the verification corpus with their
#: advertised parameters ``(n, k, lambda, mu)``.
SRG_CORPUS: dict[str, tuple[tuple[str, tuple[int, ...]], tuple[int, int, int, int]]] = {
    "petersen": (("petersen", ()), (10, 3, 0, 1)),
    "K33": (("complete_bipartite", (3, 3)), (6, 3, 0, 3)),
    "paley5": (("paley", (5,)), (5, 2, 0, 1)),
    "paley13": (("paley", (13,)), (13, 6, 2, 3)),
    "paley17": (("paley", (17,)), (17, 8, 3, 4)),
    "octahedron": (("octahedron", ()), (6, 4, 2, 4)),
    "triangular5": (("triangular", (5,)), (10, 6, 3, 4)),
    "rook3": (("rook", (3,)), (9, 4, 1, 2)),
    "folded5cube": (("folded5cube", ()), (16, 5, 0, 2)),
}


def corpus_graph(label: str) -> Graph:
    (name, params), _ = SRG_CORPUS[label]
    return generate(name, params)
