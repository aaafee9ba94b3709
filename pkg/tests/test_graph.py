import itertools
from math import inf

import pytest
from hypothesis import given, settings, strategies as st

from gallaikit import Graph, InputError, common_neighbors, degree, distance, generate
from gallaikit.generators import SRG_CORPUS, corpus_graph
from gallaikit.graph import INFINITY, bfs_distances, components, induced_subgraph, relabel

from conftest import random_graphs


def two_triangles():
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


def brute_params(g):
    """(n, k, lambda, mu) by explicit neighbour-set intersection."""
    degs = {len(g.neighbors(v)) for v in range(g.n)}
    lam, mu = set(), set()
    for u, v in itertools.combinations(range(g.n), 2):
        c = sum(1 for w in range(g.n) if g.has_edge(u, w) and g.has_edge(v, w))
        (lam if g.has_edge(u, v) else mu).add(c)
    return degs, lam, mu


class TestGraph:
    def test_edges_normalized(self):
        g = Graph(4, [(2, 1), (0, 3), (1, 2)])
        assert g.edges == ((0, 3), (1, 2))
        assert g.m == 2

    def test_rejects_loops_and_range(self):
        with pytest.raises(InputError):
            Graph(3, [(1, 1)])
        with pytest.raises(InputError):
            Graph(3, [(0, 3)])

    def test_matrix_symmetric_readonly(self):
        a = generate("petersen").adjacency_matrix()
        assert (a == a.T).all() and not a.diagonal().any()
        with pytest.raises(ValueError):
            a[0, 1] = 0

    def test_from_matrix_roundtrip(self):
        g = generate("paley", [13])
        assert Graph.from_matrix(g.adjacency_matrix()) == g


class TestQueries:
    def test_degree(self):
        p = generate("petersen")
        assert [degree(p, v) for v in range(10)] == [3] * 10
        assert degree(Graph(5), 0) == 0
        assert {degree(generate("complete", [4]), v) for v in range(4)} == {3}

    def test_degree_out_of_range(self):
        with pytest.raises(InputError):
            degree(Graph(3), 3)

    def test_common_neighbors_petersen(self):
        p = generate("petersen")
        for u, v in itertools.combinations(range(10), 2):
            cn = common_neighbors(p, u, v)
            assert len(cn) == (0 if p.has_edge(u, v) else 1)

    def test_common_neighbors_k4(self):
        assert common_neighbors(generate("complete", [4]), 0, 2) == {1, 3}
        with pytest.raises(InputError):
            common_neighbors(generate("complete", [4]), 1, 1)

    def test_distance(self):
        p = generate("petersen")
        assert distance(p, 4, 4) == 0
        assert {distance(p, u, v) for u, v in itertools.combinations(range(10), 2)
                if not p.has_edge(u, v)} == {2}
        d = distance(two_triangles(), 0, 4)
        assert d == inf and d is INFINITY

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 10_000))
    def test_distance_metric(self, seed):
        (g,) = random_graphs(1, 12, seed)
        d = [bfs_distances(g, u) for u in range(g.n)]
        for u, v in itertools.product(range(g.n), repeat=2):
            assert d[u][v] == d[v][u]
            for w in range(g.n):
                if d[u][w] != inf and d[w][v] != inf:
                    assert d[u][v] <= d[u][w] + d[w][v]

    def test_degree_sum(self):
        for g in random_graphs(50, 20, seed=3):
            assert sum(g.degrees()) == 2 * g.m

    def test_components_and_induced(self):
        assert components(two_triangles()) == [[0, 1, 2], [3, 4, 5]]
        h = induced_subgraph(generate("petersen"), [0, 7, 9])
        assert h.n == 3

    def test_relabel(self):
        g = generate("cycle", [5])
        assert relabel(g, [1, 2, 3, 4, 0]) == g
        with pytest.raises(InputError):
            relabel(g, [0, 0, 1, 2, 3])


class TestGenerators:
    def test_petersen(self):
        p = generate("petersen")
        assert (p.n, p.m, set(p.degrees())) == (10, 15, {3})

    def test_fan(self):
        f = generate("fan", [3])
        assert (f.n, f.m) == (7, 9)

    def test_wheel(self):
        w = generate("wheel", [6])
        assert w.n == 7 and degree(w, 6) == 6

    @pytest.mark.parametrize("q", [9, 7, 15, 1])
    def test_paley_rejects(self, q):
        with pytest.raises(InputError):
            generate("paley", [q])

    def test_cycle_rejects_short(self):
        with pytest.raises(InputError):
            generate("cycle", [2])

    def test_unknown_and_arity(self):
        with pytest.raises(InputError):
            generate("hoffman_singleton")
        with pytest.raises(InputError):
            generate("cycle", [])

    @pytest.mark.parametrize("label", list(SRG_CORPUS))
    def test_corpus_parameters_brute_force(self, label):
        n, k, lam, mu = SRG_CORPUS[label][1]
        g = corpus_graph(label)
        degs, lams, mus = brute_params(g)
        assert (g.n, degs, lams, mus) == (n, {k}, {lam}, {mu})

    @pytest.mark.parametrize("q", [5, 13, 17, 29])
    def test_paley_family_brute_force(self, q):
        degs, lams, mus = brute_params(generate("paley", [q]))
        assert degs == {(q - 1) // 2} and lams == {(q - 5) // 4} and mus == {(q - 1) // 4}
