import random

import pytest

from gallaikit import Graph, anti_gallai, classify, gallai, generate, is_connected
from gallaikit.generators import SRG_CORPUS, corpus_graph
from gallaikit.graph import relabel
from gallaikit.regularity import RegularityReport

LAMBDA_CORPUS = {label: p for label, (_, p) in SRG_CORPUS.items()}


@pytest.mark.parametrize("label", list(SRG_CORPUS))
def test_corpus_classification(label):
    rep = classify(corpus_graph(label))
    assert rep.level == "strongly_regular"
    assert rep.params == SRG_CORPUS[label][1]
    n, k, lam, mu = rep.params
    assert k * (k - lam - 1) == (n - k - 1) * mu


def test_triangular5():
    assert classify(generate("triangular", [5])).params == (10, 6, 3, 4)


def test_star_irregular():
    rep = classify(generate("complete_bipartite", [1, 3]))
    assert rep.level == "irregular" and rep.k is None


def test_regular_not_edge_regular():
    # prism: triangle edges have 1 common neighbour, rungs have 0
    prism = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    rep = classify(prism)
    assert (rep.level, rep.k, rep.lam) == ("regular", 3, None)


def test_edge_regular_not_srg():
    rep = classify(gallai(generate("petersen")).graph)
    assert rep.level == "edge_regular" and rep.params == (15, 4, 1)


def test_complete_and_empty_capped():
    for g in (generate("complete", [5]), Graph(4)):
        rep = classify(g)
        assert rep.level == "edge_regular" and rep.complete_or_empty and rep.mu is None
    assert classify(Graph(4)).lam == 0


def test_disconnected_still_classified():
    two = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert classify(two).params == (6, 2, 1, 0)
    assert not is_connected(two)


def test_is_connected():
    assert is_connected(generate("petersen"))
    assert not is_connected(Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]))
    assert is_connected(Graph(1))
    assert is_connected(Graph(0))


@pytest.mark.parametrize("label", ["petersen", "paley13", "rook3", "folded5cube"])
def test_relabel_invariance(label):
    g = corpus_graph(label)
    perm = list(range(g.n))
    random.Random(5).shuffle(perm)
    assert classify(relabel(g, perm)) == classify(g)


@pytest.mark.parametrize("label", [l for l, p in LAMBDA_CORPUS.items() if p[2] == 0 and p[1] >= 3])
def test_gallai_lambda0_parameters(label):
    n, k, _, _ = LAMBDA_CORPUS[label]
    rep = classify(gallai(corpus_graph(label)).graph)
    assert rep.at_least("edge_regular")
    assert (rep.n, rep.k, rep.lam) == (n * k // 2, 2 * k - 2, k - 2)


@pytest.mark.parametrize("label", [l for l, p in LAMBDA_CORPUS.items() if p[2] == 1])
def test_gallai_lambda1_parameters(label):
    """Published parameters (nk/2, 2k-4, k-2); the measured lambda is k-4
    (see test_gallai_lambda1_measured_lambda). Left failing on purpose."""
    n, k, _, _ = LAMBDA_CORPUS[label]
    rep = classify(gallai(corpus_graph(label)).graph)
    assert rep.at_least("edge_regular")
    assert (rep.n, rep.k, rep.lam) == (n * k // 2, 2 * k - 4, k - 2)


@pytest.mark.parametrize("g", [generate("rook", [3]),
                               __import__("gallaikit").complement(generate("triangular", [6]))],
                         ids=["rook3", "srg15"])
def test_gallai_lambda1_measured_lambda(g):
    n, k, _, _ = classify(g).params
    rep = classify(gallai(g).graph)
    assert (rep.level, rep.n, rep.k, rep.lam) == ("edge_regular", n * k // 2, 2 * k - 4, k - 4)


@pytest.mark.parametrize("label", ["octahedron", "paley13"])
def test_anti_gallai_lambda2(label):
    n, k, _, _ = LAMBDA_CORPUS[label]
    rep = classify(anti_gallai(corpus_graph(label)).graph)
    assert rep.level == "edge_regular" and rep.params == (n * k // 2, 4, 1)


def test_report_dict_roundtrip():
    rep = classify(generate("petersen"))
    d = rep.to_dict()
    assert d["lambda"] == 0 and "lam" not in d
    assert RegularityReport.from_dict(d) == rep
