import json
import random

import networkx as nx
import pytest

from gallaikit import Graph, generate
from gallaikit.errors import Graph6ParseError, InputError
from gallaikit.generators import SRG_CORPUS, corpus_graph
from gallaikit.io import (Report, iter_graph6, parse_edgelist, parse_graph6, write_edgelist,
                          write_graph6)
from gallaikit.regularity import classify
from gallaikit.spectral import eigenvalues
from gallaikit.theorems import verify

from conftest import random_graphs


def nx_graph6(g: Graph) -> bytes:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return nx.to_graph6_bytes(h, header=False).strip()


class TestGraph6Decode:
    def test_star(self):
        g = parse_graph6("D?{")
        assert g.n == 5 and g.edges == ((0, 4), (1, 4), (2, 4), (3, 4))

    def test_small(self):
        assert parse_graph6("?") == Graph(0, [])
        assert parse_graph6("@") == Graph(1, [])
        assert parse_graph6("A_") == Graph(2, [(0, 1)])
        assert parse_graph6("A?") == Graph(2, [])

    def test_header_and_trailing_newline(self):
        assert parse_graph6(">>graph6<<A_\n") == Graph(2, [(0, 1)])
        assert parse_graph6(b"D?{\r\n").m == 4

    def test_missing_bytes(self):
        with pytest.raises(Graph6ParseError) as info:
            parse_graph6("B")
        assert info.value.offset == 1
        assert isinstance(info.value, InputError)

    def test_extra_bytes(self):
        with pytest.raises(Graph6ParseError):
            parse_graph6("A_?")

    def test_byte_out_of_range(self):
        with pytest.raises(Graph6ParseError) as info:
            parse_graph6("D?!")
        assert info.value.offset == 2
        assert "at byte 2" in str(info.value)

    def test_nonzero_padding(self):
        # n=2 has one bit; the remaining five must be zero
        with pytest.raises(Graph6ParseError):
            parse_graph6("A`")

    def test_multiline_rejected(self):
        with pytest.raises(Graph6ParseError):
            parse_graph6("A_\nA_")

    def test_truncated_long_form(self):
        with pytest.raises(Graph6ParseError):
            parse_graph6("~??")


class TestGraph6Encode:
    @pytest.mark.parametrize("label", list(SRG_CORPUS))
    def test_corpus_matches_reference(self, label):
        g = corpus_graph(label)
        assert write_graph6(g) == nx_graph6(g)
        assert parse_graph6(write_graph6(g)) == g

    def test_random_roundtrip(self):
        for g in random_graphs(200, 40, seed=6):
            enc = write_graph6(g)
            assert enc == nx_graph6(g)
            assert parse_graph6(enc) == g

    @pytest.mark.parametrize("n", [62, 63, 64, 100])
    def test_long_vertex_count(self, n):
        rng = random.Random(n)
        g = Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.1])
        enc = write_graph6(g)
        assert enc == nx_graph6(g)
        assert (enc[0] == 126) == (n >= 63)
        assert parse_graph6(enc) == g

    def test_stream(self):
        lines = [write_graph6(g) for g in random_graphs(10, 12, seed=1)]
        assert list(iter_graph6(lines + [b"", b"  "])) == [parse_graph6(x) for x in lines]


class TestEdgeList:
    def test_roundtrip_keeps_isolated(self):
        g = Graph(6, [(0, 1), (1, 2)])
        text = write_edgelist(g)
        assert text.startswith("# vertices: 6\n")
        assert parse_edgelist(text) == g

    def test_comments_and_blanks(self):
        g = parse_edgelist("# a triangle\n0 1\n\n1 2  # chord\n2 0\n")
        assert g == generate("cycle", [3])

    @pytest.mark.parametrize("bad", ["0\n", "0 1 2\n", "a b\n", "0 -1\n", "1 1\n"])
    def test_bad_lines(self, bad):
        with pytest.raises(InputError):
            parse_edgelist(bad)

    def test_random_roundtrip(self):
        for g in random_graphs(50, 20, seed=3):
            assert parse_edgelist(write_edgelist(g)) == g


class TestReport:
    def _report(self, spectra=True):
        g = generate("petersen")
        r = Report("petersen", classify(g), verdicts=verify(g))
        if spectra:
            r.spectra = [("graph", eigenvalues(g))]
        return r

    def test_roundtrip(self):
        r = self._report()
        back = Report.from_json(r.to_json())
        assert back.to_dict() == r.to_dict()
        assert not back.failed

    def test_deterministic_bytes(self):
        assert self._report().to_json() == self._report().to_json()

    def test_sorted_keys(self):
        doc = json.loads(self._report().to_json())
        assert list(doc) == sorted(doc)
        assert doc["timing"] == {}

    def test_no_regularity(self):
        r = Report("x")
        assert Report.from_dict(r.to_dict()).regularity is None
