import random

import pytest

from gallaikit import Graph
from gallaikit.generators import SRG_CORPUS, corpus_graph

_criteria = {}


def random_graphs(count, max_n, seed, p=None):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        q = rng.random() if p is None else p
        out.append(Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < q]))
    return out


@pytest.fixture(scope="session")
def corpus():
    return {label: corpus_graph(label) for label in SRG_CORPUS}


@pytest.fixture
def record_criterion():
    """Record one acceptance line; printed in the terminal summary."""
    def record(number, text, ok):
        _criteria[number] = (text, ok)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        text, ok = _criteria[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {text}")
