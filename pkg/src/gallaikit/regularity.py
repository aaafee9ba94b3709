"""Classification on the irregular / regular / edge-regular / strongly regular ladder."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from .graph import Graph, is_connected

IRREGULAR, REGULAR, EDGE_REGULAR, STRONGLY_REGULAR = (
    "irregular", "regular", "edge_regular", "strongly_regular")
LEVELS = (IRREGULAR, REGULAR, EDGE_REGULAR, STRONGLY_REGULAR)


@dataclass(frozen=True)
class RegularityReport:
    n: int
    level: str
    k: Optional[int] = None
    lam: Optional[int] = None
    mu: Optional[int] = None
    complete_or_empty: bool = False

    def at_least(self, level: str) -> bool:
        return LEVELS.index(self.level) >= LEVELS.index(level)

    @property
    def params(self) -> tuple:
        """``(n, k, lambda, mu)`` truncated to what the level guarantees."""
        full = (self.n, self.k, self.lam, self.mu)
        return full[:LEVELS.index(self.level) + 1]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["lambda"] = d.pop("lam")
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "RegularityReport":
        d = dict(d)
        d["lam"] = d.pop("lambda")
        return cls(**d)


def _single(values: np.ndarray):
    """The unique value in ``values``; ``None`` if they disagree."""
    if values.size == 0:
        return None
    lo, hi = int(values.min()), int(values.max())
    return lo if lo == hi else None


def classify(g: Graph) -> RegularityReport:
    """Exhaustive classification via the common-neighbour count matrix ``A @ A``.

    An edgeless graph is edge-regular with lambda 0 (no adjacent pairs to
    disagree). Complete and edgeless graphs never reach strongly regular.
    """
    n = g.n
    complete_or_empty = g.m == 0 or g.m == n * (n - 1) // 2
    a = g.adjacency_matrix().astype(np.int64)
    deg = a.sum(axis=1)
    k = _single(deg) if n else 0
    if k is None:
        return RegularityReport(n, IRREGULAR, complete_or_empty=complete_or_empty)
    common = a @ a
    adjacent = a.astype(bool)
    lam = _single(common[adjacent]) if g.m else 0
    if lam is None:
        return RegularityReport(n, REGULAR, k, complete_or_empty=complete_or_empty)
    if complete_or_empty:
        return RegularityReport(n, EDGE_REGULAR, k, lam, complete_or_empty=True)
    off = ~adjacent
    np.fill_diagonal(off, False)
    mu = _single(common[off])
    if mu is None:
        return RegularityReport(n, EDGE_REGULAR, k, lam)
    if k * (k - lam - 1) != (n - k - 1) * mu:
        raise AssertionError(f"counting identity fails for ({n}, {k}, {lam}, {mu})")
    return RegularityReport(n, STRONGLY_REGULAR, k, lam, mu)


def is_srg(report: RegularityReport) -> bool:
    return report.level == STRONGLY_REGULAR


__all__ = ["RegularityReport", "classify", "is_connected", "is_srg", "LEVELS",
           "IRREGULAR", "REGULAR", "EDGE_REGULAR", "STRONGLY_REGULAR"]
