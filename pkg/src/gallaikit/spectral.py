"""Adjacency spectra: Jacobi diagonalization, closed forms, interlacing."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from . import kernels
from .errors import ConvergenceError, FeasibilityError, InputError
from .graph import Graph

OFF_DIAGONAL_TOL = 1e-12
CLUSTER_TOL = 1e-6
COMPARE_TOL = 1e-8
MAX_SWEEPS = 100

NUMERIC, CLOSED_FORM = "numeric", "closed_form"


def _group(values: Sequence[float], tol: float) -> tuple:
    """Cluster a non-increasing sequence; consecutive gaps within ``tol`` merge."""
    groups = []
    run = []
    for v in values:
        if run and run[-1] - v > tol:
            groups.append((sum(run) / len(run), len(run)))
            run = []
        run.append(v)
    if run:
        groups.append((sum(run) / len(run), len(run)))
    return tuple(groups)


@dataclass(frozen=True)
class Spectrum:
    values: tuple
    groups: tuple
    source: str

    @classmethod
    def from_values(cls, values, source: str = NUMERIC, tol: float = CLUSTER_TOL) -> "Spectrum":
        vals = tuple(sorted((float(v) for v in values), reverse=True))
        return cls(vals, _group(vals, tol), source)

    @property
    def n(self) -> int:
        return len(self.values)

    def multiplicity(self, value: float, tol: float = CLUSTER_TOL) -> int:
        return sum(1 for v in self.values if abs(v - value) <= tol)

    def matches(self, other: "Spectrum", tol: float = CLUSTER_TOL) -> bool:
        """Same groups: equal multiplicities and values within ``tol``."""
        if len(self.groups) != len(other.groups):
            return False
        return all(ma == mb and abs(a - b) <= tol
                   for (a, ma), (b, mb) in zip(self.groups, other.groups))

    def to_dict(self) -> dict:
        r = lambda x: float(f"{x:.12g}") + 0.0  # + 0.0 folds -0.0
        return {"values": [r(v) for v in self.values],
                "groups": [[r(v), m] for v, m in self.groups],
                "source": self.source}

    @classmethod
    def from_dict(cls, d: dict) -> "Spectrum":
        return cls(tuple(d["values"]), tuple((v, m) for v, m in d["groups"]), d["source"])


SpectrumLike = Union[Spectrum, Sequence[float]]


def _values(s: SpectrumLike) -> list:
    return list(s.values) if isinstance(s, Spectrum) else [float(x) for x in s]


def symmetric_eigenvalues(matrix) -> np.ndarray:
    """All eigenvalues of a real symmetric matrix by cyclic Jacobi rotation."""
    a = np.array(matrix, dtype=np.float64, order="C", copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InputError("matrix must be square")
    if not np.allclose(a, a.T):
        raise InputError("matrix must be symmetric")
    if kernels.jacobi_sweeps(a, OFF_DIAGONAL_TOL, MAX_SWEEPS) < 0:
        raise ConvergenceError(f"Jacobi did not converge in {MAX_SWEEPS} sweeps (n={a.shape[0]})")
    return np.sort(np.diag(a))[::-1]


def eigenvalues(g: Graph) -> Spectrum:
    return Spectrum.from_values(symmetric_eigenvalues(g.adjacency_matrix()), NUMERIC)


def _near_int(x: float, tol: float = 1e-6):
    r = round(x)
    return r if abs(x - r) <= tol else None


def srg_spectrum(n: int, k: int, lam: int, mu: int) -> Spectrum:
    """Closed-form spectrum ``{k^1, theta^m1, tau^m2}`` of a strongly regular graph.

    ``theta, tau = ((lam - mu) +- sqrt((lam - mu)^2 + 4(k - mu))) / 2``; the
    multiplicities solve ``m1 + m2 = n - 1`` and ``k + m1*theta + m2*tau = 0``.
    """
    if k * (k - lam - 1) != (n - k - 1) * mu:
        raise FeasibilityError(f"({n}, {k}, {lam}, {mu}) violates k(k-lam-1) = (n-k-1)mu")
    disc = (lam - mu) ** 2 + 4 * (k - mu)
    if disc <= 0:
        raise FeasibilityError(f"({n}, {k}, {lam}, {mu}) has no two distinct restricted eigenvalues")
    root = math.sqrt(disc)
    theta, tau = (lam - mu + root) / 2, (lam - mu - root) / 2
    m_theta = _near_int(-(k + (n - 1) * tau) / (theta - tau))
    if m_theta is None or not 0 < m_theta < n - 1:
        raise FeasibilityError(
            f"({n}, {k}, {lam}, {mu}) gives multiplicity {-(k + (n - 1) * tau) / (theta - tau):.6g}")
    m_tau = n - 1 - m_theta
    return Spectrum.from_values([k] + [theta] * m_theta + [tau] * m_tau, CLOSED_FORM)


def rcn_spectrum(n: int) -> Spectrum:
    """Spectrum of the semi-total point graph of the ``n``-cycle:
    ``(r +- sqrt(r^2 + 4r + 8)) / 2`` with ``r = 2 cos(2 pi j / n)``, ``j = 1..n``."""
    if n < 3:
        raise InputError(f"rcn_spectrum needs n >= 3, got {n}")
    vals = []
    for j in range(1, n + 1):
        r = 2 * math.cos(2 * math.pi * j / n)
        root = math.sqrt(r * r + 4 * r + 8)
        vals += [(r + root) / 2, (r - root) / 2]
    return Spectrum.from_values(vals, CLOSED_FORM)


def interlaces(inner: SpectrumLike, outer: SpectrumLike, tol: float = COMPARE_TOL) -> bool:
    """Do the ``m`` inner eigenvalues interlace the ``n > m`` outer ones?

    With both sorted ascending: ``a[i] <= b[i] <= a[i + n - m]`` for every ``i``.
    """
    b = sorted(_values(inner))
    a = sorted(_values(outer))
    m, n = len(b), len(a)
    if m >= n:
        raise InputError(f"interlacing needs fewer inner ({m}) than outer ({n}) eigenvalues")
    return all(a[i] - tol <= b[i] <= a[i + n - m] + tol for i in range(m))


def spectrum_in_band(s: SpectrumLike, k: float, tol: float = COMPARE_TOL) -> bool:
    return all(-k - tol <= v <= k + tol for v in _values(s))
