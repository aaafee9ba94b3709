"""graph6 and edge-list serialization, and the JSON report document.

graph6 (B. McKay): optional ``>>graph6<<`` header, then N(n) and the upper
triangle of the adjacency matrix in column order ``(0,1), (0,2), (1,2),
(0,3), ...`` packed six bits per byte, each byte offset by 63.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Union

from .errors import Graph6ParseError
from .graph import Graph
from .regularity import RegularityReport
from .spectral import Spectrum
from .theorems import TheoremVerdict

HEADER = b">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def write_graph6(g: Graph) -> bytes:
    """Encode ``g`` as one graph6 line (no header, no newline)."""
    a = g.adjacency_matrix()
    bits = [int(a[i, j]) for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(63 + int("".join(map(str, bits[i:i + 6])), 2) for i in range(0, len(bits), 6))
    return _encode_n(g.n) + body


def _decode_n(data: bytes) -> tuple[int, int]:
    def digits(start, count):
        if len(data) < start + count:
            raise Graph6ParseError("truncated vertex count", len(data))
        value = 0
        for i in range(start, start + count):
            value = (value << 6) | (data[i] - 63)
        return value

    if not data:
        raise Graph6ParseError("empty input", 0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) > 1 and data[1] == 126:
        return digits(2, 6), 8
    return digits(1, 3), 4


def parse_graph6(text: Union[bytes, str]) -> Graph:
    """Decode exactly one graph6 line; trailing whitespace is ignored."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    offset0 = 0
    if data.startswith(HEADER):
        data, offset0 = data[len(HEADER):], len(HEADER)
    data = data.rstrip()
    if b"\n" in data:
        raise Graph6ParseError("more than one graph; use iter_graph6 for streams")
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6ParseError(f"byte {b!r} outside 63..126", offset0 + i)
    n, pos = _decode_n(data)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise Graph6ParseError(f"expected {need} adjacency bytes for n={n}, found {len(body)}",
                               offset0 + pos + min(len(body), need))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if need and (body[-1] - 63) & ((1 << (need * 6 - nbits)) - 1):
        raise Graph6ParseError("non-zero padding bits", offset0 + pos + need - 1)
    return Graph(n, edges)


def iter_graph6(lines: Iterable[Union[bytes, str]]) -> Iterator[Graph]:
    """One graph per non-blank line."""
    for line in lines:
        if line.strip():
            yield parse_graph6(line)


def parse_edgelist(text: str) -> Graph:
    """Lines ``u v`` (0-based). ``#`` starts a comment; ``# vertices: N`` fixes
    the order so trailing isolated vertices survive."""
    edges, n = [], 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line, _, comment = raw.partition("#")
        key, _, value = comment.partition(":")
        if key.strip() == "vertices" and value.strip().isdigit():
            n = max(n, int(value))
        parts = line.split()
        if not parts:
            continue
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise Graph6ParseError(f"line {lineno}: expected two non-negative integers, got {raw!r}")
        u, v = map(int, parts)
        edges.append((u, v))
        n = max(n, u + 1, v + 1)
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise Graph6ParseError(str(exc)) from None


def write_edgelist(g: Graph) -> str:
    return "".join([f"# vertices: {g.n}\n"] + [f"{u} {v}\n" for u, v in g.edges])


@dataclass
class Report:
    input: str
    regularity: Optional[RegularityReport] = None
    spectra: list = field(default_factory=list)
    verdicts: list = field(default_factory=list)
    timing: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "input": self.input,
            "regularity": self.regularity.to_dict() if self.regularity else None,
            "spectra": [{"role": role, "spectrum": s.to_dict()} for role, s in self.spectra],
            "verdicts": [v.to_dict() for v in self.verdicts],
            "timing": {k: round(v, 6) for k, v in self.timing.items()},
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=indent)

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(
            d["input"],
            RegularityReport.from_dict(d["regularity"]) if d["regularity"] else None,
            [(s["role"], Spectrum.from_dict(s["spectrum"])) for s in d["spectra"]],
            [TheoremVerdict.from_dict(v) for v in d["verdicts"]],
            dict(d["timing"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    @property
    def failed(self) -> bool:
        return any(v.failed for v in self.verdicts)
