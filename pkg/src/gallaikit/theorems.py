"""Mechanical checks of the Gallai / anti-Gallai results on concrete graphs.

Every ``verify_*`` function screens its hypotheses on the input and, when
they hold, recomputes the conclusion exhaustively. Biconditionals are
checked by evaluating both sides independently (classification of the
derived graph against a structural search on the source graph).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional

from . import operators as ops
from . import spectral
from .graph import Graph, components, induced_subgraph, is_connected
from .regularity import EDGE_REGULAR, RegularityReport, classify, is_srg
from .structure import (articulation_points, cycle_through, find_wheel,
                        has_forbidden_induced, is_two_connected, neighborhood_is_fan,
                        wheels_at_vertex)


@dataclass(frozen=True)
class TheoremVerdict:
    theorem_id: str
    hypotheses_hold: bool
    conclusion_holds: Optional[bool]
    witness: Optional[str] = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.hypotheses_hold and self.conclusion_holds is not None:
            raise ValueError(f"{self.theorem_id}: conclusion must be n/a when hypotheses fail")
        if self.failed and not self.witness:
            raise ValueError(f"{self.theorem_id}: a failed conclusion needs a witness")

    @property
    def failed(self) -> bool:
        return self.hypotheses_hold and self.conclusion_holds is False

    def to_dict(self) -> dict:
        return {"theorem_id": self.theorem_id, "hypotheses_hold": self.hypotheses_hold,
                "conclusion_holds": self.conclusion_holds, "witness": self.witness,
                "details": self.details}

    @classmethod
    def from_dict(cls, d: dict) -> "TheoremVerdict":
        return cls(d["theorem_id"], d["hypotheses_hold"], d["conclusion_holds"],
                   d["witness"], d["details"])


def _na(tid: str, reason: str, **details) -> TheoremVerdict:
    return TheoremVerdict(tid, False, None, None, {"reason": reason, **details})


def _result(tid: str, failures: list, **details) -> TheoremVerdict:
    """Conclusion holds iff ``failures`` is empty; the first failure is the witness."""
    return TheoremVerdict(tid, True, not failures, failures[0] if failures else None, details)


def _params(rep: RegularityReport) -> list:
    return list(rep.params)


def _srg_screen(g: Graph, lam=None):
    """``(report, reason)``; reason is ``None`` when ``g`` is a connected SRG
    with ``k >= 3`` (and ``lambda in lam`` when given)."""
    rep = classify(g)
    if not is_srg(rep):
        return rep, f"not strongly regular (level {rep.level})"
    if not is_connected(g):
        return rep, "not connected"
    if rep.k < 3:
        return rep, f"degree {rep.k} < 3"
    if lam is not None and rep.lam not in lam:
        return rep, f"lambda = {rep.lam} not in {sorted(lam)}"
    return rep, None


def _edge_name(e) -> str:
    return f"{e[0]}-{e[1]}"


def _disjoint_pairs(g: Graph):
    for e1, e2 in combinations(g.edges, 2):
        if not set(e1) & set(e2):
            yield e1, e2


def _all_disjoint_on_cycle(g: Graph, length: int):
    """``(True, None)`` if every disjoint edge pair lies on a common ``C_length``,
    else ``(False, first failing pair)``."""
    for e1, e2 in _disjoint_pairs(g):
        if not cycle_through(g, length, edges=[e1, e2]):
            return False, (e1, e2)
    return True, None


def _check_degree(dg: Graph, want: int, source_edges, label: str) -> list:
    for x, d in enumerate(dg.degrees()):
        if d != want:
            return [f"{label} vertex {x} (edge {_edge_name(source_edges[x])}) has degree {d}, expected {want}"]
    return []


def _check_params(rep: RegularityReport, want: tuple, label: str) -> list:
    if not rep.at_least(EDGE_REGULAR) or (rep.n, rep.k, rep.lam) != want:
        return [f"{label} classified {rep.level} {_params(rep)}, expected edge-regular {list(want)}"]
    return []


# -- regularity and partitions -------------------------------------------------

def verify_regularity_theorem(g: Graph) -> TheoremVerdict:
    tid = "thm-regularity"
    rep = classify(g)
    if not rep.at_least(EDGE_REGULAR):
        return _na(tid, f"not edge-regular (level {rep.level})")
    k, lam = rep.k, rep.lam
    gal, anti = ops.gallai(g), ops.anti_gallai(g)
    failures = _check_degree(gal.graph, 2 * (k - lam - 1), g.edges, "Gallai")
    failures += _check_degree(anti.graph, 2 * lam, g.edges, "anti-Gallai")
    return _result(tid, failures, params=_params(rep),
                   gallai_degree=2 * (k - lam - 1), anti_gallai_degree=2 * lam)


def _partition_check(g: Graph, derived: ops.DerivedGraph, tid: str, cross_ok, need_cross: bool):
    if not is_connected(g):
        return _na(tid, "not connected")
    comps = components(derived.graph)
    cls = {}
    for c, comp in enumerate(comps):
        for x in comp:
            cls[x] = c
    index = {e: i for i, e in enumerate(g.edges)}
    violations, cross = [], 0
    for w in range(g.n):
        for a, b in combinations(sorted(g.neighbors(w)), 2):
            i, j = index[tuple(sorted((w, a)))], index[tuple(sorted((w, b)))]
            if cls[i] == cls[j]:
                continue
            cross += 1
            if not cross_ok(g.has_edge(a, b)):
                violations.append((g.edges[i], g.edges[j]))
    disconnected = len(comps) >= 2
    partition_exists = disconnected and not violations and (cross > 0 or not need_cross)
    failures = []
    if disconnected and violations:
        e1, e2 = violations[0]
        failures.append(f"edges {_edge_name(e1)} and {_edge_name(e2)} lie in different "
                        f"components but violate the partition condition")
    if disconnected and need_cross and cross == 0:
        failures.append("components have no incident cross pair")
    if partition_exists != disconnected:
        failures.append(f"component partition exists={partition_exists} but disconnected={disconnected}")
    return _result(tid, failures, components=len(comps), cross_incident_pairs=cross,
                   partition_exists=partition_exists)


def verify_gallai_partition(g: Graph) -> TheoremVerdict:
    """Gallai graph disconnected iff the edges split into classes whose
    incident cross pairs all span triangles (checked on the component split)."""
    return _partition_check(g, ops.gallai(g), "thm-gallai-partition", lambda tri: tri, False)


def verify_antigallai_partition(g: Graph) -> TheoremVerdict:
    return _partition_check(g, ops.anti_gallai(g), "thm-antigallai-partition",
                            lambda tri: not tri, True)


# -- Gallai graphs of lambda = 0 and lambda = 1 SRGs ------------------------------

def verify_gallai_lambda0(g: Graph) -> TheoremVerdict:
    tid = "thm-gallai-lambda0"
    rep, reason = _srg_screen(g, lam={0})
    if reason:
        return _na(tid, reason, params=_params(rep))
    n, k, _, mu = rep.params
    gal = ops.gallai(g)
    grep = classify(gal.graph)
    failures = []
    if gal.graph != ops.line_graph(g).graph:
        failures.append("Gallai graph differs from the line graph of a triangle-free graph")
    if not is_connected(gal.graph):
        failures.append("Gallai graph is disconnected")
    failures += _check_params(grep, (n * k // 2, 2 * k - 2, k - 2), "Gallai graph")
    cycle_len = 5 if mu == 1 else 4
    condition, bad = _all_disjoint_on_cycle(g, cycle_len)
    srg = is_srg(grep)
    if srg != condition:
        pair = f"; pair {_edge_name(bad[0])}, {_edge_name(bad[1])} misses C{cycle_len}" if bad else ""
        failures.append(f"Gallai graph SRG={srg} but C{cycle_len} condition={condition}{pair}")
    if srg and grep.mu != (1 if mu == 1 else 2):
        failures.append(f"Gallai graph has mu={grep.mu}, expected {1 if mu == 1 else 2}")
    return _result(tid, failures, params=_params(rep), gallai_params=_params(grep),
                   cycle_length=cycle_len, cycle_condition=condition, gallai_srg=srg,
                   condition_counterexample=[list(bad[0]), list(bad[1])] if bad else None)


def verify_gallai_lambda1(g: Graph) -> TheoremVerdict:
    tid = "thm-gallai-lambda1"
    rep, reason = _srg_screen(g, lam={1})
    if reason:
        return _na(tid, reason, params=_params(rep))
    n, k, _, mu = rep.params
    grep = classify(ops.gallai(g).graph)
    failures = _check_params(grep, (n * k // 2, 2 * k - 4, k - 2), "Gallai graph")
    c4, bad = _all_disjoint_on_cycle(g, 4)
    predicted = mu > 1 and k == 4 and c4
    srg = is_srg(grep)
    if srg != predicted:
        failures.append(f"Gallai graph SRG={srg} but (mu>1, k=4, C4 condition)={predicted}")
    return _result(tid, failures, params=_params(rep), gallai_params=_params(grep),
                   c4_condition=c4, predicted_srg=predicted, gallai_srg=srg,
                   condition_counterexample=[list(bad[0]), list(bad[1])] if bad else None)


def verify_gallai_two_connected(g: Graph) -> TheoremVerdict:
    tid = "thm-gallai-2connected"
    rep, reason = _srg_screen(g, lam={0, 1})
    if reason:
        return _na(tid, reason, params=_params(rep))
    gal = ops.gallai(g)
    failures = []
    if not is_two_connected(gal.graph):
        cuts = articulation_points(gal.graph)
        failures.append(f"Gallai graph not 2-connected; cut vertices {cuts[:5]}" if cuts
                        else "Gallai graph disconnected or too small")
    return _result(tid, failures, params=_params(rep), gallai_order=gal.graph.n)


# -- anti-Gallai graphs of lambda = 2 SRGs with unique wheels ---------------------

def _unique_wheel_screen(g: Graph):
    rep, reason = _srg_screen(g, lam={2})
    if reason:
        return rep, reason
    for v in range(g.n):
        wheels = wheels_at_vertex(g, v)
        if len(wheels) != 1 or len(wheels[0]) != rep.k:
            return rep, f"vertex {v} is not the hub of exactly one wheel spanning its neighbourhood"
    return rep, None


def verify_antigallai_lambda2(g: Graph) -> TheoremVerdict:
    tid = "thm-antigallai-lambda2"
    rep, reason = _unique_wheel_screen(g)
    if reason:
        return _na(tid, reason, params=_params(rep))
    n, k = rep.n, rep.k
    anti = ops.anti_gallai(g).graph
    arep = classify(anti)
    failures = [] if is_connected(anti) else ["anti-Gallai graph is disconnected"]
    failures += _check_params(arep, (n * k // 2, 4, 1), "anti-Gallai graph")
    return _result(tid, failures, params=_params(rep), anti_gallai_params=_params(arep))


def hub_semi_total_embedding(g: Graph, v: int) -> Optional[list[int]]:
    """Anti-Gallai vertices (spokes around the rim, then rim edges) that induce
    the semi-total point graph of the wheel rim at hub ``v``; ``None`` if the
    induced subgraph differs under that labeling."""
    wheels = wheels_at_vertex(g, v)
    if len(wheels) != 1:
        return None
    rim = wheels[0]
    c = len(rim)
    anti = ops.anti_gallai(g)
    spokes = [anti.vertex_of((v, u)) for u in rim]
    rim_edges = [anti.vertex_of((rim[i], rim[(i + 1) % c])) for i in range(c)]
    chosen = spokes + rim_edges
    # relabel: spoke i -> i, rim edge i -> c + position of that edge in cycle(c).edges
    from .generators import cycle
    cyc = cycle(c)
    pos = {e: i for i, e in enumerate(cyc.edges)}
    target = {}
    for i, x in enumerate(spokes):
        target[x] = i
    for i, x in enumerate(rim_edges):
        target[x] = c + pos[tuple(sorted((i, (i + 1) % c)))]
    sub = induced_subgraph(anti.graph, chosen)
    order = sorted(chosen)
    relabeled = Graph(2 * c, [(target[order[a]], target[order[b]]) for a, b in sub.edges])
    return chosen if relabeled == ops.semi_total_point(cyc) else None


def verify_spec_band_interlacing(g: Graph) -> TheoremVerdict:
    tid = "thm-spec-band-interlace"
    rep, reason = _unique_wheel_screen(g)
    if reason:
        return _na(tid, reason, params=_params(rep))
    spec = spectral.eigenvalues(ops.anti_gallai(g).graph)
    rck = spectral.rcn_spectrum(rep.k)
    failures = []
    if not spectral.spectrum_in_band(spec, 4):
        failures.append(f"anti-Gallai eigenvalue outside [-4, 4]: {spec.values[0]:.12g} / {spec.values[-1]:.12g}")
    if abs(spec.values[0] - 4) > spectral.COMPARE_TOL:
        failures.append(f"largest anti-Gallai eigenvalue {spec.values[0]:.12g} is not 4")
    if not spectral.interlaces(rck, spec):
        failures.append(f"R(C_{rep.k}) spectrum does not interlace the anti-Gallai spectrum")
    return _result(tid, failures, params=_params(rep), anti_gallai_order=spec.n,
                   largest=round(spec.values[0], 12), smallest=round(spec.values[-1], 12),
                   rim_length=rep.k,
                   induced_semi_total_at_vertex_0=hub_semi_total_embedding(g, 0) is not None)


# -- preliminary structure lemmas ---------------------------------------------

def _part(tid, applicable: bool, reason: str, failures: list):
    if not applicable:
        return _na(tid, reason)
    return _result(tid, failures)


def _basics_parts(g: Graph, rep: RegularityReport) -> list:
    n, k, lam, mu = rep.params
    base = "lemma-srg-basics"
    parts = [_part(f"{base}.1", True, "", [] if mu >= 1 else [f"mu = {mu}"])]

    fails = []
    if mu > 1:
        for x, y in combinations(range(n), 2):
            if not g.has_edge(x, y) and not cycle_through(g, 4, vertices=[x, y]):
                fails.append(f"non-adjacent {x}, {y} on no C4")
                break
    parts.append(_part(f"{base}.2", mu > 1, "mu = 1", fails))

    fails = []
    for u, v in g.edges:
        for w in range(n):
            if w in (u, v):
                continue
            if g.neighbors(w) & g.neighbors(u) & g.neighbors(v):
                continue
            if not any(cycle_through(g, L, edges=[(u, v)], vertices=[w]) for L in (3, 4, 5)):
                fails.append(f"edge {u}-{v} and vertex {w}: no common neighbour, no cycle of length <= 5")
                break
        if fails:
            break
    parts.append(_part(f"{base}.3", True, "", fails))

    fails = []
    for e1, e2 in combinations(g.edges, 2):
        ends = set(e1) | set(e2)
        common = set(range(n))
        for x in ends:
            common &= g.neighbors(x)
        if common:
            continue
        if not any(cycle_through(g, L, edges=[e1, e2]) for L in (3, 4, 5, 6)):
            fails.append(f"edges {_edge_name(e1)}, {_edge_name(e2)}: no common neighbour, no cycle of length <= 6")
            break
    parts.append(_part(f"{base}.4", True, "", fails))

    fails = [f"induced {p} present" for p in ("diamond", "C4") if has_forbidden_induced(g, p)]
    parts.append(_part(f"{base}.5", mu == 1, f"mu = {mu}", fails))

    fails = [] if is_two_connected(g) else [f"cut vertices {articulation_points(g)}"]
    parts.append(_part(f"{base}.6", True, "", fails))

    # a diamond or K4 subgraph exists iff one is induced (both come from an
    # edge with two common neighbours), so the induced check suffices here
    fails = [f"{p} subgraph present" for p in ("diamond", "K4") if has_forbidden_induced(g, p)]
    parts.append(_part(f"{base}.7", lam <= 1, f"lambda = {lam}", fails))
    return parts


def verify_srg_basics(g: Graph) -> TheoremVerdict:
    """Seven elementary facts about connected SRGs; per-part verdicts in ``details['parts']``."""
    tid = "lemma-srg-basics"
    rep, reason = _srg_screen(g)
    if reason:
        return _na(tid, reason, params=_params(rep))
    parts = _basics_parts(g, rep)
    failures = [f"{p.theorem_id}: {p.witness}" for p in parts if p.failed]
    return _result(tid, failures, params=_params(rep), parts=[p.to_dict() for p in parts])


def verify_fan_and_wheel_lemmas(g: Graph) -> TheoremVerdict:
    """lambda = 1: every closed neighbourhood is a fan. lambda >= 2: every vertex hubs a wheel."""
    tid = "lemma-fan-wheel"
    rep, reason = _srg_screen(g)
    if not reason and rep.lam == 0:
        reason = "lambda = 0"
    if reason:
        return _na(tid, reason, params=_params(rep))
    failures = []
    if rep.lam == 1:
        bad = [v for v in range(g.n) if not neighborhood_is_fan(g, v)]
        if bad:
            failures.append(f"vertex {bad[0]} neighbourhood is not a {rep.k // 2}-fan")
        return _result(tid, failures, params=_params(rep), lemma="fan", fan_size=rep.k // 2)
    rims = []
    for v in range(g.n):
        rim = find_wheel(g, v)
        if rim is None:
            failures.append(f"vertex {v} is the hub of no wheel")
            break
        rims.append(len(rim))
    return _result(tid, failures, params=_params(rep), lemma="wheel",
                   rim_lengths=sorted(set(rims)))


THEOREMS: dict[str, Callable[[Graph], TheoremVerdict]] = {
    "thm-regularity": verify_regularity_theorem,
    "thm-gallai-partition": verify_gallai_partition,
    "thm-antigallai-partition": verify_antigallai_partition,
    "thm-gallai-lambda0": verify_gallai_lambda0,
    "thm-gallai-lambda1": verify_gallai_lambda1,
    "thm-gallai-2connected": verify_gallai_two_connected,
    "thm-antigallai-lambda2": verify_antigallai_lambda2,
    "thm-spec-band-interlace": verify_spec_band_interlacing,
    "lemma-srg-basics": verify_srg_basics,
    "lemma-fan-wheel": verify_fan_and_wheel_lemmas,
}


def verify(g: Graph, theorem_id: str = "all") -> list[TheoremVerdict]:
    if theorem_id == "all":
        return [fn(g) for fn in THEOREMS.values()]
    try:
        return [THEOREMS[theorem_id](g)]
    except KeyError:
        from .errors import InputError
        raise InputError(f"unknown theorem {theorem_id!r}; choose from all, {', '.join(THEOREMS)}") from None
