"""Connected dominating set construction schemes and validity checks.

All six schemes share the same skeleton: build a maximal independent set,
connect it greedily into a CDS, then apply a scheme-specific repair or use
a scheme-specific selection ranking.  Each scheme is a pure function of
(graph, params): all tie-breaks are total (ratio, then degree, then lowest
index), so repeated runs are byte-identical.

Scheme identifiers (fixed external strings):
    GREEDY        plain MIS + greedy Steiner connectors (size baseline)
    DIAMETER      backbone diameter bounded by graph diameter + 2
    ALPHA_MOC     intermediate-node count per pair at most alpha times optimal
    COLLAB_COVER  MIS picked by highest effective-cover ratio
    GUARANTEED    per-pair backbone distance at most 7x shortest
    RESILIENT     per-pair bound 5x, plus cut-vertex bridging augmentation
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

import numpy as np

from .udg import UnitDiskGraph

SCHEME_GREEDY = "GREEDY"
SCHEME_DIAMETER = "DIAMETER"
SCHEME_ALPHA_MOC = "ALPHA_MOC"
SCHEME_COLLAB_COVER = "COLLAB_COVER"
SCHEME_GUARANTEED = "GUARANTEED"
SCHEME_RESILIENT = "RESILIENT"

ALL_SCHEMES = (
    SCHEME_GREEDY,
    SCHEME_DIAMETER,
    SCHEME_ALPHA_MOC,
    SCHEME_COLLAB_COVER,
    SCHEME_GUARANTEED,
    SCHEME_RESILIENT,
)

DEFAULT_ALPHA = 5.0

# Slack for comparing integer backbone distances against rational bounds.
_EPS = 1e-9


@dataclass(frozen=True)
class AlphaMocParams:
    """Multiplier on per-pair intermediate-node counts (at least 1)."""

    alpha: float = DEFAULT_ALPHA

    def __post_init__(self) -> None:
        if self.alpha < 1:
            raise ValueError("alpha must be >= 1")


@dataclass(frozen=True)
class Backbone:
    """A candidate CDS together with the scheme that produced it."""

    scheme: str
    nodes: frozenset[int]
    graph_id: str = ""

    def to_json(self) -> str:
        return json.dumps({"scheme": self.scheme, "nodes": sorted(self.nodes)})

    @classmethod
    def from_json(cls, text: str) -> "Backbone":
        data = json.loads(text)
        return cls(scheme=data["scheme"], nodes=frozenset(data["nodes"]))


def verify_cds(graph: UnitDiskGraph, nodes: Iterable[int]) -> bool:
    """True iff `nodes` dominate the graph and induce a connected subgraph."""
    dset = set(nodes)
    if not dset or not dset <= set(range(graph.n)):
        return False
    for v in range(graph.n):
        if v in dset:
            continue
        if not any(u in dset for u in graph.adjacency[v]):
            return False
    return _induced_connected(graph, dset)


def _induced_connected(graph: UnitDiskGraph, dset: set[int]) -> bool:
    start = next(iter(dset))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in graph.adjacency[u]:
            if v in dset and v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == len(dset)


def restricted_hop_matrix(graph: UnitDiskGraph, dset: Iterable[int]) -> np.ndarray:
    """All-pairs backbone distance d_D: paths whose interior lies in D.

    The first hop from each source is unrestricted (endpoints need not be
    in D, and a direct edge always counts); after that the search may only
    expand from vertices in D.  Unreachable pairs are -1 (cannot happen
    when D is a valid CDS).
    """
    adj = graph.adjacency_matrix()
    n = graph.n
    in_d = np.zeros(n, dtype=bool)
    in_d[list(dset)] = True
    dist = np.full((n, n), -1, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    reached = np.eye(n, dtype=bool)
    frontier = adj & ~reached
    dist[frontier] = 1
    reached |= frontier
    hops = 1
    adj_u8 = adj.astype(np.uint8)
    while True:
        expandable = frontier & in_d[None, :]
        if not expandable.any():
            break
        hops += 1
        nxt = (expandable.astype(np.uint8) @ adj_u8) > 0
        nxt &= ~reached
        if not nxt.any():
            break
        dist[nxt] = hops
        reached |= nxt
        frontier = nxt
    return dist


def backbone_hop_dist(graph: UnitDiskGraph, dset: Iterable[int], a: int, b: int) -> int:
    """Shortest a-b path length whose intermediate vertices all lie in D."""
    return int(restricted_hop_matrix(graph, dset)[a, b])


def build_mis(graph: UnitDiskGraph, ranking: list[int] | None = None) -> set[int]:
    """Greedy maximal independent set following a total node order.

    Default ranking: degree descending, index ascending tie-break.
    """
    if ranking is None:
        deg = [len(graph.adjacency[v]) for v in range(graph.n)]
        ranking = sorted(range(graph.n), key=lambda v: (-deg[v], v))
    selected: set[int] = set()
    blocked: set[int] = set()
    for v in ranking:
        if v in blocked:
            continue
        selected.add(v)
        blocked.add(v)
        blocked.update(graph.adjacency[v])
    return selected


def _components(graph: UnitDiskGraph, dset: set[int]) -> list[set[int]]:
    comps = []
    todo = set(dset)
    while todo:
        start = min(todo)
        comp = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for v in graph.adjacency[u]:
                if v in dset and v not in comp:
                    comp.add(v)
                    stack.append(v)
        comps.append(comp)
        todo -= comp
    return comps


def connect_mis(graph: UnitDiskGraph, mis: Iterable[int]) -> set[int]:
    """Add greedy Steiner connectors until the set induces one component.

    Each round adds the non-member adjacent to the most distinct
    components (ties broken by lowest index).
    """
    dset = set(mis)
    while True:
        comps = _components(graph, dset)
        if len(comps) <= 1:
            return dset
        comp_of = {}
        for ci, comp in enumerate(comps):
            for v in comp:
                comp_of[v] = ci
        best_v, best_count = -1, 0
        for v in range(graph.n):
            if v in dset:
                continue
            touched = {comp_of[u] for u in graph.adjacency[v] if u in dset}
            if len(touched) > best_count:
                best_v, best_count = v, len(touched)
        if best_v < 0:
            raise ValueError("input set is not dominating; cannot connect")
        dset.add(best_v)


def _lex_shortest_path(graph: UnitDiskGraph, a: int, b: int) -> list[int]:
    """Lexicographically smallest shortest a-b path in the original graph."""
    dist_to_b = graph.hop_matrix()[b]
    path = [a]
    cur = a
    while cur != b:
        cur = min(v for v in graph.adjacency[cur] if dist_to_b[v] == dist_to_b[cur] - 1)
        path.append(cur)
    return path


def stretch_repair(
    graph: UnitDiskGraph,
    dset: Iterable[int],
    bound_fn: Callable[[int], float],
) -> set[int]:
    """Grow D until every pair satisfies d_D(a,b) <= bound_fn(d(a,b)).

    Repair loop: among violating pairs take the one with the largest ratio
    d_D/d (ties by lowest pair index), splice in the interior of the
    lexicographically smallest shortest path, recheck.  Terminates because
    D grows monotonically and D = V meets any bound_fn >= identity.
    """
    dset = set(dset)
    hop = graph.hop_matrix()
    n = graph.n
    bounds = np.empty((n, n), dtype=float)
    for d in np.unique(hop):
        bounds[hop == d] = bound_fn(int(d))
    iu = np.triu_indices(n, k=1)
    while True:
        dd = restricted_hop_matrix(graph, dset)
        viol = dd[iu] > bounds[iu] + _EPS
        if not viol.any():
            return dset
        ratios = dd[iu][viol] / hop[iu][viol]
        best = ratios.max()
        idxs = np.flatnonzero(viol)
        candidates = [
            (int(iu[0][i]), int(iu[1][i]))
            for i, r in zip(idxs, ratios)
            if r == best
        ]
        a, b = min(candidates)
        dset.update(_lex_shortest_path(graph, a, b)[1:-1])


def cds_greedy(graph: UnitDiskGraph) -> Backbone:
    """Baseline: MIS + greedy connectors, no routing constraint."""
    nodes = connect_mis(graph, build_mis(graph))
    return Backbone(SCHEME_GREEDY, frozenset(nodes), graph.graph_id)


def cds_diameter(graph: UnitDiskGraph) -> Backbone:
    """Greedy CDS repaired until backbone diameter <= graph diameter + 2."""
    dset = connect_mis(graph, build_mis(graph))
    hop = graph.hop_matrix()
    g_diam = int(hop.max())
    while True:
        dd = restricted_hop_matrix(graph, dset)
        dn = sorted(dset)
        sub = dd[np.ix_(dn, dn)]
        d_diam = int(sub.max())
        if d_diam <= g_diam + 2:
            break
        ai, bi = min((int(i), int(j)) for i, j in np.argwhere(sub == d_diam))
        a, b = dn[ai], dn[bi]
        before = len(dset)
        dset.update(_lex_shortest_path(graph, a, b)[1:-1])
        if len(dset) == before:
            break
    return Backbone(SCHEME_DIAMETER, frozenset(dset), graph.graph_id)


def _alpha_bound(alpha: float) -> Callable[[int], float]:
    # Bound stated on intermediate-node counts m = max(d - 1, 0):
    # m_D <= alpha * m for m >= 1, and m_D <= alpha - 1 for adjacent pairs
    # (always satisfiable via the direct edge).  Rewritten as a cap on d_D.
    def bound(d: int) -> float:
        if d <= 1:
            return float(alpha)
        return alpha * (d - 1) + 1

    return bound


def cds_alpha_moc(graph: UnitDiskGraph, params: AlphaMocParams | None = None) -> Backbone:
    """Greedy CDS repaired to the alpha-bounded intermediate-count contract."""
    params = params or AlphaMocParams()
    dset = connect_mis(graph, build_mis(graph))
    dset = stretch_repair(graph, dset, _alpha_bound(params.alpha))
    return Backbone(SCHEME_ALPHA_MOC, frozenset(dset), graph.graph_id)


def cds_collab_cover(graph: UnitDiskGraph) -> Backbone:
    """MIS chosen by highest effective cover, then greedy connectors.

    Effective cover of a candidate = fraction of its closed one-hop
    neighborhood not yet dominated; recomputed after every selection.
    Ties by degree descending, then lowest index.
    """
    n = graph.n
    closed = [frozenset(graph.adjacency[v]) | {v} for v in range(n)]
    deg = [len(graph.adjacency[v]) for v in range(n)]
    selected: set[int] = set()
    blocked: set[int] = set()
    dominated: set[int] = set()
    while True:
        candidates = [v for v in range(n) if v not in blocked]
        if not candidates:
            break
        best = max(
            candidates,
            key=lambda v: (len(closed[v] - dominated) / len(closed[v]), deg[v], -v),
        )
        selected.add(best)
        blocked.add(best)
        blocked.update(graph.adjacency[best])
        dominated.update(closed[best])
    nodes = connect_mis(graph, selected)
    return Backbone(SCHEME_COLLAB_COVER, frozenset(nodes), graph.graph_id)


def cds_guaranteed(graph: UnitDiskGraph) -> Backbone:
    """Greedy CDS repaired to the 7x per-pair stretch contract."""
    dset = connect_mis(graph, build_mis(graph))
    dset = stretch_repair(graph, dset, lambda d: 7.0 * d)
    return Backbone(SCHEME_GUARANTEED, frozenset(dset), graph.graph_id)


def articulation_points(graph: UnitDiskGraph, dset: Iterable[int]) -> set[int]:
    """Cut vertices of the subgraph induced by `dset` (Hopcroft-Tarjan)."""
    dset = set(dset)
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    arts: set[int] = set()
    counter = 0
    for root in sorted(dset):
        if root in disc:
            continue
        # iterative DFS with child counting at the root
        stack = [(root, None, iter(sorted(v for v in graph.adjacency[root] if v in dset)))]
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for v in it:
                if v == parent:
                    continue
                if v in disc:
                    low[u] = min(low[u], disc[v])
                    continue
                disc[v] = low[v] = counter
                counter += 1
                if u == root:
                    root_children += 1
                stack.append(
                    (v, u, iter(sorted(w for w in graph.adjacency[v] if w in dset)))
                )
                advanced = True
                break
            if not advanced:
                stack.pop()
                if parent is not None:
                    low[parent] = min(low[parent], low[u])
                    if parent != root and low[u] >= disc[parent]:
                        arts.add(parent)
        if root_children >= 2:
            arts.add(root)
    return arts


def cds_resilient(graph: UnitDiskGraph) -> Backbone:
    """5x-stretch repair plus bridging of backbone cut vertices.

    After the stretch repair, every cut vertex v of the induced backbone is
    examined in ascending order; if some outside node is adjacent to at
    least two components of D - v, the lowest-index such node is added.
    Additions only shrink backbone distances, so the 5x audit still holds.
    """
    dset = connect_mis(graph, build_mis(graph))
    dset = stretch_repair(graph, dset, lambda d: 5.0 * d)
    for v in sorted(articulation_points(graph, dset)):
        sides = _components(graph, dset - {v})
        if len(sides) < 2:
            continue
        bridgers = []
        for u in range(graph.n):
            if u in dset:
                continue
            touched = sum(1 for side in sides if any(w in side for w in graph.adjacency[u]))
            if touched >= 2:
                bridgers.append(u)
        if bridgers:
            dset.add(min(bridgers))
    return Backbone(SCHEME_RESILIENT, frozenset(dset), graph.graph_id)


def min_cds_oracle(graph: UnitDiskGraph, size_cap: int = 12) -> set[int]:
    """Minimum connected dominating set by exhaustive subset search.

    Subsets are tried in increasing size, lexicographic order within a
    size; intended as ground truth for small instances only.
    """
    n = graph.n
    if n > size_cap:
        raise ValueError(f"instance too large for exhaustive search (n={n} > {size_cap})")
    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            if verify_cds(graph, subset):
                return set(subset)
    raise AssertionError("unreachable: V itself is a CDS of a connected graph")


def build_scheme(graph: UnitDiskGraph, scheme: str, alpha: float = DEFAULT_ALPHA) -> Backbone:
    """Dispatch a scheme identifier to its constructor."""
    if scheme == SCHEME_GREEDY:
        return cds_greedy(graph)
    if scheme == SCHEME_DIAMETER:
        return cds_diameter(graph)
    if scheme == SCHEME_ALPHA_MOC:
        return cds_alpha_moc(graph, AlphaMocParams(alpha))
    if scheme == SCHEME_COLLAB_COVER:
        return cds_collab_cover(graph)
    if scheme == SCHEME_GUARANTEED:
        return cds_guaranteed(graph)
    if scheme == SCHEME_RESILIENT:
        return cds_resilient(graph)
    raise ValueError(f"unknown scheme: {scheme}")
