"""Unit disk graph model: generation, adjacency, connectivity, hop distances.

A unit disk graph places nodes in the plane and joins every pair whose
Euclidean distance is at most a common transmission range (closed disk:
distance exactly equal to the range is adjacent).  Distances are compared
as squared values so the boundary case does not depend on square-root
rounding.

Random generation rejection-samples until a connected graph appears; a
draw whose graph is disconnected is discarded and the next draw continues
from the same PRNG stream, so results are fully determined by the seed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .rng import Xoshiro256StarStar

DEFAULT_AREA_MIN = 20.0
DEFAULT_AREA_MAX = 500.0
DEFAULT_MAX_ATTEMPTS = 10_000


class ConnectivityError(RuntimeError):
    """Raised when no connected draw appears within the retry budget."""


@dataclass(frozen=True)
class UdgSpec:
    """Parameters for one random unit disk graph instance."""

    node_count: int
    transmission_range: float
    area_min: float = DEFAULT_AREA_MIN
    area_max: float = DEFAULT_AREA_MAX
    seed: int = 0

    def __post_init__(self) -> None:
        if self.node_count < 1:
            raise ValueError("node_count must be >= 1")
        if self.transmission_range <= 0:
            raise ValueError("transmission_range must be > 0")
        if not self.area_min < self.area_max:
            raise ValueError("area_min must be < area_max")


class UnitDiskGraph:
    """Immutable geometric graph: coordinates, range, derived adjacency."""

    def __init__(self, coords, transmission_range: float, graph_id: str = ""):
        self.coords: tuple[tuple[float, float], ...] = tuple(
            (float(x), float(y)) for x, y in coords
        )
        self.range = float(transmission_range)
        self.graph_id = graph_id
        self.adjacency: tuple[tuple[int, ...], ...] = build_adjacency(
            self.coords, self.range
        )
        self._adj_matrix: np.ndarray | None = None
        self._hop_matrix: np.ndarray | None = None

    @property
    def n(self) -> int:
        return len(self.coords)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def adjacency_matrix(self) -> np.ndarray:
        """Boolean n x n adjacency matrix (cached)."""
        if self._adj_matrix is None:
            m = np.zeros((self.n, self.n), dtype=bool)
            for u, nbrs in enumerate(self.adjacency):
                for v in nbrs:
                    m[u, v] = True
            m.setflags(write=False)
            self._adj_matrix = m
        return self._adj_matrix

    def hop_matrix(self) -> np.ndarray:
        """All-pairs hop distance matrix (cached)."""
        if self._hop_matrix is None:
            m = all_pairs_hop_dist(self)
            m.setflags(write=False)
            self._hop_matrix = m
        return self._hop_matrix

    def to_json(self) -> str:
        return json.dumps(
            {"range": self.range, "coords": [list(c) for c in self.coords]}
        )

    @classmethod
    def from_json(cls, text: str) -> "UnitDiskGraph":
        data = json.loads(text)
        return cls(data["coords"], data["range"])


def build_adjacency(coords, transmission_range: float) -> tuple[tuple[int, ...], ...]:
    """Symmetric neighbor lists under the closed-disk rule.

    O(n^2) pairwise check; fine at benchmark scale (n <= a few hundred).
    """
    if len(coords) == 0:
        raise ValueError("coords must be non-empty")
    if transmission_range <= 0:
        raise ValueError("transmission_range must be > 0")
    pts = np.asarray(coords, dtype=float)
    adj = _adjacency_matrix_from_points(pts, transmission_range)
    return tuple(tuple(int(v) for v in np.flatnonzero(row)) for row in adj)


def _adjacency_matrix_from_points(pts: np.ndarray, rng: float) -> np.ndarray:
    diff = pts[:, None, :] - pts[None, :, :]
    dist2 = (diff * diff).sum(axis=-1)
    adj = dist2 <= rng * rng
    np.fill_diagonal(adj, False)
    return adj


def _connected_matrix(adj: np.ndarray) -> bool:
    n = adj.shape[0]
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    frontier = seen.copy()
    while frontier.any():
        nxt = adj[frontier].any(axis=0) & ~seen
        seen |= nxt
        frontier = nxt
    return bool(seen.all())


def is_connected(adjacency) -> bool:
    """True iff a traversal from node 0 reaches every node."""
    n = len(adjacency)
    if n == 0:
        return True
    seen = [False] * n
    seen[0] = True
    stack = [0]
    while stack:
        u = stack.pop()
        for v in adjacency[u]:
            if not seen[v]:
                seen[v] = True
                stack.append(v)
    return all(seen)


def all_pairs_hop_dist(graph: UnitDiskGraph) -> np.ndarray:
    """All-pairs shortest hop counts via simultaneous BFS frontier expansion.

    Requires a connected graph; every entry is finite.
    """
    adj = graph.adjacency_matrix()
    n = graph.n
    dist = np.full((n, n), -1, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    reached = np.eye(n, dtype=bool)
    frontier = reached.copy()
    hops = 0
    while frontier.any():
        hops += 1
        nxt = (frontier.astype(np.uint8) @ adj.astype(np.uint8)) > 0
        nxt &= ~reached
        dist[nxt] = hops
        reached |= nxt
        frontier = nxt
    if (dist < 0).any():
        raise ValueError("graph is not connected")
    return dist


def generate_udg(
    spec: UdgSpec, max_attempts: int = DEFAULT_MAX_ATTEMPTS, graph_id: str = ""
) -> UnitDiskGraph:
    """Draw a connected unit disk graph by rejection sampling.

    Coordinates are drawn uniformly from [area_min, area_max]^2, x then y
    per node, node order ascending.  Disconnected draws are rejected and
    the next draw continues the PRNG stream, so the result is a pure
    function of the spec.
    """
    prng = Xoshiro256StarStar(spec.seed)
    n = spec.node_count
    r = spec.transmission_range
    for _ in range(max_attempts):
        pts = np.empty((n, 2), dtype=float)
        for i in range(n):
            pts[i, 0] = prng.uniform(spec.area_min, spec.area_max)
            pts[i, 1] = prng.uniform(spec.area_min, spec.area_max)
        adj = _adjacency_matrix_from_points(pts, r)
        if _connected_matrix(adj):
            return UnitDiskGraph(
                [(pts[i, 0], pts[i, 1]) for i in range(n)], r, graph_id=graph_id
            )
    raise ConnectivityError(
        f"connectivity unattainable: no connected draw in {max_attempts} attempts "
        f"for n={n}, range={r}, area=[{spec.area_min}, {spec.area_max}]"
    )
