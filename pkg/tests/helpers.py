"""Fixed geometric test graphs and small random-instance generators."""

from __future__ import annotations

import math

from cdsbench.udg import UdgSpec, UnitDiskGraph, generate_udg


def path_graph(n: int) -> UnitDiskGraph:
    return UnitDiskGraph([(float(i), 0.0) for i in range(n)], 1.0)


def cycle_graph(n: int) -> UnitDiskGraph:
    # regular n-gon with unit side: only consecutive vertices are in range
    radius = 1.0 / (2.0 * math.sin(math.pi / n))
    coords = [
        (radius * math.cos(2 * math.pi * i / n), radius * math.sin(2 * math.pi * i / n))
        for i in range(n)
    ]
    return UnitDiskGraph(coords, 1.0000001)


def star_graph(leaves: int = 4) -> UnitDiskGraph:
    # center plus leaves at distance 1; leaf-leaf distance > 1
    coords = [(0.0, 0.0)]
    for i in range(leaves):
        angle = 2 * math.pi * i / leaves
        coords.append((math.cos(angle), math.sin(angle)))
    return UnitDiskGraph(coords, 1.0000001)


def complete_graph(n: int) -> UnitDiskGraph:
    coords = [(0.01 * i, 0.0) for i in range(n)]
    return UnitDiskGraph(coords, 1.0)


def grid_graph(rows: int = 3, cols: int = 3) -> UnitDiskGraph:
    # unit spacing, range 1: rook adjacency, no diagonals (sqrt(2) > 1)
    coords = [(float(c), float(r)) for r in range(rows) for c in range(cols)]
    return UnitDiskGraph(coords, 1.0)


def small_random_udg(seed: int, n: int, rng: float = 4.0) -> UnitDiskGraph:
    """Connected random UDG on a tiny area (feasible for n in 3..15)."""
    spec = UdgSpec(n, rng, area_min=0.0, area_max=10.0, seed=seed)
    return generate_udg(spec)
