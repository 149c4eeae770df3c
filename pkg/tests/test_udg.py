import numpy as np
import pytest

from cdsbench.udg import (
    ConnectivityError,
    UdgSpec,
    UnitDiskGraph,
    all_pairs_hop_dist,
    build_adjacency,
    generate_udg,
    is_connected,
)
from helpers import complete_graph, cycle_graph, path_graph, small_random_udg
from oracles import floyd_warshall, union_find_connected


def test_spec_validation():
    with pytest.raises(ValueError):
        UdgSpec(0, 10.0)
    with pytest.raises(ValueError):
        UdgSpec(5, 0.0)
    with pytest.raises(ValueError):
        UdgSpec(5, 10.0, area_min=100.0, area_max=20.0)


def test_single_node_graph():
    g = generate_udg(UdgSpec(1, 10.0, seed=123))
    assert g.n == 1
    assert g.edge_count == 0
    assert is_connected(g.adjacency)


def test_range_beyond_area_diagonal_gives_complete_graph():
    # area [20, 500]: diagonal ~678.8 < 700, so every pair is adjacent
    g = generate_udg(UdgSpec(5, 700.0, seed=42))
    assert g.edge_count == 10


def test_infeasible_point_raises_and_matches_monte_carlo_oracle():
    # oracle: no connected draw appears among 300 independent samples
    rng = np.random.default_rng(99)
    connected_draws = 0
    for _ in range(300):
        pts = rng.uniform(20, 500, (100, 2))
        d2 = ((pts[:, None, :] - pts[None, :, :]) ** 2).sum(-1)
        adj = [list(np.flatnonzero((row <= 100.0) & (row > 0))) for row in d2]
        connected_draws += union_find_connected(adj)
    assert connected_draws == 0
    with pytest.raises(ConnectivityError):
        generate_udg(UdgSpec(100, 10.0, seed=7), max_attempts=300)


def test_adjacency_boundary_inclusion():
    assert build_adjacency([(0, 0), (0, 5)], 5.0) == ((1,), (0,))
    assert build_adjacency([(0, 0), (0, 5.001)], 5.0) == ((), ())


def test_adjacency_triangle_symmetry():
    coords = [(0.0, 0.0), (1.0, 0.0), (0.5, 0.8660254)]
    adj = build_adjacency(coords, 1.0)
    assert adj == ((1, 2), (0, 2), (0, 1))


def test_hop_dist_path_and_identity():
    g = path_graph(4)
    d = all_pairs_hop_dist(g)
    assert d[0, 3] == 3
    assert d[1, 2] == 1
    assert all(d[i, i] == 0 for i in range(4))


def test_hop_dist_cycle_vs_floyd_warshall():
    g = cycle_graph(6)
    d = all_pairs_hop_dist(g)
    assert d[0, 3] == 3
    assert d[0, 2] == 2
    fw = floyd_warshall(g.adjacency)
    assert all(d[a, b] == fw[a][b] for a in range(6) for b in range(6))


@pytest.mark.parametrize("seed", range(10))
def test_hop_dist_random_vs_floyd_warshall(seed):
    g = small_random_udg(seed, n=4 + seed)
    d = all_pairs_hop_dist(g)
    fw = floyd_warshall(g.adjacency)
    assert all(d[a, b] == fw[a][b] for a in range(g.n) for b in range(g.n))


def test_hop_matrix_symmetry_and_triangle_inequality():
    g = small_random_udg(3, n=12)
    d = g.hop_matrix()
    assert (d == d.T).all()
    assert (np.diag(d) == 0).all()
    n = g.n
    for a in range(n):
        for b in range(n):
            for c in range(n):
                assert d[a, b] <= d[a, c] + d[c, b]


def test_is_connected_trivial_cases():
    assert is_connected(complete_graph(5).adjacency)
    assert not is_connected(((), ()))


@pytest.mark.parametrize("seed", range(100))
def test_is_connected_agrees_with_union_find(seed):
    # raw random point sets (not rejection-sampled), so both outcomes occur
    rng = np.random.default_rng(seed)
    pts = rng.uniform(0, 200, (20, 2))
    adj = build_adjacency([tuple(p) for p in pts], 40.0)
    assert is_connected(adj) == union_find_connected(adj)


def test_generation_determinism():
    spec = UdgSpec(15, 4.0, area_min=0.0, area_max=10.0, seed=2718)
    g1 = generate_udg(spec)
    g2 = generate_udg(spec)
    assert g1.coords == g2.coords
    assert g1.adjacency == g2.adjacency


def test_edge_rule_holds_on_generated_graph():
    g = small_random_udg(11, n=15)
    r2 = g.range * g.range
    for a in range(g.n):
        for b in range(a + 1, g.n):
            dx = g.coords[a][0] - g.coords[b][0]
            dy = g.coords[a][1] - g.coords[b][1]
            assert (dx * dx + dy * dy <= r2) == (b in g.adjacency[a])


def test_json_round_trip():
    g = small_random_udg(5, n=8)
    g2 = UnitDiskGraph.from_json(g.to_json())
    assert g2.coords == g.coords
    assert g2.range == g.range
    assert g2.adjacency == g.adjacency
