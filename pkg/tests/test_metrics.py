import math

import pytest

from cdsbench.backbone import ALL_SCHEMES, Backbone, build_scheme, cds_greedy, verify_cds
from cdsbench.metrics import (
    abpl,
    arpl,
    backbone_diameter,
    cds_size,
    full_report,
    max_stretch,
    mrpl,
)
from cdsbench.udg import all_pairs_hop_dist
from helpers import (
    complete_graph,
    cycle_graph,
    grid_graph,
    path_graph,
    small_random_udg,
    star_graph,
)
from oracles import brute_metrics


def test_cds_size_is_cardinality():
    assert cds_size(Backbone("GREEDY", frozenset({1, 5, 9}))) == 3
    assert cds_size(cds_greedy(complete_graph(5))) == 1


def test_diameter_singleton_is_zero():
    assert backbone_diameter(complete_graph(5), {0}) == 0


def test_diameter_path_pair():
    assert backbone_diameter(path_graph(4), {1, 2}) == 1


def test_abpl_trivial_cases():
    assert abpl(complete_graph(5), {0}) == 0.0
    assert abpl(path_graph(4), {1, 2}) == 1.0


def test_abpl_cycle_enumeration():
    # C6 with D = 4 consecutive nodes: pair distances 1,2,3,1,2,1 -> 10/6
    g = cycle_graph(6)
    dset = {0, 1, 2, 3}
    assert verify_cds(g, dset)
    assert math.isclose(abpl(g, dset), 10 / 6)


def test_mrpl_trivial_cases():
    assert mrpl(complete_graph(5), {0}) == 1
    assert mrpl(path_graph(4), {1, 2}) == 3


def test_arpl_complete_and_path():
    assert arpl(complete_graph(5), {0}) == 1.0
    # P4, D={1,2}: pair distances {1,2,3,1,2,1} -> 10/6
    assert math.isclose(arpl(path_graph(4), {1, 2}), 10 / 6)


def test_max_stretch_full_backbone_is_one():
    g = small_random_udg(9, n=10)
    assert max_stretch(g, set(range(g.n))) == 1.0
    assert max_stretch(complete_graph(5), {0}) == 1.0


def test_full_backbone_mrpl_equals_graph_diameter():
    g = small_random_udg(14, n=12)
    full = set(range(g.n))
    assert mrpl(g, full) == all_pairs_hop_dist(g).max()
    assert max_stretch(g, full) == 1.0


@pytest.mark.parametrize("seed", range(12))
def test_metric_values_match_enumeration_oracle(seed):
    g = small_random_udg(seed + 900, n=5 + (seed % 4))
    dset = cds_greedy(g).nodes
    o_diam, o_abpl, o_mrpl, o_arpl, o_stretch = brute_metrics(g.adjacency, dset)
    assert backbone_diameter(g, dset) == o_diam
    assert math.isclose(abpl(g, dset), o_abpl, abs_tol=1e-9)
    assert mrpl(g, dset) == o_mrpl
    assert math.isclose(arpl(g, dset), o_arpl, abs_tol=1e-9)
    assert math.isclose(max_stretch(g, dset), o_stretch, abs_tol=1e-9)


def test_metric_oracle_on_fixed_families():
    for g in [path_graph(5), cycle_graph(6), star_graph(4), complete_graph(5), grid_graph(3, 3)]:
        dset = cds_greedy(g).nodes
        o_diam, o_abpl, o_mrpl, o_arpl, o_stretch = brute_metrics(g.adjacency, dset)
        rep = full_report(g, cds_greedy(g))
        assert rep.diameter == o_diam
        assert math.isclose(rep.abpl, o_abpl, abs_tol=1e-9)
        assert rep.mrpl == o_mrpl
        assert math.isclose(rep.arpl, o_arpl, abs_tol=1e-9)
        assert math.isclose(rep.max_stretch, o_stretch, abs_tol=1e-9)


@pytest.mark.parametrize("seed", range(10))
def test_full_report_internally_consistent(seed):
    g = small_random_udg(seed + 1000, n=10 + seed)
    for scheme in ALL_SCHEMES:
        bb = build_scheme(g, scheme)
        rep = full_report(g, bb)
        assert rep.cds_size == cds_size(bb)
        assert rep.diameter == backbone_diameter(g, bb.nodes)
        assert math.isclose(rep.abpl, abpl(g, bb.nodes))
        assert rep.mrpl == mrpl(g, bb.nodes)
        assert math.isclose(rep.arpl, arpl(g, bb.nodes))
        assert math.isclose(rep.max_stretch, max_stretch(g, bb.nodes))
        # structural invariants
        assert rep.arpl <= rep.mrpl
        assert rep.abpl <= rep.diameter
        assert rep.max_stretch >= 1.0


def test_full_report_rejects_invalid_backbone():
    with pytest.raises(ValueError):
        full_report(path_graph(5), Backbone("GREEDY", frozenset({1, 3})))


def test_singleton_backbone_flag():
    rep = full_report(complete_graph(5), cds_greedy(complete_graph(5)))
    assert rep.singleton_backbone
    assert rep.abpl == 0.0
    assert rep.diameter == 0
