"""Evaluation metrics for a (graph, backbone) pair.

All averages are over unordered distinct pairs (stated in every output
header so downstream analysis cannot silently mismatch).  Backbone
distances d_D come from a single D-restricted all-pairs BFS shared by all
six fields.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .backbone import Backbone, restricted_hop_matrix, verify_cds
from .udg import UnitDiskGraph

CSV_FIELDS = (
    "graph_id",
    "scheme",
    "n",
    "r",
    "cds_size",
    "diameter",
    "abpl",
    "mrpl",
    "arpl",
    "max_stretch",
)

METRIC_NAMES = ("cds_size", "diameter", "abpl", "mrpl", "arpl", "max_stretch")


@dataclass(frozen=True)
class MetricReport:
    """One row of benchmark output.

    `abpl` is defined as 0 for a singleton backbone (no pairs); the
    `singleton_backbone` flag records that case instead of erroring so
    dense-graph sweeps do not abort.
    """

    cds_size: int
    diameter: int
    abpl: float
    mrpl: int
    arpl: float
    max_stretch: float
    singleton_backbone: bool = False

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in METRIC_NAMES}


def cds_size(backbone: Backbone) -> int:
    return len(backbone.nodes)


def _pair_values(matrix: np.ndarray, idx: list[int]) -> np.ndarray:
    sub = matrix[np.ix_(idx, idx)]
    iu = np.triu_indices(len(idx), k=1)
    return sub[iu]


def backbone_diameter(graph: UnitDiskGraph, dset) -> int:
    """Max backbone distance over pairs inside D (0 for a singleton)."""
    dn = sorted(set(dset))
    if len(dn) < 2:
        return 0
    dd = restricted_hop_matrix(graph, dset)
    return int(_pair_values(dd, dn).max())


def abpl(graph: UnitDiskGraph, dset) -> float:
    """Mean backbone distance over unordered distinct pairs inside D."""
    dn = sorted(set(dset))
    if len(dn) < 2:
        return 0.0
    dd = restricted_hop_matrix(graph, dset)
    return float(_pair_values(dd, dn).mean())


def mrpl(graph: UnitDiskGraph, dset) -> int:
    """Worst-case routing path length over all node pairs."""
    dd = restricted_hop_matrix(graph, dset)
    iu = np.triu_indices(graph.n, k=1)
    if iu[0].size == 0:
        return 0
    return int(dd[iu].max())


def arpl(graph: UnitDiskGraph, dset) -> float:
    """Mean routing path length over unordered distinct node pairs."""
    dd = restricted_hop_matrix(graph, dset)
    iu = np.triu_indices(graph.n, k=1)
    if iu[0].size == 0:
        return 0.0
    return float(dd[iu].mean())


def max_stretch(graph: UnitDiskGraph, dset) -> float:
    """Max d_D(a,b) / d(a,b) over pairs at hop distance >= 1."""
    dd = restricted_hop_matrix(graph, dset)
    hop = graph.hop_matrix()
    iu = np.triu_indices(graph.n, k=1)
    if iu[0].size == 0:
        return 1.0
    return float((dd[iu] / hop[iu]).max())


def full_report(graph: UnitDiskGraph, backbone: Backbone) -> MetricReport:
    """All six metrics from one D-restricted all-pairs pass."""
    dset = backbone.nodes
    if not verify_cds(graph, dset):
        raise ValueError("backbone is not a valid connected dominating set")
    dd = restricted_hop_matrix(graph, dset)
    hop = graph.hop_matrix()
    dn = sorted(dset)
    iu = np.triu_indices(graph.n, k=1)
    singleton = len(dn) < 2
    if singleton:
        diam, mean_bpl = 0, 0.0
    else:
        d_pairs = _pair_values(dd, dn)
        diam, mean_bpl = int(d_pairs.max()), float(d_pairs.mean())
    if iu[0].size == 0:
        worst, mean_rpl, stretch = 0, 0.0, 1.0
    else:
        all_pairs = dd[iu]
        worst = int(all_pairs.max())
        mean_rpl = float(all_pairs.mean())
        stretch = float((all_pairs / hop[iu]).max())
    return MetricReport(
        cds_size=len(dset),
        diameter=diam,
        abpl=mean_bpl,
        mrpl=worst,
        arpl=mean_rpl,
        max_stretch=stretch,
        singleton_backbone=singleton,
    )
