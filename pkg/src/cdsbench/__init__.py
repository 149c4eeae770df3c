"""Connected dominating set benchmark suite on random unit disk graphs."""

from .backbone import (
    ALL_SCHEMES,
    AlphaMocParams,
    Backbone,
    backbone_hop_dist,
    build_mis,
    build_scheme,
    cds_alpha_moc,
    cds_collab_cover,
    cds_diameter,
    cds_greedy,
    cds_guaranteed,
    cds_resilient,
    connect_mis,
    min_cds_oracle,
    stretch_repair,
    verify_cds,
)
from .harness import SweepConfig, SweepResult, run_cardinality_sweep, run_sweep, summarize_tradeoff
from .metrics import MetricReport, full_report
from .udg import (
    ConnectivityError,
    UdgSpec,
    UnitDiskGraph,
    all_pairs_hop_dist,
    build_adjacency,
    generate_udg,
    is_connected,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_SCHEMES",
    "AlphaMocParams",
    "Backbone",
    "ConnectivityError",
    "MetricReport",
    "SweepConfig",
    "SweepResult",
    "UdgSpec",
    "UnitDiskGraph",
    "all_pairs_hop_dist",
    "backbone_hop_dist",
    "build_adjacency",
    "build_mis",
    "build_scheme",
    "cds_alpha_moc",
    "cds_collab_cover",
    "cds_diameter",
    "cds_greedy",
    "cds_guaranteed",
    "cds_resilient",
    "connect_mis",
    "full_report",
    "generate_udg",
    "is_connected",
    "min_cds_oracle",
    "run_cardinality_sweep",
    "run_sweep",
    "stretch_repair",
    "summarize_tradeoff",
    "verify_cds",
]
