"""Seeded benchmark sweeps over (node count x transmission range x scheme).

Instance seeds are derived as a pure hash of (base_seed, n, r, i), so the
graph for instance i at a grid point never depends on which schemes run or
in what order, and removing a scheme from the config changes no other
scheme's rows.

Grid points where connectivity is unattainable within the retry budget are
not failures: they carry an `infeasible` status marker and empty metric
cells, and all other grid points are unaffected.

Output convention: per-instance rows (instances.csv) are always persisted
alongside the aggregates (summary.csv) so every figure is re-derivable.
All averages are over unordered distinct pairs; std columns are sample
standard deviations (the figures report means, the spread feeds the
statistical trend checks).
"""

from __future__ import annotations

import csv
import json
import math
import os
import struct
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .backbone import ALL_SCHEMES, DEFAULT_ALPHA, build_scheme
from .metrics import CSV_FIELDS, METRIC_NAMES, full_report
from .rng import derive_seed
from .udg import (
    DEFAULT_AREA_MAX,
    DEFAULT_AREA_MIN,
    DEFAULT_MAX_ATTEMPTS,
    ConnectivityError,
    UdgSpec,
    generate_udg,
)

DEFAULT_NODE_COUNTS = tuple(range(10, 101, 10))
DEFAULT_RANGES = (10.0, 20.0, 30.0, 40.0)
DEFAULT_INSTANCES = 20

STATUS_OK = "ok"
STATUS_INFEASIBLE = "infeasible"

SUMMARY_FIELDS = ("n", "r", "scheme", "status", "instance_count_used") + tuple(
    f"{m}_{s}" for m in METRIC_NAMES for s in ("mean", "std")
)

TRADEOFF_FIELDS = ("n", "r", "scheme", "cds_size_rank", "mrpl_rank", "rank_sum")


class ConfigError(ValueError):
    """Malformed sweep configuration."""


@dataclass(frozen=True)
class SweepConfig:
    node_counts: tuple[int, ...] = DEFAULT_NODE_COUNTS
    ranges: tuple[float, ...] = DEFAULT_RANGES
    instances_per_point: int = DEFAULT_INSTANCES
    base_seed: int = 0
    schemes: tuple[str, ...] = ALL_SCHEMES
    alpha: float = DEFAULT_ALPHA
    area_min: float = DEFAULT_AREA_MIN
    area_max: float = DEFAULT_AREA_MAX
    max_attempts: int = DEFAULT_MAX_ATTEMPTS

    def __post_init__(self) -> None:
        if not self.node_counts or not self.ranges or not self.schemes:
            raise ConfigError("node_counts, ranges and schemes must be non-empty")
        if list(self.node_counts) != sorted(set(self.node_counts)):
            raise ConfigError("node_counts must be strictly increasing")
        if self.instances_per_point < 1:
            raise ConfigError("instances_per_point must be >= 1")
        unknown = set(self.schemes) - set(ALL_SCHEMES)
        if unknown:
            raise ConfigError(f"unknown schemes: {sorted(unknown)}")

    @classmethod
    def from_json(cls, text: str) -> "SweepConfig":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config is not valid JSON (line {exc.lineno}): {exc.msg}")
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
        known = set(cls.__dataclass_fields__)
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        kwargs: dict = {}
        if "node_counts" in data:
            kwargs["node_counts"] = tuple(int(n) for n in data["node_counts"])
        if "ranges" in data:
            kwargs["ranges"] = tuple(float(r) for r in data["ranges"])
        if "schemes" in data:
            kwargs["schemes"] = tuple(str(s) for s in data["schemes"])
        for key in ("instances_per_point", "base_seed", "max_attempts"):
            if key in data:
                kwargs[key] = int(data[key])
        for key in ("alpha", "area_min", "area_max"):
            if key in data:
                kwargs[key] = float(data[key])
        return cls(**kwargs)

    def to_dict(self) -> dict:
        return {
            "node_counts": list(self.node_counts),
            "ranges": list(self.ranges),
            "instances_per_point": self.instances_per_point,
            "base_seed": self.base_seed,
            "schemes": list(self.schemes),
            "alpha": self.alpha,
            "area_min": self.area_min,
            "area_max": self.area_max,
            "max_attempts": self.max_attempts,
        }


@dataclass(frozen=True)
class SummaryRow:
    n: int
    r: float
    scheme: str
    status: str
    instance_count_used: int
    # metric name -> (mean, sample std); empty when infeasible
    stats: dict = field(default_factory=dict)


@dataclass(frozen=True)
class SweepResult:
    config: SweepConfig
    instance_rows: tuple[dict, ...]
    summary_rows: tuple[SummaryRow, ...]


def _float_bits(x: float) -> int:
    return struct.unpack("<Q", struct.pack("<d", float(x)))[0]


def instance_seed(base_seed: int, n: int, r: float, i: int) -> int:
    """Seed for instance i at grid point (n, r); pure hash, order-free."""
    return derive_seed(base_seed, n, _float_bits(r), i)


def _sample_std(values: list[float]) -> float:
    k = len(values)
    if k < 2:
        return 0.0
    mean = sum(values) / k
    return math.sqrt(sum((v - mean) ** 2 for v in values) / (k - 1))


def _run_grid_point(args: tuple) -> tuple[list[dict], list[SummaryRow]]:
    config_dict, n, r = args
    config = SweepConfig(**{**config_dict, "node_counts": tuple(config_dict["node_counts"]),
                            "ranges": tuple(config_dict["ranges"]),
                            "schemes": tuple(config_dict["schemes"])})
    instance_rows: list[dict] = []
    per_scheme: dict[str, list[dict]] = {s: [] for s in config.schemes}
    feasible = True
    used = 0
    for i in range(config.instances_per_point):
        seed = instance_seed(config.base_seed, n, r, i)
        graph_id = f"n{n}_r{r:g}_i{i}"
        spec = UdgSpec(n, r, config.area_min, config.area_max, seed)
        try:
            graph = generate_udg(spec, max_attempts=config.max_attempts, graph_id=graph_id)
        except ConnectivityError:
            feasible = False
            break
        used += 1
        for scheme in config.schemes:
            bb = build_scheme(graph, scheme, alpha=config.alpha)
            report = full_report(graph, bb)
            row = {"graph_id": graph_id, "scheme": scheme, "n": n, "r": r}
            row.update(report.as_dict())
            instance_rows.append(row)
            per_scheme[scheme].append(report.as_dict())
    summary_rows = []
    for scheme in config.schemes:
        if feasible:
            stats = {}
            for name in METRIC_NAMES:
                values = [float(d[name]) for d in per_scheme[scheme]]
                stats[name] = (sum(values) / len(values), _sample_std(values))
            summary_rows.append(SummaryRow(n, r, scheme, STATUS_OK, used, stats))
        else:
            summary_rows.append(SummaryRow(n, r, scheme, STATUS_INFEASIBLE, used, {}))
    return instance_rows, summary_rows


def _worker_count() -> int:
    raw = os.environ.get("CDSBENCH_THREADS", "1")
    try:
        value = int(raw)
    except ValueError:
        return 1
    if value == 0:
        return os.cpu_count() or 1
    return max(1, value)


def run_sweep(config: SweepConfig) -> SweepResult:
    """Run every (n, r) grid point; deterministic for a fixed config.

    Grid points may run in parallel (CDSBENCH_THREADS, 0 = auto); rows are
    collected in (n, r, scheme, instance) order regardless of scheduling.
    """
    grid = [(config.to_dict(), n, r) for n in config.node_counts for r in config.ranges]
    workers = _worker_count()
    if workers > 1 and len(grid) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_grid_point, grid))
    else:
        results = [_run_grid_point(item) for item in grid]
    instance_rows: list[dict] = []
    summary_rows: list[SummaryRow] = []
    for inst, summ in results:
        instance_rows.extend(inst)
        summary_rows.extend(summ)
    return SweepResult(config, tuple(instance_rows), tuple(summary_rows))


def run_cardinality_sweep(config: SweepConfig) -> SweepResult:
    """Node-count sweep at one fixed transmission range (the size-axis plot)."""
    if len(config.ranges) != 1:
        raise ConfigError("cardinality sweep requires exactly one transmission range")
    return run_sweep(config)


def _rank(values: dict[str, float]) -> dict[str, float]:
    """Ascending ranks, ties receive the average of their rank positions."""
    ordered = sorted(values.items(), key=lambda kv: kv[1])
    ranks: dict[str, float] = {}
    i = 0
    while i < len(ordered):
        j = i
        while j + 1 < len(ordered) and ordered[j + 1][1] == ordered[i][1]:
            j += 1
        avg = (i + j) / 2 + 1
        for k in range(i, j + 1):
            ranks[ordered[k][0]] = avg
        i = j + 1
    return ranks


def summarize_tradeoff(result: SweepResult) -> list[dict]:
    """Per grid point, rank schemes on CDS size and on MRPL (1 = best).

    The rank-sum column is the size/routing balance figure of merit: low
    rank-sum means a scheme is small *and* routes short.
    """
    schemes = result.config.schemes
    if len(schemes) < 2:
        raise ValueError("tradeoff summary needs at least two schemes")
    by_point: dict[tuple[int, float], dict[str, SummaryRow]] = {}
    for row in result.summary_rows:
        if row.status == STATUS_OK:
            by_point.setdefault((row.n, row.r), {})[row.scheme] = row
    table = []
    for (n, r) in sorted(by_point):
        rows = by_point[(n, r)]
        size_rank = _rank({s: rows[s].stats["cds_size"][0] for s in rows})
        mrpl_rank = _rank({s: rows[s].stats["mrpl"][0] for s in rows})
        for scheme in schemes:
            if scheme not in rows:
                continue
            table.append(
                {
                    "n": n,
                    "r": r,
                    "scheme": scheme,
                    "cds_size_rank": size_rank[scheme],
                    "mrpl_rank": mrpl_rank[scheme],
                    "rank_sum": size_rank[scheme] + mrpl_rank[scheme],
                }
            )
    return table


def _fmt(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_instances_csv(result: SweepResult, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_FIELDS)
        for row in result.instance_rows:
            writer.writerow([_fmt(row[f]) for f in CSV_FIELDS])


def write_summary_csv(result: SweepResult, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(SUMMARY_FIELDS)
        for row in result.summary_rows:
            record = [row.n, _fmt(row.r), row.scheme, row.status, row.instance_count_used]
            for name in METRIC_NAMES:
                if row.status == STATUS_OK:
                    mean, std = row.stats[name]
                    record.extend([_fmt(float(mean)), _fmt(float(std))])
                else:
                    record.extend(["", ""])
            writer.writerow(record)


def write_tradeoff_csv(table: list[dict], path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(TRADEOFF_FIELDS)
        for row in table:
            writer.writerow([_fmt(row[f]) for f in TRADEOFF_FIELDS])


def read_summary_csv(path) -> list[dict]:
    """Summary rows as dicts with typed numeric fields (for plotting)."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        rows = []
        for raw in reader:
            row: dict = dict(raw)
            row["n"] = int(raw["n"])
            row["r"] = float(raw["r"])
            for key, value in raw.items():
                if key.endswith("_mean") or key.endswith("_std"):
                    row[key] = float(value) if value else None
            rows.append(row)
        return rows
