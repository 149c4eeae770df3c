"""Hand-emitted SVG line charts for sweep summaries.

No plotting dependency: output is a deterministic function of the input
rows, so re-plotting an unchanged CSV yields byte-identical SVG (diffable
in review).  Layout is a fixed grid of panels, one per transmission range,
two panels per row; each panel plots metric mean against node count with
one polyline per scheme.

Scaling rules (also stated in the SVG header comment): axes are linear;
y runs from 0 to 1.05x the largest plotted value in the panel; 5 y-ticks;
x-ticks at the node counts present.  Single-point series draw a marker
with no polyline segment.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .backbone import ALL_SCHEMES

# Palette order matches ALL_SCHEMES; documented external contract.
SCHEME_COLORS = {
    "GREEDY": "#1f77b4",
    "DIAMETER": "#ff7f0e",
    "ALPHA_MOC": "#2ca02c",
    "COLLAB_COVER": "#d62728",
    "GUARANTEED": "#9467bd",
    "RESILIENT": "#8c564b",
}

PLOT_METRICS = ("cds_size", "mrpl", "arpl")

PANEL_W = 430
PANEL_H = 330
MARGIN_L = 62
MARGIN_R = 16
MARGIN_T = 36
MARGIN_B = 46
LEGEND_H = 28


@dataclass(frozen=True)
class PlotSpec:
    metric: str
    panels: tuple[float, ...]
    series: tuple[str, ...] = ALL_SCHEMES
    input_path: str = ""
    output_path: str = ""

    def __post_init__(self) -> None:
        if self.metric not in PLOT_METRICS:
            raise ValueError(f"metric must be one of {PLOT_METRICS}")
        if not self.panels:
            raise ValueError("panels must be non-empty")
        if not self.series:
            raise ValueError("series must be non-empty")


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _tick_label(x: float) -> str:
    return f"{x:g}"


def render_plot(rows: list[dict], spec: PlotSpec) -> str:
    """Render summary rows (see harness.read_summary_csv) to an SVG string."""
    mean_col = f"{spec.metric}_mean"
    if rows and mean_col not in rows[0]:
        raise KeyError(f"missing columns in input CSV: {mean_col}")

    npanels = len(spec.panels)
    ncols = 2 if npanels > 1 else 1
    nrows = (npanels + ncols - 1) // ncols
    width = ncols * PANEL_W
    height = nrows * PANEL_H + LEGEND_H

    out = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}" '
        f'width="{width}" height="{height}" font-family="sans-serif" font-size="12">'
    )
    out.append(
        "<!-- linear axes; y axis 0 to 1.05x panel max; 5 y ticks; "
        "x ticks at node counts; means over unordered distinct pairs -->"
    )
    out.append(f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>')

    # legend strip
    lx = 10.0
    for scheme in spec.series:
        color = SCHEME_COLORS.get(scheme, "#000000")
        out.append(
            f'<line x1="{_fmt(lx)}" y1="{_fmt(LEGEND_H / 2)}" x2="{_fmt(lx + 22)}" '
            f'y2="{_fmt(LEGEND_H / 2)}" stroke="{color}" stroke-width="2"/>'
        )
        out.append(
            f'<text x="{_fmt(lx + 26)}" y="{_fmt(LEGEND_H / 2 + 4)}">{scheme}</text>'
        )
        lx += 26 + 8 * len(scheme) + 16

    for pi, panel_r in enumerate(spec.panels):
        px = (pi % ncols) * PANEL_W
        py = (pi // ncols) * PANEL_H + LEGEND_H
        out.extend(_render_panel(rows, spec, panel_r, px, py))

    out.append("</svg>")
    return "\n".join(out) + "\n"


def _render_panel(rows, spec: PlotSpec, panel_r: float, px: float, py: float) -> list[str]:
    mean_col = f"{spec.metric}_mean"
    series_pts: dict[str, list[tuple[int, float]]] = {}
    for scheme in spec.series:
        pts = [
            (row["n"], row[mean_col])
            for row in rows
            if row["scheme"] == scheme
            and row["r"] == panel_r
            and row.get("status", "ok") == "ok"
            and row.get(mean_col) is not None
        ]
        series_pts[scheme] = sorted(pts)

    xs = sorted({n for pts in series_pts.values() for n, _ in pts})
    ymax = max((y for pts in series_pts.values() for _, y in pts), default=0.0)
    ymax = 1.05 * ymax if ymax > 0 else 1.0
    x0, x1 = (xs[0], xs[-1]) if xs else (0, 1)
    if x0 == x1:
        x0, x1 = x0 - 1, x1 + 1

    left = px + MARGIN_L
    right = px + PANEL_W - MARGIN_R
    top = py + MARGIN_T
    bottom = py + PANEL_H - MARGIN_B

    def sx(n: float) -> float:
        return left + (n - x0) / (x1 - x0) * (right - left)

    def sy(v: float) -> float:
        return bottom - v / ymax * (bottom - top)

    out = []
    out.append(
        f'<rect x="{_fmt(left)}" y="{_fmt(top)}" width="{_fmt(right - left)}" '
        f'height="{_fmt(bottom - top)}" fill="none" stroke="#333333"/>'
    )
    out.append(
        f'<text x="{_fmt((left + right) / 2)}" y="{_fmt(py + MARGIN_T - 12)}" '
        f'text-anchor="middle" font-weight="bold">r = {_tick_label(panel_r)}</text>'
    )
    # y ticks: 5 including 0 and ymax
    for i in range(5):
        v = ymax * i / 4
        y = sy(v)
        out.append(
            f'<line x1="{_fmt(left - 4)}" y1="{_fmt(y)}" x2="{_fmt(left)}" '
            f'y2="{_fmt(y)}" stroke="#333333"/>'
        )
        out.append(
            f'<text x="{_fmt(left - 8)}" y="{_fmt(y + 4)}" text-anchor="end">'
            f"{_tick_label(round(v, 3))}</text>"
        )
    for n in xs:
        x = sx(n)
        out.append(
            f'<line x1="{_fmt(x)}" y1="{_fmt(bottom)}" x2="{_fmt(x)}" '
            f'y2="{_fmt(bottom + 4)}" stroke="#333333"/>'
        )
        out.append(
            f'<text x="{_fmt(x)}" y="{_fmt(bottom + 18)}" text-anchor="middle">{n}</text>'
        )
    out.append(
        f'<text x="{_fmt((left + right) / 2)}" y="{_fmt(bottom + 36)}" '
        f'text-anchor="middle">number of nodes</text>'
    )
    out.append(
        f'<text x="{_fmt(px + 14)}" y="{_fmt((top + bottom) / 2)}" text-anchor="middle" '
        f'transform="rotate(-90 {_fmt(px + 14)} {_fmt((top + bottom) / 2)})">'
        f"{spec.metric}</text>"
    )

    for scheme in spec.series:
        pts = series_pts[scheme]
        if not pts:
            continue
        color = SCHEME_COLORS.get(scheme, "#000000")
        if len(pts) >= 2:
            coords = " ".join(f"{_fmt(sx(n))},{_fmt(sy(v))}" for n, v in pts)
            out.append(
                f'<polyline points="{coords}" fill="none" stroke="{color}" '
                f'stroke-width="1.5"/>'
            )
        for n, v in pts:
            out.append(
                f'<circle cx="{_fmt(sx(n))}" cy="{_fmt(sy(v))}" r="3" fill="{color}"/>'
            )
    return out
