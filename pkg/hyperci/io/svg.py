from typing import List, Sequence, Tuple
from xml.sax.saxutils import escape, quoteattr

Point = Tuple[float, float]
Curve = Tuple[str, Sequence[Point]]

# Colour cycle for the curves
PALETTE = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
)

WIDTH, HEIGHT = 640, 420
LEFT, RIGHT, TOP, BOTTOM = 60, 170, 20, 50
TICKS = 5


def _fmt(value: float) -> str:
    return f"{value:.6f}"


def render_anc_svg(curves: Sequence[Curve], title: str = "") -> str:
    """
    Line chart of normalized connectivity against fraction of nodes removed.

    Polylines carry the data coordinates themselves (6 decimals); a group
    transform maps them onto the plot area. Points are drawn as given:
    curves from ``Trajectory.curve()`` open with ``(0, 1)`` for the intact
    hypergraph, so a polyline has one more point than the run has batches
    and its remaining points match the CSV ``frac_removed`` and ``ratio``
    columns.
    """
    if not curves:
        raise ValueError("At least one curve is required")
    for label, points in curves:
        if len(points) < 2:
            raise ValueError(f"Curve '{label}' needs at least 2 points, got {len(points)}")

    plot_w = WIDTH - LEFT - RIGHT
    plot_h = HEIGHT - TOP - BOTTOM
    y_max = max(1.0, max(y for _, points in curves for _, y in points))

    parts: List[str] = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    if title:
        parts.append(
            f'<text x="{LEFT + plot_w / 2:g}" y="{TOP - 6}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="12">{escape(title)}</text>'
        )

    # axes and ticks
    x0, y0 = LEFT, TOP + plot_h
    parts.append(
        f'<g stroke="black" stroke-width="1">'
        f'<line x1="{x0}" y1="{y0}" x2="{x0 + plot_w}" y2="{y0}"/>'
        f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{TOP}"/></g>'
    )
    for i in range(TICKS + 1):
        fraction = i / TICKS
        x = x0 + fraction * plot_w
        y = y0 - fraction * plot_h
        parts.append(
            f'<line x1="{x:g}" y1="{y0}" x2="{x:g}" y2="{y0 + 4}" stroke="black"/>'
            f'<text x="{x:g}" y="{y0 + 16}" text-anchor="middle" font-family="sans-serif" '
            f'font-size="10">{fraction:.1f}</text>'
            f'<line x1="{x0 - 4}" y1="{y:g}" x2="{x0}" y2="{y:g}" stroke="black"/>'
            f'<text x="{x0 - 7}" y="{y + 3:g}" text-anchor="end" font-family="sans-serif" '
            f'font-size="10">{fraction * y_max:.2f}</text>'
        )
    parts.append(
        f'<text x="{x0 + plot_w / 2:g}" y="{HEIGHT - 12}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12">fraction of nodes removed</text>'
        f'<text x="14" y="{TOP + plot_h / 2:g}" text-anchor="middle" font-family="sans-serif" '
        f'font-size="12" transform="rotate(-90 14 {TOP + plot_h / 2:g})">normalized connectivity</text>'
    )

    # data, in data coordinates
    parts.append(
        f'<g transform="translate({x0} {y0}) scale({plot_w} {-plot_h / y_max:g})" fill="none">'
    )
    for i, (label, points) in enumerate(curves):
        coordinates = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points)
        parts.append(
            f'<polyline data-label={quoteattr(label)} '
            f'stroke="{PALETTE[i % len(PALETTE)]}" stroke-width="1.5" '
            f'vector-effect="non-scaling-stroke" points="{coordinates}"/>'
        )
    parts.append("</g>")

    # legend
    legend_x = LEFT + plot_w + 16
    for i, (label, _) in enumerate(curves):
        y = TOP + 10 + i * 18
        parts.append(
            f'<line x1="{legend_x}" y1="{y}" x2="{legend_x + 20}" y2="{y}" '
            f'stroke="{PALETTE[i % len(PALETTE)]}" stroke-width="2"/>'
            f'<text x="{legend_x + 26}" y="{y + 4}" font-family="sans-serif" '
            f'font-size="11">{escape(label)}</text>'
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
