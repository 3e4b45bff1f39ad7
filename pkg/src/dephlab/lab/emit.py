"""CSV and SVG writers for time series and scan results."""
from __future__ import annotations

from xml.sax.saxutils import escape

import numpy as np

from .experiment import MEASURES, ScanResult, TimeSeries

COLORS = {"D_T": "#1f77b4", "D_HS": "#9467bd", "D_B": "#d62728", "D_H": "#2ca02c", "D_JS": "#ff7f0e"}


def _fmt(v: float) -> str:
    return f"{v:.12g}"


def _meta_lines(metadata: dict) -> list[str]:
    lines = []
    for key in sorted(metadata):
        value = metadata[key]
        if value is None:
            continue
        if isinstance(value, float):
            value = repr(value)
        elif isinstance(value, tuple):
            value = ", ".join(repr(v) for v in value)
        lines.append(f"# {key} = {value}")
    return lines


def emit_csv(series: TimeSeries | ScanResult, sink) -> None:
    """Write ``#`` metadata lines, a header and one row per grid point (or scan value)."""
    if isinstance(series, ScanResult):
        first, xs, table = series.axis, series.values, series.stats
    else:
        first, xs, table = "t", series.times, series.values
    lines = _meta_lines(series.metadata)
    lines.append(",".join((first, *MEASURES)))
    for x, row in zip(xs, table):
        lines.append(",".join(_fmt(float(v)) for v in (x, *row)))
    sink.write(("\n".join(lines) + "\n").encode("utf-8"))


def emit_plot(series: TimeSeries | ScanResult, sink, measures=MEASURES, title: str | None = None) -> None:
    """Write a standalone SVG line chart, one polyline per measure."""
    if isinstance(series, ScanResult):
        xs, xlabel = series.values, series.axis
        ylabel = "MAX[D(t) - D(0)]"
        table = {m: series.column(m) for m in measures}
    else:
        xs, xlabel, ylabel = series.times, "t", "D(t)"
        table = {m: series.column(m) for m in measures}
    if len(xs) == 0 or not measures:
        raise ValueError("nothing to plot")
    if title is None:
        md = series.metadata
        title = f"model {md.get('model', '?')}: lam1={md.get('lam1')}, lam2={md.get('lam2')}"

    width, height = 640, 420
    left, right, top, bottom = 70, 130, 40, 50
    pw, ph = width - left - right, height - top - bottom
    x0, x1 = float(np.min(xs)), float(np.max(xs))
    ys = np.concatenate([table[m] for m in measures])
    y0, y1 = float(np.min(ys)), float(np.max(ys))
    if x1 == x0:
        x1 = x0 + 1.0
    if y1 == y0:
        y0, y1 = y0 - 0.5, y1 + 0.5

    def sx(x):
        return left + (x - x0) / (x1 - x0) * pw

    def sy(y):
        return top + (1.0 - (y - y0) / (y1 - y0)) * ph

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2:.1f}" y="22" text-anchor="middle" font-size="14">{escape(title)}</text>',
        f'<rect x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
    ]
    for k in range(5):
        fx = x0 + (x1 - x0) * k / 4
        fy = y0 + (y1 - y0) * k / 4
        out.append(f'<text x="{sx(fx):.1f}" y="{top + ph + 16}" text-anchor="middle" font-size="11">{fx:.3g}</text>')
        out.append(f'<text x="{left - 6}" y="{sy(fy) + 4:.1f}" text-anchor="end" font-size="11">{fy:.3g}</text>')
    out.append(f'<text x="{left + pw / 2:.1f}" y="{height - 10}" text-anchor="middle" font-size="13">{escape(xlabel)}</text>')
    out.append(
        f'<text x="16" y="{top + ph / 2:.1f}" text-anchor="middle" font-size="13" '
        f'transform="rotate(-90 16 {top + ph / 2:.1f})">{escape(ylabel)}</text>'
    )
    for i, m in enumerate(measures):
        pts = " ".join(f"{sx(float(x)):.2f},{sy(float(y)):.2f}" for x, y in zip(xs, table[m]))
        color = COLORS.get(m, "black")
        out.append(f'<polyline class="{m}" fill="none" stroke="{color}" stroke-width="1.5" points="{pts}"/>')
        ly = top + 14 + 18 * i
        out.append(f'<line x1="{left + pw + 12}" y1="{ly}" x2="{left + pw + 36}" y2="{ly}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{left + pw + 42}" y="{ly + 4}" font-size="12">{escape(m)}</text>')
    out.append("</svg>")
    sink.write(("\n".join(out) + "\n").encode("utf-8"))
