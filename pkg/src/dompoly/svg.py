"""Minimal static SVG scatter plots of complex points."""
from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence
from xml.sax.saxutils import escape

SIZE = 800
PAD = 0.05
RADIUS = 2

PALETTE = {
    "root": "#1f4e9c",
    "LimitByModulusTie": "#c0392b",
    "LimitByAlphaZero": "#27ae60",
    "circle": "#7f8c8d",
    "hyperbola": "#8e44ad",
    "cardioid": "#d35400",
    "point": "#000000",
}


def _bounds(points: Sequence[complex]) -> tuple[float, float, float, float]:
    xs = [p.real for p in points] or [0.0]
    ys = [p.imag for p in points] or [0.0]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    if x1 - x0 == 0:
        x0, x1 = x0 - 1, x1 + 1
    if y1 - y0 == 0:
        y0, y1 = y0 - 1, y1 + 1
    px, py = PAD * (x1 - x0), PAD * (y1 - y0)
    return x0 - px, x1 + px, y0 - py, y1 + py


def scatter_svg(
    series: Iterable[tuple[str, Sequence[complex]]],
    title: str = "",
) -> str:
    """One circle marker per point; ``series`` is (label, points) pairs.

    The viewBox is the data bounding box plus 5% padding, in data units with
    the imaginary axis flipped so that it points up.
    """
    series = [(label, list(pts)) for label, pts in series]
    allpts = [p for _, pts in series for p in pts]
    x0, x1, y0, y1 = _bounds(allpts)
    w, h = x1 - x0, y1 - y0
    r = RADIUS * max(w, h) / SIZE
    stroke = max(w, h) / SIZE
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="{x0!r} {-y1!r} {w!r} {h!r}" preserveAspectRatio="none">',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    if y0 <= 0 <= y1:
        out.append(f'<line x1="{x0!r}" y1="0" x2="{x1!r}" y2="0" stroke="#999" stroke-width="{stroke!r}"/>')
    if x0 <= 0 <= x1:
        out.append(f'<line x1="0" y1="{-y1!r}" x2="0" y2="{-y0!r}" stroke="#999" stroke-width="{stroke!r}"/>')
    font = 14 * max(w, h) / SIZE
    out.append(
        f'<text x="{x1 - 3 * font!r}" y="{-y0 - font / 2!r}" font-size="{font!r}">re</text>'
    )
    out.append(f'<text x="{x0 + font / 2!r}" y="{-y1 + font!r}" font-size="{font!r}">im</text>')
    for label, pts in series:
        color = PALETTE.get(label, "#333333")
        out.append(f'<g fill="{color}"><desc>{escape(label)}</desc>')
        for p in pts:
            out.append(f'<circle cx="{p.real!r}" cy="{-p.imag!r}" r="{r!r}"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_scatter(path: str | Path, series, title: str = "") -> None:
    Path(path).write_text(scatter_svg(series, title))
