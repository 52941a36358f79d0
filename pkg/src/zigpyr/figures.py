"""Standalone SVG rendering of configuration documents.

Figures are pure functions of (document, style): byte-identical output for
identical inputs.  Every polygon of the document appears exactly once as a
path element; degenerate pieces (zero area at the drawing tolerance) are
drawn as dashed outlines; labels of coincident points are merged into one.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping
from xml.etree import ElementTree

from .constructions import ConfigurationDocument, RightTriangle, build_configuration

DEFAULT_PALETTE: dict[str, str] = {
    "ziggurat-a": "#7fb8d8",
    "ziggurat-b": "#8fcf9f",
    "ziggurat-c": "#f2c14e",
    "triangle": "#e8917c",
    "parallelogram": "#b9a7d1",
    "degenerate": "#9aa0a6",
}

_ROLE_BY_PREFIX = (
    ("ziggurat_a", "ziggurat-a"),
    ("ziggurat_b", "ziggurat-b"),
    ("ziggurat_c", "ziggurat-c"),
    ("pyramid_a", "ziggurat-a"),
    ("pyramid_b", "ziggurat-b"),
    ("pyramid_c", "ziggurat-c"),
    ("triangle", "triangle"),
    ("similar_triangle", "triangle"),
    ("central_triangle", "triangle"),
    ("corner_triangle", "triangle"),
    ("central_parallelogram", "parallelogram"),
    ("side_parallelogram", "parallelogram"),
)

COINCIDENT_LABEL_TOL = 1e-6
DEGENERATE_AREA_RTOL = 1e-9

MAIN_PIECES = ("ziggurat_a", "ziggurat_b", "ziggurat_c",
               "pyramid_a", "pyramid_b", "pyramid_c", "triangle")


@dataclass(frozen=True)
class FigureStyle:
    width: int = 640
    height: int = 640
    margin: float = 48.0
    stroke_width: float = 1.4
    master_stroke_width: float = 2.2
    point_radius: float = 3.0
    label_font_size: int = 13
    area_font_size: int = 11
    show_areas: bool = True
    palette: Mapping[str, str] = field(default_factory=lambda: dict(DEFAULT_PALETTE))

    def fill_for(self, polygon_name: str) -> str:
        for prefix, role in _ROLE_BY_PREFIX:
            if polygon_name.startswith(prefix):
                return self.palette[role]
        return self.palette["degenerate"]


def _fmt(v: float) -> str:
    return f"{v:.6f}"


class _Canvas:
    """World-to-screen mapping with the y axis flipped for display."""

    def __init__(self, points: Iterable[tuple[float, float]], style: FigureStyle):
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        self.xmin, self.xmax = min(xs), max(xs)
        self.ymin, self.ymax = min(ys), max(ys)
        dx = max(self.xmax - self.xmin, 1e-9)
        dy = max(self.ymax - self.ymin, 1e-9)
        usable_w = style.width - 2 * style.margin
        usable_h = style.height - 2 * style.margin
        self.scale = min(usable_w / dx, usable_h / dy)
        self.ox = style.margin + (usable_w - dx * self.scale) / 2
        self.oy = style.margin + (usable_h - dy * self.scale) / 2
        self.height = style.height

    def to_screen(self, x: float, y: float) -> tuple[float, float]:
        sx = self.ox + (x - self.xmin) * self.scale
        sy = self.height - (self.oy + (y - self.ymin) * self.scale)
        return sx, sy


def _merge_labels(named: dict[str, tuple[float, float]]) -> list[tuple[str, tuple[float, float]]]:
    """Cluster coincident points (within tolerance) into single labels."""
    clusters: list[tuple[list[str], tuple[float, float]]] = []
    for name, pos in named.items():
        for names, anchor in clusters:
            if math.hypot(pos[0] - anchor[0], pos[1] - anchor[1]) <= COINCIDENT_LABEL_TOL:
                names.append(name)
                break
        else:
            clusters.append(([name], pos))
    return [(", ".join(names), anchor) for names, anchor in clusters]


def render_svg(doc: ConfigurationDocument, style: FigureStyle | None = None) -> str:
    """Render a document to an SVG 1.1 text."""
    style = style or FigureStyle()
    named = {name: p.as_floats() for name, p in doc.named_points.items()}
    for name, (x, y) in named.items():
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ValueError(f"non-finite coordinate for point {name}")
    canvas = _Canvas(named.values(), style)
    world_scale = max(
        max(abs(v) for pos in named.values() for v in pos), 1.0
    )

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{style.width}" height="{style.height}" '
        f'viewBox="0 0 {style.width} {style.height}">',
        f'<rect x="0" y="0" width="{style.width}" height="{style.height}" fill="white"/>',
    ]

    areas = doc.areas()
    for name, cycle in doc.polygons.items():
        pts = [canvas.to_screen(*named[v]) for v in cycle]
        d = "M " + " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in pts) + " Z"
        degenerate = abs(areas[name]) <= DEGENERATE_AREA_RTOL * world_scale**2
        if name == "master":
            attrs = (f'fill="none" stroke="#1d1d1f" '
                     f'stroke-width="{style.master_stroke_width}"')
        elif degenerate:
            attrs = (f'fill="none" stroke="{style.palette["degenerate"]}" '
                     f'stroke-width="{style.stroke_width}" stroke-dasharray="6 4"')
        else:
            attrs = (f'fill="{style.fill_for(name)}" fill-opacity="0.55" '
                     f'stroke="#333333" stroke-width="{style.stroke_width}"')
        parts.append(f'<path id="{name}" d="{d}" {attrs}/>')

    if style.show_areas:
        for name in MAIN_PIECES:
            if name not in doc.polygons:
                continue
            cycle = doc.polygons[name]
            cx = sum(named[v][0] for v in cycle) / len(cycle)
            cy = sum(named[v][1] for v in cycle) / len(cycle)
            sx, sy = canvas.to_screen(cx, cy)
            parts.append(
                f'<text class="area" x="{_fmt(sx)}" y="{_fmt(sy)}" '
                f'font-size="{style.area_font_size}" text-anchor="middle" '
                f'fill="#222222">{areas[name]:.4f}</text>'
            )

    for label, anchor in _merge_labels(named):
        sx, sy = canvas.to_screen(*anchor)
        parts.append(
            f'<circle cx="{_fmt(sx)}" cy="{_fmt(sy)}" r="{style.point_radius}" '
            f'fill="#111111"/>'
        )
        parts.append(
            f'<text class="label" x="{_fmt(sx + 6.0)}" y="{_fmt(sy - 6.0)}" '
            f'font-size="{style.label_font_size}" font-family="sans-serif" '
            f'fill="#111111">{label}</text>'
        )

    parts.append("</svg>")
    return "\n".join(parts)


def render_gallery(thetas: Iterable[float], tri: RightTriangle, family: str,
                   style: FigureStyle | None = None) -> dict[float, str]:
    """One figure per angle; deterministic for identical inputs."""
    return {
        float(theta): render_svg(build_configuration(tri, theta, family), style)
        for theta in thetas
    }


PAPER_GALLERY = (
    ("ziggurat", (60, 90, 108, 120, 135)),
    ("pyramid", (45, 60, 72)),
)


def paper_gallery_figures(tri: RightTriangle | None = None,
                          style: FigureStyle | None = None) -> dict[str, str]:
    """The eight highlighted configurations, keyed ``family_theta``."""
    tri = tri or RightTriangle(3, 4)
    out: dict[str, str] = {}
    for family, thetas in PAPER_GALLERY:
        for theta, svg in render_gallery(thetas, tri, family, style).items():
            out[f"{family}_{int(theta)}"] = svg
    return out


# ---------------------------------------------------------------------------
# Structural comparison (golden files)
# ---------------------------------------------------------------------------

def svg_structure(svg_text: str) -> dict:
    """Element counts, labels, and path coordinates rounded to 1e-6.

    Structural rather than byte comparison, so golden files tolerate
    numeric-formatting differences.
    """
    root = ElementTree.fromstring(svg_text)
    ns = "{http://www.w3.org/2000/svg}"
    counts: Counter = Counter()
    labels: list[str] = []
    paths: dict[str, list[tuple[float, float]]] = {}
    for el in root.iter():
        tag = el.tag.removeprefix(ns)
        counts[tag] += 1
        if tag == "text" and el.get("class") == "label":
            labels.append(el.text or "")
        if tag == "path":
            tokens = (el.get("d") or "").replace("M", " ").replace("L", " ").replace("Z", " ").split()
            coords = [round(float(t), 6) for t in tokens]
            paths[el.get("id") or ""] = list(zip(coords[::2], coords[1::2]))
    return {"counts": dict(counts), "labels": sorted(labels), "paths": paths}


def svg_structurally_equal(a: str, b: str) -> bool:
    return svg_structure(a) == svg_structure(b)
