"""The (lambda, mu) = (k/n, d/n) geography plane.

Region membership of a rational point is decided by exact comparisons
against four boundaries: the line mu = lambda + g - 1 (above it every locus
is the whole moduli space), the line mu = 2*lambda - 2 (below it, within
slopes [0, 2g-2], every locus is empty by the section bound), the hyperbola
branch where the normalized expected dimension vanishes, and that branch's
tangent at (1, 1), mu + (1 - lambda)g = 1, which inside the strip
0 <= mu <= 1 separates empty from non-empty.

Map rendering keeps all geometry in Fractions and converts to float only
while printing SVG coordinates, so identical inputs give identical bytes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import classify as _classify
from . import core as _core
from .core import SlopeCoords


@dataclass(frozen=True)
class RegionReport:
    """Membership flags of one rational point, all computed exactly."""

    coords: SlopeCoords
    above_riemann_roch: bool
    below_clifford: bool
    clifford_applicable: bool
    beyond_special: bool
    rho_tilde: Fraction
    on_or_above_tangent: bool
    in_strip: bool


def region_report(g: int, c: SlopeCoords) -> RegionReport:
    if g < 2:
        raise ValueError("g must be ≥ 2")
    lam, mu = c.lam, c.mu
    return RegionReport(
        coords=c,
        above_riemann_roch=mu >= lam + g - 1,
        below_clifford=mu < 2 * lam - 2,
        clifford_applicable=0 <= mu <= 2 * g - 2,
        beyond_special=mu > 2 * g - 2,
        rho_tilde=_core.rho_tilde(g, c),
        on_or_above_tangent=mu + (1 - lam) * g >= 1,
        in_strip=0 <= mu <= 1,
    )


def tangent_line(g: int) -> tuple[int, int, int]:
    """Coefficients (u, v, w) with u*lambda + v*mu = w for the tangent
    mu + (1 - lambda)g = 1, i.e. (-g, 1, 1-g)."""
    if g < 2:
        raise ValueError("g must be ≥ 2")
    return (-g, 1, 1 - g)


def mu_on_tangent(g: int, lam: Fraction) -> Fraction:
    """mu = g*lambda - (g-1), the tangent solved for mu."""
    return g * Fraction(lam) - (g - 1)


@dataclass(frozen=True)
class Parallelogram:
    """Integer-vertex parallelogram with sides parallel to lambda = 0 and
    mu = lambda: vertices v, v+(0,a), v+(b,b), v+(b,a+b)."""

    base: tuple[int, int]
    vertical: int
    diagonal: int

    def __post_init__(self) -> None:
        if self.vertical < 0 or self.diagonal < 0:
            raise ValueError("extents must be ≥ 0")

    def vertices(self) -> tuple[tuple[int, int], ...]:
        lam0, mu0 = self.base
        a, b = self.vertical, self.diagonal
        return (
            (lam0, mu0),
            (lam0, mu0 + a),
            (lam0 + b, mu0 + b),
            (lam0 + b, mu0 + a + b),
        )

    def lower_right(self) -> tuple[int, int]:
        """The vertex with maximal lambda, then minimal mu."""
        return max(self.vertices(), key=lambda v: (v[0], -v[1]))


@dataclass(frozen=True)
class TeixidorCheck:
    valid: bool
    all_above: bool
    lower_right_on_curve: bool


def validate_teixidor(g: int, pg: Parallelogram) -> TeixidorCheck:
    """Check the geometric admissibility conditions on a parallelogram:
    every vertex on or above the vanishing hyperbola, strictness, and
    whether the lower-right vertex sits exactly on it."""
    if g < 2:
        raise ValueError("g must be ≥ 2")
    values = {
        v: _core.rho_tilde(g, SlopeCoords(Fraction(v[0]), Fraction(v[1])))
        for v in pg.vertices()
    }
    return TeixidorCheck(
        valid=all(rv >= 0 for rv in values.values()),
        all_above=all(rv > 0 for rv in values.values()),
        lower_right_on_curve=values[pg.lower_right()] == 0,
    )


def hyperbola_mu(g: int, lam: Fraction) -> Fraction:
    """mu with rho_tilde(lambda, mu) = 0: mu = lambda + (g-1) - (g-1)/lambda."""
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError("lambda must be > 0 on the hyperbola branch")
    return lam + (g - 1) - Fraction(g - 1, 1) / lam


# ---------------------------------------------------------------------------
# map document and SVG serialization

CANVAS_W = 800
CANVAS_H = 600
MARGIN_X = 80  # 10% each side
MARGIN_Y = 60

BOUNDARY_NAMES = ("riemann-roch", "clifford", "special-ceiling", "bn-curve", "tangent")

_SVG_STYLE = """\
<style>
  .bg { fill: #ffffff; }
  .frame line { stroke: #404040; stroke-width: 1; }
  .frame text { font: 11px sans-serif; fill: #404040; }
  .boundary { fill: none; stroke-width: 1.5; }
  .riemann-roch { stroke: #1f77b4; }
  .clifford { stroke: #d62728; }
  .special-ceiling { stroke: #7f7f7f; stroke-dasharray: 6 3; }
  .bn-curve { stroke: #2ca02c; }
  .tangent { stroke: #9467bd; stroke-dasharray: 3 3; }
  .parallelogram { fill: #ffe9a8; fill-opacity: 0.5; stroke: #b8860b; }
  .stable-nonempty { fill: #2a7f2a; }
  .semistable-nonempty { fill: #e0a000; }
  .empty { fill: #c0392b; }
  .label { font: 12px sans-serif; fill: #202020; }
</style>"""


@dataclass(frozen=True)
class Layer:
    """One drawable primitive; vertices are exact world coordinates."""

    kind: str  # "line" | "curve" | "parallelogram" | "point" | "label"
    name: str
    vertices: tuple[tuple[Fraction, Fraction], ...]
    label: Optional[str] = None
    style: str = ""


@dataclass(frozen=True)
class Viewport:
    lam_min: Fraction
    lam_max: Fraction
    mu_min: Fraction
    mu_max: Fraction


@dataclass(frozen=True)
class MapDocument:
    genus: int
    viewport: Viewport
    layers: tuple[Layer, ...]

    def layer(self, name: str) -> Layer:
        for layer in self.layers:
            if layer.name == name:
                return layer
        raise KeyError(name)

    def _screen(self, lam: Fraction, mu: Fraction) -> tuple[Fraction, Fraction]:
        vp = self.viewport
        sx = MARGIN_X + (lam - vp.lam_min) / (vp.lam_max - vp.lam_min) * (
            CANVAS_W - 2 * MARGIN_X
        )
        sy = (
            CANVAS_H
            - MARGIN_Y
            - (mu - vp.mu_min) / (vp.mu_max - vp.mu_min) * (CANVAS_H - 2 * MARGIN_Y)
        )
        return sx, sy

    def to_svg(self) -> str:
        out = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{CANVAS_W}" height="{CANVAS_H}" viewBox="0 0 {CANVAS_W} {CANVAS_H}">',
            _SVG_STYLE,
            f'<rect class="bg" x="0" y="0" width="{CANVAS_W}" height="{CANVAS_H}"/>',
        ]
        out.extend(self._frame_svg())
        for layer in self.layers:
            out.extend(self._layer_svg(layer))
        out.append("</svg>")
        return "\n".join(out) + "\n"

    def _frame_svg(self) -> list[str]:
        vp = self.viewport
        out = ['<g class="frame">']
        x0, y0 = self._screen(vp.lam_min, vp.mu_min)
        x1, _ = self._screen(vp.lam_max, vp.mu_min)
        _, y1 = self._screen(vp.lam_min, vp.mu_max)
        out.append(_line(x0, y0, x1, y0))
        out.append(_line(x0, y0, x0, y1))
        lam_tick = int(vp.lam_min)
        while lam_tick <= vp.lam_max:
            if lam_tick >= vp.lam_min:
                tx, _ = self._screen(Fraction(lam_tick), vp.mu_min)
                out.append(_line(tx, y0, tx, y0 + 5))
                out.append(_text(tx - 3, y0 + 18, str(lam_tick)))
            lam_tick += 1
        mu_tick = int(vp.mu_min)
        while mu_tick <= vp.mu_max:
            if mu_tick >= vp.mu_min:
                _, ty = self._screen(vp.lam_min, Fraction(mu_tick))
                out.append(_line(x0 - 5, ty, x0, ty))
                out.append(_text(x0 - 20, ty + 4, str(mu_tick)))
            mu_tick += 1
        out.append(_text(x1 + 10, y0 + 4, "λ"))
        out.append(_text(x0 - 6, y1 - 10, "μ"))
        out.append("</g>")
        return out

    def _layer_svg(self, layer: Layer) -> list[str]:
        pts = [self._screen(lam, mu) for lam, mu in layer.vertices]
        css = layer.style or layer.name
        out = [f'<g id="{layer.name}">']
        if layer.kind == "line" and len(pts) == 2:
            out.append(_line(*pts[0], *pts[1], cls=f"boundary {css}"))
        elif layer.kind == "curve":
            coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
            out.append(f'<polyline class="boundary {css}" points="{coords}"/>')
        elif layer.kind == "parallelogram":
            coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
            out.append(f'<polygon class="parallelogram" points="{coords}"/>')
        elif layer.kind == "point":
            x, y = pts[0]
            out.append(f'<circle class="{css}" cx="{_fmt(x)}" cy="{_fmt(y)}" r="4"/>')
        if layer.label is not None and pts:
            lx, ly = pts[-1]
            if layer.kind == "label":
                out.append(_text(lx, ly, layer.label))
            else:
                out.append(_text(lx + 5, ly - 5, layer.label))
        out.append("</g>")
        return out


def _fmt(x: Fraction) -> str:
    return f"{float(x):.6f}"


def _line(x0, y0, x1, y1, cls: Optional[str] = None) -> str:
    attr = f' class="{cls}"' if cls else ""
    return (
        f"<line{attr} x1=\"{_fmt(x0)}\" y1=\"{_fmt(y0)}\" "
        f"x2=\"{_fmt(x1)}\" y2=\"{_fmt(y1)}\"/>"
    )


def _text(x, y, s: str) -> str:
    return f'<text class="label" x="{_fmt(x)}" y="{_fmt(y)}">{s}</text>'


def _clip_line(
    u: int, v: int, w: int, vp: Viewport
) -> Optional[tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]]:
    """Clip the line u*lambda + v*mu = w to the viewport, exactly."""
    pts = set()
    if v != 0:
        for lam in (vp.lam_min, vp.lam_max):
            mu = Fraction(w - u * lam, v)
            if vp.mu_min <= mu <= vp.mu_max:
                pts.add((Fraction(lam), mu))
    if u != 0:
        for mu in (vp.mu_min, vp.mu_max):
            lam = Fraction(w - v * mu, u)
            if vp.lam_min <= lam <= vp.lam_max:
                pts.add((lam, Fraction(mu)))
    if len(pts) < 2:
        return None
    ordered = sorted(pts)
    return ordered[0], ordered[-1]


def _boundary_layers(g: int, vp: Viewport, curve_step: Fraction) -> list[Layer]:
    layers = []
    lines = [
        ("riemann-roch", -1, 1, g - 1, f"μ = λ + {g - 1}"),
        ("clifford", -2, 1, -2, "μ = 2λ − 2"),
        ("special-ceiling", 0, 1, 2 * g - 2, f"μ = {2 * g - 2}"),
    ]
    for name, u, v, w, text in lines:
        seg = _clip_line(u, v, w, vp)
        if seg is not None:
            layers.append(Layer("line", name, seg, label=text))
    verts = []
    lam = curve_step
    while lam <= vp.lam_max:
        if lam >= vp.lam_min and lam > 0:
            mu = hyperbola_mu(g, lam)
            if vp.mu_min <= mu <= vp.mu_max:
                verts.append((lam, mu))
        lam += curve_step
    if verts:
        layers.append(Layer("curve", "bn-curve", tuple(verts), label="ρ̃ = 0"))
    u, v, w = tangent_line(g)
    seg = _clip_line(u, v, w, vp)
    if seg is not None:
        layers.append(Layer("line", "tangent", seg, label=f"μ + (1−λ)·{g} = 1"))
    return layers


def _overlay_layers(g: int, n: int) -> list[Layer]:
    layers = []
    for row in _classify.scan_strip(g, n):
        p = row.point
        if row.stable.non_empty:
            style = "stable-nonempty"
        elif row.semistable.non_empty:
            style = "semistable-nonempty"
        else:
            style = "empty"
        layers.append(
            Layer(
                "point",
                f"locus-d{p.d}-k{p.k}",
                ((Fraction(p.k, n), Fraction(p.d, n)),),
                style=style,
            )
        )
    return layers


def _legend_layers(vp: Viewport) -> list[Layer]:
    x = vp.lam_min + (vp.lam_max - vp.lam_min) * Fraction(7, 10)
    dy = (vp.mu_max - vp.mu_min) * Fraction(1, 18)
    entries = [
        ("legend-stable", "● stable non-empty"),
        ("legend-semistable", "● semistable only"),
        ("legend-empty", "● empty"),
    ]
    return [
        Layer(
            "label",
            name,
            ((x, vp.mu_max - dy * (idx + 1)),),
            label=text,
            style="label",
        )
        for idx, (name, text) in enumerate(entries)
    ]


def render_map(
    g: int,
    *,
    strip_only: bool = False,
    parallelograms: Sequence[Parallelogram] = (),
    overlay_n: Optional[int] = None,
    curve_step: Fraction = Fraction(1, 100),
) -> MapDocument:
    """Assemble the geography map for genus g.

    The full map shows the first-quadrant window containing the special
    pentagon; strip_only restricts to 0 <= mu <= 1.  Optional layers:
    admissibility parallelograms (labeled T) and a classification overlay
    for a chosen rank.  All geometry is exact; rendering is deterministic.
    """
    if g < 2:
        raise ValueError("g must be ≥ 2")
    if curve_step <= 0:
        raise ValueError("curve_step must be > 0")
    if strip_only:
        vp = Viewport(Fraction(0), Fraction(3, 2), Fraction(0), Fraction(1))
    else:
        vp = Viewport(Fraction(0), Fraction(g + 1), Fraction(0), Fraction(2 * g - 1))
    layers = _boundary_layers(g, vp, Fraction(curve_step))
    if not strip_only:
        layers.append(
            Layer(
                "label",
                "region-whole-space",
                ((vp.lam_max * Fraction(1, 8), vp.mu_max * Fraction(15, 16)),),
                label="whole space",
            )
        )
        layers.append(
            Layer(
                "label",
                "region-empty",
                ((vp.lam_max * Fraction(7, 8), vp.mu_max * Fraction(1, 16)),),
                label="empty",
            )
        )
    for idx, pg in enumerate(parallelograms):
        verts = pg.vertices()
        polygon = (verts[0], verts[1], verts[3], verts[2])
        layers.append(
            Layer(
                "parallelogram",
                f"teixidor-{idx}",
                tuple((Fraction(a), Fraction(b)) for a, b in polygon),
                label="T",
            )
        )
    if overlay_n is not None:
        if overlay_n < 2:
            raise ValueError("overlay rank must be ≥ 2")
        layers.extend(_overlay_layers(g, overlay_n))
        layers.extend(_legend_layers(vp))
    return MapDocument(genus=g, viewport=vp, layers=tuple(layers))
