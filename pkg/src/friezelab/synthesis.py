"""Stamp a motif with frieze-group elements and render to SVG or raster.

The scene is the infinite frieze restricted to ``[0, n*tau) x [-h, h]``:
every group element whose image of the fundamental cell meets the window
contributes a stamp.  Rasterization samples that restriction on an exact
integer lattice, so the pixel pattern is exactly periodic and exactly
invariant under the group (up to cyclic horizontal identification).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

import numpy as np

from .errors import NonIntegralRaster, PeriodMismatch
from .group import FriezeGroup, _family_in_window
from .image import Image
from .isometry import Kind, R, S, StripIsometry, T, V, canonical
from .motif import Motif


@dataclass(frozen=True)
class Scene:
    """A motif stamped by group elements over an n-period window."""

    motif: Motif
    group: FriezeGroup
    n_periods: int
    placed: Tuple[Tuple[StripIsometry, int], ...]

    @property
    def extent_width(self) -> Fraction:
        return self.n_periods * self.group.period

    @property
    def halfheight(self) -> Fraction:
        return self.motif.strip_halfheight


def _stamp_elements(g: FriezeGroup, n: int) -> List[StripIsometry]:
    """Group elements whose image of the cell [0, tau) meets [0, n*tau).

    Translations/glides map the cell to [t, t+tau); half-turns and mirrors
    to (2c-tau, 2c].  Elements are returned sorted by (kind, parameter).
    """
    tau = g.period
    window = n * tau
    out: List[StripIsometry] = []
    for k in range(n):
        out.append(T(k * tau))
    # half-turns and mirrors: need 2c >= 0 and 2c - tau < n*tau
    hi = (n + 1) * tau / 2
    if g.rot_anchor is not None:
        out.extend(R(c) for c in _family_in_window(g.rot_anchor, tau / 2, Fraction(0), hi))
    if g.mirror_anchor is not None:
        out.extend(V(c) for c in _family_in_window(g.mirror_anchor, tau / 2, Fraction(0), hi))
    if g.glide_phase == "zero":
        glides = [k * tau for k in range(n)]
    elif g.glide_phase == "half":
        glides = [(Fraction(2 * k + 1, 2)) * tau for k in range(-1, n)]
        glides = [t for t in glides if -tau < t < window]
    else:
        glides = []
    out.extend(S(t) for t in glides)
    out.sort(key=lambda p: (p.kind.order, p.param))
    return out


def generate(m: Motif, g: FriezeGroup, n_periods: int) -> Scene:
    """Stamp motif m with the elements of g over n periods."""
    if n_periods < 1:
        raise ValueError("n_periods must be positive")
    if g.period != m.cell_width:
        raise PeriodMismatch(
            f"group period {g.period} != motif cell width {m.cell_width}"
        )
    elements = _stamp_elements(g, n_periods)
    placed = tuple(
        (e, i) for e in elements for i in range(len(m.primitives))
    )
    return Scene(m, g, n_periods, placed)


def _num(v) -> str:
    f = float(v)
    if f == int(f):
        return str(int(f))
    return repr(f)


def render_svg(s: Scene, scale: int = 40) -> str:
    """Deterministic SVG 1.1 text for a scene (y axis flipped to screen)."""
    w = s.extent_width
    h = s.halfheight
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_num(w * scale)}" height="{_num(2 * h * scale)}" '
        f'viewBox="0 0 {_num(w)} {_num(2 * h)}">',
        f'<rect x="0" y="0" width="{_num(w)}" height="{_num(2 * h)}" fill="white"/>',
        f'<g transform="translate(0,{_num(h)}) scale(1,-1)">',
    ]
    for iso, idx in s.placed:
        prim = s.motif.primitives[idx]
        form = canonical(iso)
        pts = [form.apply(p) for p in prim.points]
        d = "M " + " L ".join(f"{_num(x)},{_num(y)}" for x, y in pts)
        color = f"rgb({prim.shade},{prim.shade},{prim.shade})"
        if prim.shape == "polygon" and prim.filled:
            lines.append(f'<path d="{d} Z" fill="{color}" stroke="none"/>')
        else:
            closing = " Z" if prim.shape == "polygon" else ""
            lines.append(
                f'<path d="{d}{closing}" fill="none" stroke="{color}" '
                f'stroke-width="{_num(prim.width)}"/>'
            )
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _fill_polygon(canvas, xs_int, ys_int, verts, shade):
    """Paint a closed polygon (boundary inclusive) onto the sample canvas.

    All coordinates are exact integers on a common lattice; membership is
    crossing parity or lying on an edge, both decided without division.
    """
    vx = np.array([v[0] for v in verts], dtype=np.int64)
    vy = np.array([v[1] for v in verts], dtype=np.int64)
    j0 = int(np.searchsorted(xs_int, vx.min(), side="left"))
    j1 = int(np.searchsorted(xs_int, vx.max(), side="right"))
    # ys_int is descending (row 0 on top)
    ys_desc = ys_int
    i_candidates = np.nonzero((ys_desc >= vy.min()) & (ys_desc <= vy.max()))[0]
    if j1 <= j0 or i_candidates.size == 0:
        return
    i0, i1 = int(i_candidates.min()), int(i_candidates.max()) + 1
    X = xs_int[j0:j1][np.newaxis, :]
    Y = ys_desc[i0:i1][:, np.newaxis]
    parity = np.zeros((i1 - i0, j1 - j0), dtype=bool)
    on_edge = np.zeros_like(parity)
    n = len(verts)
    for k in range(n):
        x1, y1 = int(vx[k]), int(vy[k])
        x2, y2 = int(vx[(k + 1) % n]), int(vy[(k + 1) % n])
        if y1 == y2:
            if x1 != x2:
                lo, hi = (x1, x2) if x1 < x2 else (x2, x1)
                on_edge |= (Y == y1) & (X >= lo) & (X <= hi)
            continue
        t = (X - x1) * (y2 - y1) - (x2 - x1) * (Y - y1)
        crosses = (y1 > Y) != (y2 > Y)
        if y2 > y1:
            parity ^= crosses & (t < 0)
        else:
            parity ^= crosses & (t > 0)
        lo, hi = (x1, x2) if x1 < x2 else (x2, x1)
        ylo, yhi = (y1, y2) if y1 < y2 else (y2, y1)
        on_edge |= (t == 0) & (X >= lo) & (X <= hi) & (Y >= ylo) & (Y <= yhi)
    inside = parity | on_edge
    region = canvas[i0:i1, j0:j1]
    region[inside] = shade


def rasterize(s: Scene, px_per_unit: int, supersample: int = 1) -> Image:
    """Box-sampled grayscale raster of the scene.

    Width is ``n*tau*px`` and height ``2h*px`` pixels; both must come out
    integral (:class:`NonIntegralRaster` otherwise), which makes the pixel
    period exactly ``tau*px``.
    """
    if px_per_unit < 1:
        raise ValueError("px_per_unit must be positive")
    if supersample not in (1, 2, 4):
        raise ValueError("supersample must be 1, 2 or 4")
    w_units = s.extent_width
    h = s.halfheight
    w_px = w_units * px_per_unit
    h_px = 2 * h * px_per_unit
    if w_px.denominator != 1 or h_px.denominator != 1:
        raise NonIntegralRaster(
            f"px_per_unit={px_per_unit} does not clear denominators "
            f"(width {w_px}, height {h_px})"
        )
    w_px, h_px = int(w_px), int(h_px)
    ss = supersample

    # transform all primitives up front to fix the common denominators
    polygons = []  # (vertices in exact model coords, shade)
    for iso, idx in s.placed:
        prim = s.motif.primitives[idx]
        pts = prim.band_polygon() if prim.shape == "polyline" else prim.points
        form = canonical(iso)
        verts = [form.apply(p) for p in pts]
        if prim.shape == "polygon" and not prim.filled:
            w2 = prim.width / 2
            # outline polygon: thicken each edge as its own band
            for k in range(len(verts)):
                (xa, ya), (xb, yb) = verts[k], verts[(k + 1) % len(verts)]
                polygons.append(
                    (
                        [(xa, ya + w2), (xb, yb + w2), (xb, yb - w2), (xa, ya - w2)],
                        prim.shade,
                    )
                )
        else:
            polygons.append((verts, prim.shade))

    dx = 1
    dy = 1
    for verts, _ in polygons:
        for x, y in verts:
            dx = dx * x.denominator // math.gcd(dx, x.denominator)
            dy = dy * y.denominator // math.gcd(dy, y.denominator)
    mx = 2 * ss * px_per_unit * dx  # x scale to the integer sample lattice
    my = 2 * ss * px_per_unit * dy

    ws, hs = w_px * ss, h_px * ss
    # sample j has x = (2j+1)/(2*ss*px); row i has y = h - (2i+1)/(2*ss*px)
    xs_int = (2 * np.arange(ws, dtype=np.int64) + 1) * dx
    ys_int = (hs - (2 * np.arange(hs, dtype=np.int64) + 1)) * dy

    canvas = np.full((hs, ws), 255, dtype=np.uint8)
    for verts, shade in polygons:
        iverts = []
        for x, y in verts:
            xi = x * mx
            yi = y * my
            assert xi.denominator == 1 and yi.denominator == 1
            iverts.append((int(xi), int(yi)))
        _fill_polygon(canvas, xs_int, ys_int, iverts, shade)

    if ss == 1:
        pixels = canvas
    else:
        blocks = canvas.reshape(h_px, ss, w_px, ss).astype(np.uint32)
        total = blocks.sum(axis=(1, 3))
        pixels = ((total + ss * ss // 2) // (ss * ss)).astype(np.uint8)
    return Image(pixels)
