"""Motifs: vector primitives living in one fundamental cell of the strip.

A motif occupies the half-open cell ``[0, cell_width) x [-h, h]``.  The
line-oriented text format::

    cell 2 height 1
    polygon filled shade=0 0,0 1/2,0 0,3/4
    polyline shade=0 width=1/16 0,0 1/4,1/2 1/2,0

All coordinates are exact rationals.  Polylines carry a thickness
(``width``); they are rasterized as vertically thickened bands so that
every strip isometry maps a band to a band exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import List, Tuple

from .errors import MalformedMotif, OutOfCell

Point = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Primitive:
    shape: str  # "polygon" | "polyline"
    points: Tuple[Point, ...]
    filled: bool = True
    shade: int = 0
    width: Fraction = Fraction(1, 16)  # band thickness for polylines

    def band_polygon(self) -> Tuple[Point, ...]:
        """Vertical thickening of a polyline into a simple polygon.

        Vertical (rather than normal) offsetting commutes exactly with
        every strip isometry, which keeps stamped rasters symmetric.
        """
        w = self.width / 2
        top = [(x, y + w) for x, y in self.points]
        bottom = [(x, y - w) for x, y in reversed(self.points)]
        return tuple(top + bottom)


@dataclass(frozen=True)
class Motif:
    primitives: Tuple[Primitive, ...]
    cell_width: Fraction
    strip_halfheight: Fraction

    def __post_init__(self):
        if not self.primitives:
            raise MalformedMotif("motif needs at least one primitive")
        if self.cell_width <= 0 or self.strip_halfheight <= 0:
            raise MalformedMotif("cell width and strip halfheight must be positive")


def _frac(tok: str, what: str) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise MalformedMotif(f"bad {what}: {tok!r}") from None


def parse_motif(text) -> Motif:
    """Parse motif text (str or UTF-8 bytes) and validate all ranges.

    Points must satisfy ``0 <= x < cell_width`` (half-open seam) and
    ``|y| <= h``; violations raise :class:`OutOfCell`.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise MalformedMotif(f"not UTF-8: {e}") from None
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise MalformedMotif("empty motif")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "cell" or head[2] != "height":
        raise MalformedMotif(f"expected 'cell W height H', got {lines[0]!r}")
    cell = _frac(head[1], "cell width")
    h = _frac(head[3], "strip halfheight")
    if cell <= 0 or h <= 0:
        raise MalformedMotif("cell width and height must be positive")

    prims: List[Primitive] = []
    for ln in lines[1:]:
        toks = ln.split()
        shape = toks[0]
        if shape not in ("polygon", "polyline"):
            raise MalformedMotif(f"unknown primitive {shape!r}")
        filled = shape == "polygon"
        shade = 0
        width = Fraction(1, 16)
        i = 1
        while i < len(toks) and "," not in toks[i]:
            t = toks[i]
            if t == "filled":
                filled = True
            elif t.startswith("shade="):
                try:
                    shade = int(t[6:])
                except ValueError:
                    raise MalformedMotif(f"bad shade: {t!r}") from None
                if not 0 <= shade <= 255:
                    raise MalformedMotif(f"shade out of range 0..255: {shade}")
            elif t.startswith("width="):
                width = _frac(t[6:], "width")
                if width <= 0:
                    raise MalformedMotif("width must be positive")
            else:
                raise MalformedMotif(f"unknown attribute {t!r}")
            i += 1
        pts = []
        for t in toks[i:]:
            xy = t.split(",")
            if len(xy) != 2:
                raise MalformedMotif(f"bad point {t!r}")
            x, y = _frac(xy[0], "x"), _frac(xy[1], "y")
            if not 0 <= x < cell:
                raise OutOfCell(f"x={x} outside [0, {cell})")
            if abs(y) > h:
                raise OutOfCell(f"y={y} outside [-{h}, {h}]")
            pts.append((x, y))
        if len(pts) < 2 or (shape == "polygon" and len(pts) < 3):
            raise MalformedMotif(f"too few points in {shape}")
        prims.append(Primitive(shape, tuple(pts), filled, shade, width))
    return Motif(tuple(prims), cell, h)


def format_motif(m: Motif) -> str:
    out = [f"cell {m.cell_width} height {m.strip_halfheight}"]
    for p in m.primitives:
        toks = [p.shape]
        if p.shape == "polygon" and p.filled:
            toks.append("filled")
        toks.append(f"shade={p.shade}")
        if p.shape == "polyline":
            toks.append(f"width={p.width}")
        toks.extend(f"{x},{y}" for x, y in p.points)
        out.append(" ".join(toks))
    return "\n".join(out) + "\n"


def asymmetric_flag_motif() -> Motif:
    """The bundled asymmetric motif: right triangle plus an off-center dot.

    Has no self-symmetry, so a frieze stamped from it has exactly the
    requested group (no accidental supergroup).
    """
    data = resources.files("friezelab.data").joinpath("flag.motif").read_bytes()
    return parse_motif(data)


def sinusoid_motif(segments: int = 64) -> Motif:
    """A polyline approximation of one period of ``y = sin(2*pi*x/tau)``.

    The period is the rational surrogate 44/7 for 2*pi.  Sample heights are
    built from one rounded quarter-wave table and extended by the exact
    identities sin(pi - t) = sin t and sin(t + pi) = -sin t, so the motif
    is exactly symmetric under the half-turn at the zero crossings, the
    mirrors at the extrema and the half-period glide.

    The closing point sits at ``x = tau``; translated stamps overlap there
    in a single column, which is harmless for same-shade rendering and
    keeps the thickened band seamless.
    """
    if segments % 4 != 0:
        raise ValueError("segments must be a multiple of 4")
    tau = Fraction(44, 7)
    amp = Fraction(7, 8)
    q = 64
    quarter = segments // 4
    half = segments // 2
    table = [round(q * math.sin(math.pi * k / (2 * quarter))) for k in range(quarter + 1)]
    s = [0] * (segments + 1)
    for k in range(quarter + 1):
        s[k] = table[k]
        s[half - k] = table[k]
    for k in range(half + 1):
        s[half + k] = -s[k]
    pts = tuple(
        (Fraction(k, segments) * tau, amp * Fraction(s[k], q))
        for k in range(segments + 1)
    )
    prim = Primitive("polyline", pts, filled=False, shade=0, width=Fraction(1, 8))
    return Motif((prim,), tau, Fraction(1))
