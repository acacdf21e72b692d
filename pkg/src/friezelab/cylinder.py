"""Frieze-to-cylinder correspondence: cut n periods and glue the ends.

Wrapping turns each frieze symmetry family into a cylinder symmetry:

* translation by the period -> rotation by 2*pi/n about the cylinder axis
* half-turn -> 180 degree turn about a horizontal axis through the center
* vertical mirror -> mirror plane through the cylinder axis
* horizontal reflection S(0) -> horizontal mirror plane
* proper glide -> rotoreflection (horizontal mirror followed by a turn)

Conventional point-group labels (Cn, Cnv, Cnh, Dn, Dnd, Dnh, S2n) are
attached as a convenience and marked as such; presence/absence of each
operation is the load-bearing output.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .group import TypeTag
from .image import Image

_FAMILY = {
    TypeTag.T: "Cn",
    TypeTag.TV: "Cnv",
    TypeTag.TS0: "Cnh",
    TypeTag.TR: "Dn",
    TypeTag.TRVSg: "Dnd",
    TypeTag.TRVS0: "Dnh",
    TypeTag.TSg: "S2n",
}


@dataclass(frozen=True)
class CylinderReport:
    """Symmetry operations of a cylinder wrapped from an n-period frieze."""

    tag: TypeTag
    n: int
    halfturn_axes: int
    mirror_planes: int
    horizontal_plane: bool
    rotoreflection: bool

    @property
    def family(self) -> str:
        return _FAMILY[self.tag]

    @property
    def label(self) -> str:
        """Conventional point-group name (not claimed beyond convention)."""
        if self.family == "S2n":
            return f"S{2 * self.n}"
        return self.family.replace("n", str(self.n), 1)

    @property
    def profile(self):
        """Presence profile, independent of n."""
        return (
            self.halfturn_axes > 0,
            self.mirror_planes > 0,
            self.horizontal_plane,
            self.rotoreflection,
        )


def wrap_report(tag: TypeTag, n: int) -> CylinderReport:
    """Cylinder symmetries of an n-period wrap of a frieze of this type."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return CylinderReport(
        tag=tag,
        n=n,
        halfturn_axes=n if tag.has_rotation else 0,
        mirror_planes=n if tag.has_vertical_mirror else 0,
        horizontal_plane=tag.has_horizontal_reflection,
        rotoreflection=tag.has_proper_glide,
    )


def format_cylinder_report(r: CylinderReport) -> str:
    yn = {True: "yes", False: "no"}
    return (
        f"n={r.n} {r.family}: rot=2pi/{r.n} mirrors={r.mirror_planes} "
        f"halfturns={r.halfturn_axes} hplane={yn[r.horizontal_plane]} "
        f"rotoreflection={yn[r.rotoreflection]} label={r.label}"
    )


def wrap_texture(img: Image, n: int) -> Image:
    """n horizontal copies of a one-period image, ends marked as glued."""
    if n < 1:
        raise ValueError("n must be at least 1")
    tiled = np.tile(img.pixels, (1, n))
    return Image(tiled, comment="cyclic: left and right edges identified")
