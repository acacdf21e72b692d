"""Frieze groups: closure from generators, the seven types, element queries.

A frieze group is an infinite discrete group of strip symmetries containing
a minimal nonzero translation (the period tau).  There are exactly seven
types; each is identified here both by a tag naming its generating
symmetries and by the conventional crystallographic short symbol.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Optional

from .errors import InconsistentFlags, NotAFrieze
from .isometry import (
    Kind,
    R,
    S,
    StripIsometry,
    T,
    V,
    canonical,
)


class TypeTag(Enum):
    """The seven frieze types.

    Values are the crystallographic aliases; :attr:`bracket` gives the
    generator-set name like ``<T,R,V,S'>``.
    """

    T = "p1"
    TR = "p2"
    TV = "p1m1"
    TS0 = "p11m"
    TSg = "p11g"
    TRVS0 = "p2mm"
    TRVSg = "p2mg"

    @property
    def crystallographic(self) -> str:
        return self.value

    @property
    def bracket(self) -> str:
        return _BRACKET[self]

    @property
    def has_rotation(self) -> bool:
        return self in (TypeTag.TR, TypeTag.TRVS0, TypeTag.TRVSg)

    @property
    def has_vertical_mirror(self) -> bool:
        return self in (TypeTag.TV, TypeTag.TRVS0, TypeTag.TRVSg)

    @property
    def has_horizontal_reflection(self) -> bool:
        return self in (TypeTag.TS0, TypeTag.TRVS0)

    @property
    def has_proper_glide(self) -> bool:
        return self in (TypeTag.TSg, TypeTag.TRVSg)


_BRACKET = {
    TypeTag.T: "<T>",
    TypeTag.TR: "<T,R>",
    TypeTag.TV: "<T,V>",
    TypeTag.TS0: "<T,S0>",
    TypeTag.TSg: "<T,S'>",
    TypeTag.TRVS0: "<T,R,V,S0>",
    TypeTag.TRVSg: "<T,R,V,S'>",
}

# accepted spellings on input, lowercased
_TAG_ALIASES = {}
for _tag in TypeTag:
    _TAG_ALIASES[_tag.name.lower()] = _tag
    _TAG_ALIASES[_tag.value.lower()] = _tag
    _TAG_ALIASES[_tag.bracket.lower()] = _tag
    _TAG_ALIASES[_tag.bracket.lower().replace("s0", "s_0")] = _tag


def parse_tag(text: str) -> TypeTag:
    """Accept tag names (``TRVSg``), aliases (``p2mg``) or ``<T,R,V,S'>``."""
    key = text.strip().lower().replace(" ", "")
    try:
        return _TAG_ALIASES[key]
    except KeyError:
        raise ValueError(f"unknown frieze type tag: {text!r}") from None


@dataclass(frozen=True)
class SymmetryFlags:
    """Which non-translation symmetry families a frieze has."""

    has_rotation: bool = False
    has_vertical_mirror: bool = False
    has_horizontal_reflection: bool = False
    has_proper_glide: bool = False


def tag_from_flags(f: SymmetryFlags) -> TypeTag:
    """Decision table from symmetry flags to the seven types.

    The compact multiplication table forces R o S = V, S o V = R and
    V o R = S, so any two of {rotation, vertical mirror, glide family}
    imply the third; a horizontal reflection and a proper glide cannot
    coexist (their product would be a translation shorter than the period).
    """
    r = f.has_rotation
    v = f.has_vertical_mirror
    s0 = f.has_horizontal_reflection
    sg = f.has_proper_glide
    if s0 and sg:
        raise InconsistentFlags("horizontal reflection and proper glide both set")
    sfam = s0 or sg
    if (r + v + sfam) == 2:
        raise InconsistentFlags(
            "two of {rotation, vertical mirror, glide family} without the third"
        )
    if not (r or v or sfam):
        return TypeTag.T
    if r and not v:
        return TypeTag.TR
    if v and not r:
        return TypeTag.TV
    if not r:  # glide family alone
        return TypeTag.TS0 if s0 else TypeTag.TSg
    return TypeTag.TRVS0 if s0 else TypeTag.TRVSg


def _frac_gcd(a: Fraction, b: Fraction) -> Fraction:
    """gcd on rationals: gcd(a/b, c/d) = gcd(ad, cb) / bd."""
    if a == 0:
        return abs(b)
    if b == 0:
        return abs(a)
    return Fraction(
        math.gcd(a.numerator * b.denominator, b.numerator * a.denominator),
        a.denominator * b.denominator,
    )


@dataclass(frozen=True)
class FriezeGroup:
    """A classified frieze group.

    Anchors are stored reduced into [0, period/2), since rotation centers
    and mirror axes each form a period/2-spaced family.  ``glide_phase`` is
    ``"zero"`` when the glides are S(n*tau) (so S(0) is in the group),
    ``"half"`` when they are S((n+1/2)*tau), ``"none"`` when there are no
    glides at all.
    """

    tag: TypeTag
    period: Fraction
    rot_anchor: Optional[Fraction] = None
    mirror_anchor: Optional[Fraction] = None
    glide_phase: str = "none"

    def __post_init__(self):
        if self.period <= 0:
            raise ValueError("period must be positive")
        if self.glide_phase not in ("none", "zero", "half"):
            raise ValueError(f"bad glide_phase: {self.glide_phase!r}")

    @property
    def flags(self) -> SymmetryFlags:
        return SymmetryFlags(
            has_rotation=self.rot_anchor is not None,
            has_vertical_mirror=self.mirror_anchor is not None,
            has_horizontal_reflection=self.glide_phase == "zero",
            has_proper_glide=self.glide_phase == "half",
        )


def standard_group(tag: TypeTag, period, anchor=0) -> FriezeGroup:
    """The canonical group of a given type, period and anchor.

    Rotation centers (where present) sit at ``anchor + n*period/2``;
    mirror axes coincide with them for TRVS0/TV and are offset by a
    quarter period for TRVSg.
    """
    tau = Fraction(period)
    if tau <= 0:
        raise ValueError("period must be positive")
    a = Fraction(anchor)
    half = tau / 2
    rot = a % half if tag.has_rotation else None
    if tag.has_vertical_mirror:
        mirror = (a + tau / 4) % half if tag is TypeTag.TRVSg else a % half
    else:
        mirror = None
    if tag.has_horizontal_reflection:
        phase = "zero"
    elif tag.has_proper_glide:
        phase = "half"
    else:
        phase = "none"
    return FriezeGroup(tag, tau, rot, mirror, phase)


def standard_generators(tag: TypeTag, period, anchor=0) -> List[StripIsometry]:
    """A minimal generator set reproducing standard_group(tag, period, anchor)."""
    tau = Fraction(period)
    a = Fraction(anchor)
    gens = [T(tau)]
    if tag.has_rotation:
        gens.append(R(a))
    if tag is TypeTag.TV:
        gens.append(V(a))
    if tag.has_horizontal_reflection:
        gens.append(S(0))
    if tag.has_proper_glide:
        gens.append(S(tau / 2))
    return gens


def from_generators(gens: Iterable[StripIsometry]) -> FriezeGroup:
    """Close a finite generator set and classify the resulting frieze group.

    Works on canonical forms.  Per orientation class (sigma, mu) != (1, 1)
    one representative offset is kept; any two members of a class differ by
    a translation, so each class is representative + lattice.  The
    translation lattice is the rational gcd of every translation component
    produced; it only ever refines, and all offsets live on a fixed
    denominator lattice, so the iteration reaches a fixpoint.

    Raises :class:`NotAFrieze` when the closure contains no nonzero
    translation (a finite group, e.g. a single mirror).
    """
    forms = [canonical(g) for g in gens]
    if not forms:
        raise ValueError("generator list must be nonempty")

    lattice = Fraction(0)  # gcd of translation components; 0 = none yet
    reps = {}  # (sigma, mu) != (1,1) -> representative offset c

    def absorb(sigma: int, mu: int, c: Fraction) -> bool:
        """Feed one element into the state; return True if anything changed."""
        nonlocal lattice
        if (sigma, mu) == (1, 1):
            new = _frac_gcd(lattice, c)
            if new != lattice:
                lattice = new
                return True
            return False
        key = (sigma, mu)
        if key not in reps:
            reps[key] = c
            return True
        d = c - reps[key]
        new = _frac_gcd(lattice, d)
        if new != lattice:
            lattice = new
            return True
        return False

    for f in forms:
        absorb(f.sigma, f.mu, f.c)

    changed = True
    while changed:
        changed = False
        # current finite stand-ins: class representatives and, when a
        # lattice exists, one nonzero translation
        current = [((s, m), c) for (s, m), c in reps.items()]
        current.append(((1, 1), lattice))
        for (s1, m1), c1 in current:
            for (s2, m2), c2 in current:
                # product and product-with-inverse cover all new offsets
                if absorb(s1 * s2, m1 * m2, s1 * c2 + c1):
                    changed = True
                inv_c2 = -s2 * c2
                if absorb(s1 * s2, m1 * m2, s1 * inv_c2 + c1):
                    changed = True
        if lattice != 0:
            for key in reps:
                reps[key] = reps[key] % lattice

    if lattice == 0:
        raise NotAFrieze("closure contains no nonzero translation")

    tau = lattice
    half = tau / 2

    rot = reps.get((-1, -1))
    mirror = reps.get((-1, 1))
    glide = reps.get((1, -1))

    rot_anchor = (rot / 2) % half if rot is not None else None
    mirror_anchor = (mirror / 2) % half if mirror is not None else None
    if glide is None:
        phase = "none"
    else:
        residue = glide % tau
        if residue == 0:
            phase = "zero"
        elif residue == half:
            phase = "half"
        else:  # cannot happen: 2*glide is always in the lattice at fixpoint
            raise AssertionError(f"glide residue {residue} not 0 or tau/2")

    tag = tag_from_flags(
        SymmetryFlags(
            has_rotation=rot_anchor is not None,
            has_vertical_mirror=mirror_anchor is not None,
            has_horizontal_reflection=phase == "zero",
            has_proper_glide=phase == "half",
        )
    )
    return FriezeGroup(tag, tau, rot_anchor, mirror_anchor, phase)


def contains(g: FriezeGroup, p: StripIsometry) -> bool:
    """Membership via the n-indexed element families of g."""
    tau = g.period
    half = tau / 2
    if p.kind is Kind.TRANSLATION:
        return p.param % tau == 0
    if p.kind is Kind.ROTATION:
        return g.rot_anchor is not None and (p.param - g.rot_anchor) % half == 0
    if p.kind is Kind.VERTICAL_MIRROR:
        return g.mirror_anchor is not None and (p.param - g.mirror_anchor) % half == 0
    if g.glide_phase == "zero":
        return p.param % tau == 0
    if g.glide_phase == "half":
        return (p.param - half) % tau == 0
    return False


def _family_in_window(first: Fraction, step: Fraction, x0: Fraction, x1: Fraction):
    """Members of {first + n*step} falling in [x0, x1), ascending."""
    n0 = math.ceil((x0 - first) / step)
    out = []
    x = first + n0 * step
    while x < x1:
        out.append(x)
        x += step
    return out


def elements_in_window(g: FriezeGroup, x0, x1) -> List[StripIsometry]:
    """All group elements whose parameter lies in [x0, x1).

    Sorted by (kind, parameter) with kind order T < R < V < S.
    """
    x0, x1 = Fraction(x0), Fraction(x1)
    if not x0 < x1:
        raise ValueError("need x0 < x1")
    tau = g.period
    half = tau / 2
    out: List[StripIsometry] = []
    for t in _family_in_window(Fraction(0), tau, x0, x1):
        out.append(T(t))
    if g.rot_anchor is not None:
        for a in _family_in_window(g.rot_anchor, half, x0, x1):
            out.append(R(a))
    if g.mirror_anchor is not None:
        for a in _family_in_window(g.mirror_anchor, half, x0, x1):
            out.append(V(a))
    if g.glide_phase == "zero":
        for t in _family_in_window(Fraction(0), tau, x0, x1):
            out.append(S(t))
    elif g.glide_phase == "half":
        for t in _family_in_window(half, tau, x0, x1):
            out.append(S(t))
    out.sort(key=lambda p: (p.kind.order, p.param))
    return out


def format_group(g: FriezeGroup) -> str:
    """One-line text form, e.g. ``tag=p2mg period=2 rot_anchor=0 mirror_anchor=1/2 glide=half``."""
    parts = [f"tag={g.tag.crystallographic}", f"period={g.period}"]
    if g.rot_anchor is not None:
        parts.append(f"rot_anchor={g.rot_anchor}")
    if g.mirror_anchor is not None:
        parts.append(f"mirror_anchor={g.mirror_anchor}")
    parts.append(f"glide={g.glide_phase}")
    return " ".join(parts)


_GROUP_FIELD_RE = re.compile(r"(\w+)=(\S+)")


def parse_group(text: str) -> FriezeGroup:
    """Inverse of :func:`format_group`; the tag accepts all alias spellings."""
    fields = dict(_GROUP_FIELD_RE.findall(text))
    try:
        tag = parse_tag(fields["tag"])
        period = Fraction(fields["period"])
    except KeyError as e:
        raise ValueError(f"group line missing field {e}") from None
    rot = Fraction(fields["rot_anchor"]) if "rot_anchor" in fields else None
    mirror = Fraction(fields["mirror_anchor"]) if "mirror_anchor" in fields else None
    phase = fields.get("glide", "none")
    return FriezeGroup(tag, period, rot, mirror, phase)
