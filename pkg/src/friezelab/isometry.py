"""Exact algebra of the four symmetry kinds of a horizontal strip.

Every symmetry of the infinite horizontal strip is one of:

* ``T(t)`` -- translation by the horizontal vector ``t``
* ``R(a)`` -- half-turn (180 degree rotation) about the point ``a`` on the
  strip axis
* ``V(a)`` -- reflection in the vertical line through ``a``
* ``S(t)`` -- glide reflection: reflect in the strip axis, then translate
  by ``t``.  ``S(0)`` is the plain horizontal reflection.

Parameters are exact rationals (:class:`fractions.Fraction`), so all group
laws hold as equalities, never approximately.  Composition is implemented
cell by cell from the strip multiplication table; an independent check is
available through the canonical form (sigma, mu, c) acting as
``x -> sigma*x + c, y -> mu*y``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

ScalarLike = Union[Fraction, int, str]


def scalar(value: ScalarLike) -> Fraction:
    """Coerce an int, ``p/q`` string or Fraction to an exact Fraction."""
    return Fraction(value)


class Kind(Enum):
    """The four symmetry kinds, in canonical sort order."""

    TRANSLATION = "T"
    ROTATION = "R"
    VERTICAL_MIRROR = "V"
    GLIDE = "S"

    @property
    def order(self) -> int:
        return _KIND_ORDER[self]


_KIND_ORDER = {
    Kind.TRANSLATION: 0,
    Kind.ROTATION: 1,
    Kind.VERTICAL_MIRROR: 2,
    Kind.GLIDE: 3,
}


@dataclass(frozen=True)
class StripIsometry:
    """One strip symmetry: a kind plus its single rational parameter.

    For translations and glides the parameter is the x-component of the
    glide/translation vector; for half-turns and vertical mirrors it is the
    x-coordinate of the fixed point / axis on the strip axis.
    """

    kind: Kind
    param: Fraction

    def __post_init__(self):
        object.__setattr__(self, "param", Fraction(self.param))

    @property
    def is_identity(self) -> bool:
        return self.kind is Kind.TRANSLATION and self.param == 0

    @property
    def is_horizontal_reflection(self) -> bool:
        """True exactly for S(0), the reflection in the strip axis."""
        return self.kind is Kind.GLIDE and self.param == 0

    def __str__(self) -> str:
        return f"{self.kind.value}({self.param})"


def T(t: ScalarLike) -> StripIsometry:
    return StripIsometry(Kind.TRANSLATION, Fraction(t))


def R(a: ScalarLike) -> StripIsometry:
    return StripIsometry(Kind.ROTATION, Fraction(a))


def V(a: ScalarLike) -> StripIsometry:
    return StripIsometry(Kind.VERTICAL_MIRROR, Fraction(a))


def S(t: ScalarLike) -> StripIsometry:
    return StripIsometry(Kind.GLIDE, Fraction(t))


IDENTITY = T(0)


@dataclass(frozen=True)
class CanonicalForm:
    """The affine action ``x -> sigma*x + c, y -> mu*y`` of a strip symmetry.

    Used as an independent oracle for the multiplication table: composition
    of canonical forms is plain affine composition, with no table lookup.
    """

    sigma: int  # +1 or -1, x-orientation
    mu: int  # +1 or -1, y-orientation
    c: Fraction

    def __post_init__(self):
        if self.sigma not in (1, -1) or self.mu not in (1, -1):
            raise ValueError("sigma and mu must be +1 or -1")
        object.__setattr__(self, "c", Fraction(self.c))

    def multiply(self, other: "CanonicalForm") -> "CanonicalForm":
        """Affine product self o other (other acts first)."""
        return CanonicalForm(
            self.sigma * other.sigma,
            self.mu * other.mu,
            self.sigma * other.c + self.c,
        )

    def apply(self, point):
        x, y = Fraction(point[0]), Fraction(point[1])
        return (self.sigma * x + self.c, self.mu * y)


def canonical(p: StripIsometry) -> CanonicalForm:
    """Canonical form of a strip symmetry.

    The bijection: T(c) <-> (+1,+1,c); S(c) <-> (+1,-1,c);
    V(c/2) <-> (-1,+1,c); R(c/2) <-> (-1,-1,c).
    """
    if p.kind is Kind.TRANSLATION:
        return CanonicalForm(1, 1, p.param)
    if p.kind is Kind.GLIDE:
        return CanonicalForm(1, -1, p.param)
    if p.kind is Kind.VERTICAL_MIRROR:
        return CanonicalForm(-1, 1, 2 * p.param)
    return CanonicalForm(-1, -1, 2 * p.param)


def from_canonical(f: CanonicalForm) -> StripIsometry:
    """Inverse of :func:`canonical`; total on all (sigma, mu, c)."""
    if f.sigma == 1:
        return T(f.c) if f.mu == 1 else S(f.c)
    return V(f.c / 2) if f.mu == 1 else R(f.c / 2)


def compose(p: StripIsometry, q: StripIsometry) -> StripIsometry:
    """Product p o q: apply q first, then p.

    Implemented cell by cell from the 4x4 strip multiplication table, not
    via canonical forms (the canonical route exists separately as an
    oracle).  The sixteen cells, with row p and column q:

    ========  ==========  ==========  ==========  ==========
    p \\ q     T(s)        R(b)        V(b)        S(s)
    ========  ==========  ==========  ==========  ==========
    T(t)      T(t+s)      R(b+t/2)    V(b+t/2)    S(t+s)
    R(a)      R(a-s/2)    T(2(a-b))   S(2(a-b))   V(a-s/2)
    V(a)      V(a-s/2)    S(2(a-b))   T(2(a-b))   R(a-s/2)
    S(t)      S(t+s)      V(b+t/2)    R(b+t/2)    T(t+s)
    ========  ==========  ==========  ==========  ==========
    """
    kp, kq = p.kind, q.kind
    a, b = p.param, q.param
    if kp is Kind.TRANSLATION:
        if kq is Kind.TRANSLATION:
            return T(a + b)
        if kq is Kind.ROTATION:
            return R(b + a / 2)
        if kq is Kind.VERTICAL_MIRROR:
            return V(b + a / 2)
        return S(a + b)
    if kp is Kind.ROTATION:
        if kq is Kind.TRANSLATION:
            return R(a - b / 2)
        if kq is Kind.ROTATION:
            return T(2 * (a - b))
        if kq is Kind.VERTICAL_MIRROR:
            return S(2 * (a - b))
        return V(a - b / 2)
    if kp is Kind.VERTICAL_MIRROR:
        if kq is Kind.TRANSLATION:
            return V(a - b / 2)
        if kq is Kind.ROTATION:
            return S(2 * (a - b))
        if kq is Kind.VERTICAL_MIRROR:
            return T(2 * (a - b))
        return R(a - b / 2)
    # glide row
    if kq is Kind.TRANSLATION:
        return S(a + b)
    if kq is Kind.ROTATION:
        return V(b + a / 2)
    if kq is Kind.VERTICAL_MIRROR:
        return R(b + a / 2)
    return T(a + b)


def inverse(p: StripIsometry) -> StripIsometry:
    """Two-sided inverse: compose(p, inverse(p)) == T(0)."""
    if p.kind in (Kind.TRANSLATION, Kind.GLIDE):
        return StripIsometry(p.kind, -p.param)
    # half-turns and mirrors are involutions
    return p


def apply(p: StripIsometry, point) -> tuple:
    """Image of a point (x, y) under p; the strip axis y=0 maps to itself."""
    return canonical(p).apply(point)


_ISO_RE = re.compile(r"^\s*([TRVS])\s*\(\s*(-?\d+(?:/\d+)?)\s*\)\s*$")


def parse_isometry(text: str) -> StripIsometry:
    """Parse the textual form ``T(3/2)``, ``R(0)``, ``V(-1/4)``, ``S(1/2)``."""
    m = _ISO_RE.match(text)
    if m is None:
        raise ValueError(f"not a strip isometry literal: {text!r}")
    kind = Kind(m.group(1))
    try:
        param = Fraction(m.group(2))
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None
    return StripIsometry(kind, param)


def format_isometry(p: StripIsometry) -> str:
    return str(p)
