"""Verification of the 16-cell strip multiplication table against the
canonical-form oracle, plus text renderings of both tables."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List

from .isometry import (
    Kind,
    StripIsometry,
    canonical,
    compose,
    from_canonical,
)

KINDS = (Kind.TRANSLATION, Kind.ROTATION, Kind.VERTICAL_MIRROR, Kind.GLIDE)

TABLE1_CELLS = {
    (Kind.TRANSLATION, Kind.TRANSLATION): "T(t+s)",
    (Kind.TRANSLATION, Kind.ROTATION): "R(b+t/2)",
    (Kind.TRANSLATION, Kind.VERTICAL_MIRROR): "V(b+t/2)",
    (Kind.TRANSLATION, Kind.GLIDE): "S(t+s)",
    (Kind.ROTATION, Kind.TRANSLATION): "R(a-s/2)",
    (Kind.ROTATION, Kind.ROTATION): "T(2(a-b))",
    (Kind.ROTATION, Kind.VERTICAL_MIRROR): "S(2(a-b))",
    (Kind.ROTATION, Kind.GLIDE): "V(a-s/2)",
    (Kind.VERTICAL_MIRROR, Kind.TRANSLATION): "V(a-s/2)",
    (Kind.VERTICAL_MIRROR, Kind.ROTATION): "S(2(a-b))",
    (Kind.VERTICAL_MIRROR, Kind.VERTICAL_MIRROR): "T(2(a-b))",
    (Kind.VERTICAL_MIRROR, Kind.GLIDE): "R(a-s/2)",
    (Kind.GLIDE, Kind.TRANSLATION): "S(t+s)",
    (Kind.GLIDE, Kind.ROTATION): "V(b+t/2)",
    (Kind.GLIDE, Kind.VERTICAL_MIRROR): "R(b+t/2)",
    (Kind.GLIDE, Kind.GLIDE): "T(t+s)",
}


@dataclass
class CellResult:
    row: Kind
    col: Kind
    checked: int = 0
    failures: List[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "ok" if self.ok else f"FAIL ({len(self.failures)} cases)"
        return (
            f"{self.row.value} o {self.col.value} -> "
            f"{TABLE1_CELLS[(self.row, self.col)]:10s} "
            f"{self.checked} cases {status}"
        )


def grid_params() -> List[Fraction]:
    """Deterministic parameter grid k/4 for |k| <= 8."""
    return [Fraction(k, 4) for k in range(-8, 9)]


def random_param(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-64, 64), rng.randint(1, 16))


def verify_table(
    compose_fn: Callable[[StripIsometry, StripIsometry], StripIsometry] = compose,
    seed: int = 0,
    n_random: int = 1000,
) -> List[CellResult]:
    """Check every cell of the multiplication table against the oracle.

    For each (row kind, column kind) pair, the table-based product is
    compared for exact equality with the canonical-form product over the
    full deterministic grid plus seeded random rational parameter pairs.
    """
    rng = random.Random(seed)
    grid = grid_params()
    pairs = [(a, b) for a in grid for b in grid]
    pairs += [(random_param(rng), random_param(rng)) for _ in range(n_random)]
    results = []
    for kp in KINDS:
        for kq in KINDS:
            cell = CellResult(kp, kq)
            for a, b in pairs:
                p = StripIsometry(kp, a)
                q = StripIsometry(kq, b)
                got = compose_fn(p, q)
                want = from_canonical(canonical(p).multiply(canonical(q)))
                cell.checked += 1
                if got != want:
                    cell.failures.append((p, q, got, want))
            results.append(cell)
    return results


def render_report(results: List[CellResult]) -> str:
    lines = [c.line() for c in results]
    good = sum(1 for c in results if c.ok)
    lines.append(f"{good}/{len(results)} cells verified")
    return "\n".join(lines) + "\n"


def render_table1() -> str:
    """Full multiplication table as text (row acts after column)."""
    header = ["p \\ q"] + ["T(s)", "R(b)", "V(b)", "S(s)"]
    rows = []
    labels = {
        Kind.TRANSLATION: "T(t)",
        Kind.ROTATION: "R(a)",
        Kind.VERTICAL_MIRROR: "V(a)",
        Kind.GLIDE: "S(t)",
    }
    for kp in KINDS:
        rows.append([labels[kp]] + [TABLE1_CELLS[(kp, kq)] for kq in KINDS])
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(5)]
    out = []
    for r in [header] + rows:
        out.append("  ".join(c.ljust(w) for c, w in zip(r, widths)))
    return "\n".join(out) + "\n"


def render_table2() -> str:
    """Compact kind-only table: which kind each product lands in."""
    header = [" "] + [k.value for k in KINDS]
    rows = []
    for kp in KINDS:
        rows.append(
            [kp.value] + [TABLE1_CELLS[(kp, kq)][0] for kq in KINDS]
        )
    out = ["  ".join(r) for r in [header] + rows]
    return "\n".join(out) + "\n"
