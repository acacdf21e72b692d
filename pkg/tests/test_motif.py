from fractions import Fraction

import pytest

from friezelab import (
    MalformedMotif,
    OutOfCell,
    asymmetric_flag_motif,
    parse_motif,
    sinusoid_motif,
)
from friezelab.motif import format_motif

MINIMAL = b"cell 2 height 1\npolygon filled shade=0 0,0 1/2,0 0,3/4\n"


def test_minimal_motif():
    m = parse_motif(MINIMAL)
    assert len(m.primitives) == 1
    assert m.primitives[0].shape == "polygon"
    assert m.cell_width == 2
    assert m.strip_halfheight == 1
    assert m.primitives[0].points[2] == (Fraction(0), Fraction(3, 4))


def test_point_at_cell_width_rejected():
    bad = b"cell 2 height 1\npolygon filled shade=0 0,0 2,0 0,3/4\n"
    with pytest.raises(OutOfCell):
        parse_motif(bad)


def test_point_below_strip_rejected():
    bad = b"cell 2 height 1\npolygon filled shade=0 0,0 1,0 0,-3/2\n"
    with pytest.raises(OutOfCell):
        parse_motif(bad)


def test_shade_out_of_range():
    bad = b"cell 2 height 1\npolygon filled shade=300 0,0 1,0 0,1\n"
    with pytest.raises(MalformedMotif):
        parse_motif(bad)


@pytest.mark.parametrize(
    "text",
    [
        b"",
        b"cell 2\npolygon filled shade=0 0,0 1,0 0,1\n",
        b"cell 2 height 1\ncircle shade=0 0,0\n",
        b"cell 2 height 1\npolygon filled shade=0 0,0 1,0\n",
        b"cell 2 height 1\npolygon filled shade=0\n",
        b"cell 0 height 1\npolygon filled shade=0 0,0 1,0 0,1\n",
        b"cell 2 height 1\npolyline shade=0 width=0 0,0 1,0\n",
    ],
)
def test_malformed_motifs(text):
    with pytest.raises(MalformedMotif):
        parse_motif(text)


def test_comments_and_blank_lines_skipped():
    text = b"# hi\n\ncell 1 height 1\n# body\npolygon filled shade=9 0,0 1/2,0 0,1/2\n"
    m = parse_motif(text)
    assert m.primitives[0].shade == 9


def test_format_roundtrip():
    m = parse_motif(MINIMAL)
    assert parse_motif(format_motif(m)) == m


def test_bundled_flag():
    m = asymmetric_flag_motif()
    assert m.cell_width == 1
    assert len(m.primitives) == 2
    assert all(p.shade == 0 for p in m.primitives)


def test_sinusoid_symmetry_tables():
    m = sinusoid_motif()
    (prim,) = m.primitives
    pts = prim.points
    n = len(pts) - 1
    assert n == 64
    tau = m.cell_width
    assert pts[0][1] == 0 and pts[n][1] == 0
    ys = [y for _, y in pts]
    for k in range(n + 1):
        # mirror about the quarter-period extremum
        if k <= n // 2:
            assert ys[n // 2 - k] == ys[k]
        # glide by half a period negates
        if k <= n // 2:
            assert ys[n // 2 + k] == -ys[k]
    assert pts[n][0] == tau  # closing point glues the seam exactly


def test_polyline_band_is_simple_thickening():
    m = sinusoid_motif()
    (prim,) = m.primitives
    band = prim.band_polygon()
    w = prim.width / 2
    npts = len(prim.points)
    assert len(band) == 2 * npts
    assert band[0] == (prim.points[0][0], prim.points[0][1] + w)
    assert band[-1] == (prim.points[0][0], prim.points[0][1] - w)
