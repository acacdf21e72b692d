import numpy as np
import pytest

from friezelab import Image, MalformedPgm, read_pgm, write_pgm


def test_two_pixel_image():
    img = read_pgm(b"P5\n2 1\n255\n\x00\xff")
    assert img.width == 2 and img.height == 1
    assert list(img.pixels[0]) == [0, 255]


def test_ascii_pgm_rejected():
    with pytest.raises(MalformedPgm):
        read_pgm(b"P2\n2 1\n255\n0 255\n")


def test_roundtrip_canonical():
    rng = np.random.default_rng(1)
    img = Image(rng.integers(0, 256, size=(5, 7), dtype=np.uint8))
    data = write_pgm(img)
    assert write_pgm(read_pgm(data)) == data


def test_comment_preserved():
    img = Image(np.zeros((2, 2), dtype=np.uint8), comment="cyclic: edges glued")
    back = read_pgm(write_pgm(img))
    assert back.comment == "cyclic: edges glued"
    assert back == img


def test_header_comment_between_fields():
    img = read_pgm(b"P5\n# hello\n2 2\n# again\n255\n\x00\x01\x02\x03")
    assert img.width == 2
    assert "hello" in img.comment and "again" in img.comment


@pytest.mark.parametrize(
    "data",
    [
        b"",
        b"P5",
        b"P5\n2 2\n255\n\x00",  # truncated pixels
        b"P5\n2 2\n70000\n" + b"\x00" * 4,  # maxval too large
        b"P5\n-2 2\n255\n" + b"\x00" * 4,
        b"P5\n2 x\n255\n" + b"\x00" * 4,
    ],
)
def test_malformed_pgm(data):
    with pytest.raises(MalformedPgm):
        read_pgm(data)
