"""Grayscale raster images and binary PGM (P5) I/O."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import MalformedPgm


@dataclass
class Image:
    """A grayscale raster; ``pixels`` is a (height, width) uint8 array."""

    pixels: np.ndarray
    comment: Optional[str] = None

    def __post_init__(self):
        arr = np.asarray(self.pixels, dtype=np.uint8)
        if arr.ndim != 2:
            raise ValueError("pixels must be a 2-D array")
        self.pixels = arr

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Image)
            and self.pixels.shape == other.pixels.shape
            and bool(np.array_equal(self.pixels, other.pixels))
        )


def read_pgm(data: bytes) -> Image:
    """Parse a single binary PGM (P5, maxval <= 255)."""
    if not isinstance(data, (bytes, bytearray)):
        raise MalformedPgm("expected bytes")
    if data[:2] != b"P5":
        raise MalformedPgm("not a binary PGM (P5 magic missing)")
    pos = 2
    fields = []
    comment = None
    while len(fields) < 3:
        while pos < len(data) and data[pos : pos + 1].isspace():
            pos += 1
        if pos >= len(data):
            raise MalformedPgm("truncated header")
        if data[pos : pos + 1] == b"#":
            end = data.find(b"\n", pos)
            if end < 0:
                raise MalformedPgm("unterminated comment")
            text = data[pos + 1 : end].decode("latin-1").strip()
            comment = text if comment is None else comment + "\n" + text
            pos = end + 1
            continue
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace():
            pos += 1
        fields.append(data[start:pos])
    try:
        width, height, maxval = (int(f) for f in fields)
    except ValueError:
        raise MalformedPgm(f"non-numeric header fields: {fields}") from None
    if width <= 0 or height <= 0:
        raise MalformedPgm("non-positive dimensions")
    if not 0 < maxval <= 255:
        raise MalformedPgm(f"maxval {maxval} not in 1..255")
    pos += 1  # single whitespace byte after maxval
    raster = data[pos : pos + width * height]
    if len(raster) != width * height:
        raise MalformedPgm("truncated pixel data")
    pixels = np.frombuffer(raster, dtype=np.uint8).reshape(height, width)
    return Image(pixels.copy(), comment=comment)


def write_pgm(img: Image) -> bytes:
    """Serialize to canonical P5 bytes (maxval 255, comment preserved)."""
    header = "P5\n"
    if img.comment:
        for line in img.comment.splitlines():
            header += f"# {line}\n"
    header += f"{img.width} {img.height}\n255\n"
    return header.encode("ascii") + img.pixels.tobytes()
