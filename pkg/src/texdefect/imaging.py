"""8-bit grayscale image I/O and window-level pixel operations.

Images are 2-D numpy arrays of dtype uint8 with shape (height, width),
row axis pointing down. File I/O is binary PGM (P5) only and bit-exact:
no scaling or gamma anywhere on the way in or out.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

__all__ = [
    "PgmParseError",
    "Rect",
    "load_pgm",
    "save_pgm",
    "read_pgm",
    "write_pgm",
    "quantize",
    "extract_window",
    "draw_square_outline",
]

_WHITESPACE = b" \t\n\r\x0b\x0c"


class PgmParseError(ValueError):
    """Byte stream is not a valid 8-bit binary PGM."""


@dataclass(frozen=True)
class Rect:
    """Axis-aligned region: x is the column offset, y the row offset."""

    x: int
    y: int
    w: int
    h: int

    def __post_init__(self) -> None:
        if self.w < 1 or self.h < 1:
            raise ValueError(f"rect must span at least one pixel, got {self.w}x{self.h}")
        if self.x < 0 or self.y < 0:
            raise ValueError(f"rect offsets must be non-negative, got ({self.x}, {self.y})")

    @property
    def slices(self) -> tuple[slice, slice]:
        """(row, column) slices selecting this region from an array."""
        return slice(self.y, self.y + self.h), slice(self.x, self.x + self.w)


def _as_gray(img) -> np.ndarray:
    img = np.asarray(img)
    if img.ndim != 2 or img.size == 0:
        raise ValueError("expected a non-empty 2-D grayscale array")
    return img


def _check_inside(img: np.ndarray, rect: Rect) -> None:
    h, w = img.shape
    if rect.x + rect.w > w or rect.y + rect.h > h:
        raise ValueError(f"{rect} does not fit inside a {h}x{w} image")


def _next_token(data: bytes, pos: int) -> tuple[bytes, int]:
    # '#' encountered between tokens starts a comment running to end of line
    n = len(data)
    while pos < n and (data[pos] in _WHITESPACE or data[pos] == 0x23):
        if data[pos] == 0x23:
            newline = data.find(b"\n", pos)
            pos = n if newline < 0 else newline + 1
        else:
            pos += 1
    if pos >= n:
        raise PgmParseError("malformed header: unexpected end of data")
    start = pos
    while pos < n and data[pos] not in _WHITESPACE:
        pos += 1
    return data[start:pos], pos


def load_pgm(data: bytes) -> np.ndarray:
    """Decode binary PGM (P5) bytes into a (height, width) uint8 array.

    Header comments are accepted; pixel values are copied verbatim.
    Raises PgmParseError on a bad magic number, non-numeric or out-of-range
    header fields, maxval above 255, or missing pixel bytes.
    """
    data = bytes(data)
    magic, pos = _next_token(data, 0)
    if magic != b"P5":
        raise PgmParseError(f"malformed header: expected magic 'P5', got {magic!r}")
    header = {}
    for name in ("width", "height", "maxval"):
        token, pos = _next_token(data, pos)
        try:
            header[name] = int(token)
        except ValueError:
            raise PgmParseError(f"malformed header: {name} is not an integer: {token!r}") from None
    width, height, maxval = header["width"], header["height"], header["maxval"]
    if width < 1 or height < 1:
        raise PgmParseError(f"malformed header: image must be at least 1x1, got {width}x{height}")
    if maxval > 255:
        raise PgmParseError(f"maxval {maxval} unsupported: only 8-bit images (maxval <= 255)")
    if maxval < 1:
        raise PgmParseError(f"malformed header: maxval must be positive, got {maxval}")
    if pos >= len(data) or data[pos] not in _WHITESPACE:
        raise PgmParseError("malformed header: missing whitespace before pixel data")
    raster = data[pos + 1 : pos + 1 + width * height]
    if len(raster) < width * height:
        raise PgmParseError(
            f"truncated pixel data: expected {width * height} bytes, got {len(raster)}"
        )
    return np.frombuffer(raster, dtype=np.uint8).reshape(height, width).copy()


def save_pgm(img: np.ndarray) -> bytes:
    """Encode a grayscale array as binary PGM; load_pgm round-trips it bit-exact."""
    img = _as_gray(img)
    if img.dtype != np.uint8:
        if np.any(img < 0) or np.any(img > 255):
            raise ValueError("pixel values must fit 8 bits (0..255)")
        img = img.astype(np.uint8)
    h, w = img.shape
    return b"P5\n%d %d\n255\n" % (w, h) + np.ascontiguousarray(img).tobytes()


def read_pgm(path) -> np.ndarray:
    return load_pgm(Path(path).read_bytes())


def write_pgm(path, img: np.ndarray) -> None:
    Path(path).write_bytes(save_pgm(img))


def quantize(img: np.ndarray, levels: int) -> np.ndarray:
    """Bin 8-bit gray values down to `levels` levels: floor(pixel * levels / 256).

    Identity at levels=256. Output values lie in [0, levels - 1].
    """
    if not 2 <= levels <= 256:
        raise ValueError(f"levels must be in [2, 256], got {levels}")
    img = _as_gray(img)
    return ((img.astype(np.uint32) * levels) >> 8).astype(np.uint8)


def extract_window(img: np.ndarray, rect: Rect) -> np.ndarray:
    """Copy the rect.w x rect.h sub-image at (rect.x, rect.y); source is untouched."""
    img = _as_gray(img)
    _check_inside(img, rect)
    return img[rect.slices].copy()


def draw_square_outline(
    img: np.ndarray, rect: Rect, level: int = 255, thickness: int = 2
) -> np.ndarray:
    """Return a copy of `img` with the border band of `rect` painted `level`.

    The band extends `thickness` pixels inward from the rect edge; the rect
    interior and everything outside the rect are unchanged.
    """
    img = _as_gray(img)
    _check_inside(img, rect)
    if thickness < 1 or 2 * thickness > min(rect.w, rect.h):
        raise ValueError(
            f"thickness must be in [1, min(w,h)/2], got {thickness} for a {rect.w}x{rect.h} rect"
        )
    out = img.copy()
    _paint_outline(out, rect, level, thickness)
    return out


def _paint_outline(img: np.ndarray, rect: Rect, level: int, thickness: int) -> None:
    x, y, w, h, t = rect.x, rect.y, rect.w, rect.h, thickness
    img[y : y + t, x : x + w] = level
    img[y + h - t : y + h, x : x + w] = level
    img[y : y + h, x : x + t] = level
    img[y : y + h, x + w - t : x + w] = level
