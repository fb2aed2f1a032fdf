"""Gray-level co-occurrence matrices for rectangular windows.

A co-occurrence matrix tallies, for a fixed pixel displacement, how often
gray level i occurs at the displaced position relative to gray level j.
Angles are measured counter-clockwise from the horizontal axis; with the
row axis pointing down this puts 45/90/135 degrees at negative row
offsets. Pairs whose displaced pixel would fall outside the window are
dropped (truncation, no wrap-around).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "ANGLES",
    "GlcmParams",
    "Glcm",
    "displacement_vector",
    "compute_counts",
    "to_probabilities",
]

ANGLES = (0, 45, 90, 135)


@dataclass(frozen=True)
class GlcmParams:
    """Co-occurrence configuration: displacement (d, theta) and level count.

    `symmetric=True` counts every pixel pair in both orders, producing a
    symmetric matrix; the default counts ordered pairs only.
    """

    d: int = 1
    theta: int = 0
    levels: int = 256
    symmetric: bool = False

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError(f"inter-pixel distance must be >= 1, got {self.d}")
        if self.theta not in ANGLES:
            raise ValueError(f"theta must be one of {ANGLES}, got {self.theta}")
        if not 2 <= self.levels <= 256:
            raise ValueError(f"levels must be in [2, 256], got {self.levels}")


@dataclass(frozen=True)
class Glcm:
    """Pair-count matrix plus its total; normalize with to_probabilities()."""

    counts: np.ndarray
    total_pairs: int

    @property
    def levels(self) -> int:
        return self.counts.shape[0]


def displacement_vector(theta: int, d: int) -> tuple[int, int]:
    """(row_offset, col_offset) for an angle in degrees and distance d."""
    if d < 1:
        raise ValueError(f"inter-pixel distance must be >= 1, got {d}")
    if theta == 0:
        return (0, d)
    if theta == 45:
        return (-d, d)
    if theta == 90:
        return (-d, 0)
    if theta == 135:
        return (-d, -d)
    raise ValueError(f"unsupported angle {theta}; use one of {ANGLES}")


def compute_counts(window: np.ndarray, params: GlcmParams) -> Glcm:
    """Count co-occurring level pairs over the whole window.

    counts[i, j] is the number of pixels with level i whose displaced
    neighbour (inside the window) has level j; in symmetric mode each pair
    also increments counts[j, i]. All window levels must be < params.levels.
    """
    window = np.asarray(window)
    if window.ndim != 2:
        raise ValueError("window must be a 2-D array")
    h, w = window.shape
    dr, dc = displacement_vector(params.theta, params.d)
    r0, r1 = max(0, -dr), h - max(0, dr)
    c0, c1 = max(0, -dc), w - max(0, dc)
    if r1 <= r0 or c1 <= c0:
        raise ValueError(
            f"{h}x{w} window too small for displacement d={params.d}, theta={params.theta}"
        )
    lo, hi = int(window.min()), int(window.max())
    if lo < 0 or hi >= params.levels:
        raise ValueError(f"pixel level {hi if hi >= params.levels else lo} outside [0, {params.levels})")
    a = window[r0:r1, c0:c1].astype(np.int64)
    b = window[r0 + dr : r1 + dr, c0 + dc : c1 + dc].astype(np.int64)
    g = params.levels
    counts = np.bincount((a * g + b).ravel(), minlength=g * g).reshape(g, g)
    if params.symmetric:
        counts = counts + counts.T
    return Glcm(counts=counts, total_pairs=int(counts.sum()))


def to_probabilities(glcm: Glcm) -> np.ndarray:
    """Normalize counts to a joint probability matrix summing to 1."""
    if glcm.total_pairs < 1:
        raise ValueError("empty co-occurrence matrix: no pixel pairs to normalize")
    return glcm.counts / glcm.total_pairs
