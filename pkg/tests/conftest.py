"""Shared fixtures: synthetic stripe fabric and brute-force oracles.

The clean fabric set is five frames of vertical stripes with period 10
(so a 50-pixel window always holds full periods) and per-frame duty
cycles 3..7. Within a frame every tile is pixel-identical; across frames
the duty cycle changes the pair structure, giving a small nonzero energy
spread for calibration.
"""

import numpy as np

from texdefect.imaging import Rect

STRIPE_PERIOD = 10
STRIPE_LO = 60
STRIPE_HI = 200
CLEAN_DUTIES = (3, 4, 5, 6, 7)
FRAME_SHAPE = (461, 512)
PATCH_RECT = Rect(x=200, y=150, w=60, h=60)
PATCH_LEVEL = 128

_OFFSETS = {0: (0, 1), 45: (-1, 1), 90: (-1, 0), 135: (-1, -1)}


def stripe_frame(duty, shape=FRAME_SHAPE, period=STRIPE_PERIOD, lo=STRIPE_LO, hi=STRIPE_HI):
    rows, cols = shape
    phase = np.arange(cols) % period
    line = np.where(phase < duty, hi, lo).astype(np.uint8)
    return np.tile(line, (rows, 1))


def clean_frames(shape=FRAME_SHAPE):
    return [stripe_frame(duty, shape) for duty in CLEAN_DUTIES]


def defect_frame(shape=FRAME_SHAPE, rect=PATCH_RECT, level=PATCH_LEVEL):
    out = stripe_frame(CLEAN_DUTIES[2], shape)
    out[rect.slices] = level
    return out


def glcm_count_oracle(window, d, theta, levels, symmetric):
    """Naive double-loop pair counter with explicit bounds checks."""
    dr, dc = _OFFSETS[theta]
    dr, dc = dr * d, dc * d
    h, w = window.shape
    counts = np.zeros((levels, levels), dtype=np.int64)
    for r in range(h):
        for c in range(w):
            rr, cc = r + dr, c + dc
            if 0 <= rr < h and 0 <= cc < w:
                i, j = int(window[r, c]), int(window[rr, cc])
                counts[i, j] += 1
                if symmetric:
                    counts[j, i] += 1
    return counts


def window_energy_oracle(window, d=1, theta=0, levels=256, symmetric=False):
    counts = glcm_count_oracle(window, d, theta, levels, symmetric)
    p = counts / counts.sum()
    return float((p**2).sum())


def rect_gap(a: Rect, b: Rect) -> int:
    """Chebyshev gap between two rects; 0 when they touch or overlap."""
    dx = max(b.x - (a.x + a.w), a.x - (b.x + b.w), 0)
    dy = max(b.y - (a.y + a.h), a.y - (b.y + b.h), 0)
    return max(dx, dy)
