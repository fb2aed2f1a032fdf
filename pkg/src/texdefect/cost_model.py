"""Operation-count model of the sliding-window scan.

Counts abstract operations per frame: one per pixel copied when a window
is extracted (w*w) and one per co-occurrence cell visited (G*G), times
the number of non-overlapping window positions. The floors in the step
count drop partial edge windows, so the floored product is authoritative;
the rows*cols*G*G shortcut is exact only when the window divides both
image dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["ScanCost", "scan_steps", "total_computations"]


@dataclass(frozen=True)
class ScanCost:
    steps: int
    ops_per_window_extract: int
    ops_per_glcm: int
    total_ops: int

    @property
    def total_ops_e9(self) -> int:
        """Total operations truncated to whole billions."""
        return self.total_ops // 10**9


def scan_steps(rows: int, cols: int, window: int) -> int:
    """Window positions when a window x window tile steps by its own size."""
    if window < 1:
        raise ValueError(f"window must be >= 1, got {window}")
    if window > min(rows, cols):
        raise ValueError(f"window {window} exceeds image dims {rows}x{cols}")
    return (rows // window) * (cols // window)


def total_computations(rows: int, cols: int, window: int, levels: int = 256) -> ScanCost:
    """Abstract operation count to scan a rows x cols frame at one window size."""
    if not 2 <= levels <= 256:
        raise ValueError(f"levels must be in [2, 256], got {levels}")
    steps = scan_steps(rows, cols, window)
    extract_ops = window * window
    glcm_ops = levels * levels
    return ScanCost(
        steps=steps,
        ops_per_window_extract=extract_ops,
        ops_per_glcm=glcm_ops,
        total_ops=steps * extract_ops * glcm_ops,
    )
