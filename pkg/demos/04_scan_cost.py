"""
The window-size tradeoff, in operation counts and wall time
===========================================================

A bigger window means fewer scan positions but more work per position,
and worse defect localization. The cost model counts abstract operations
(pixels copied per window plus co-occurrence cells visited); timing a
real scan next to it shows how faithful those counts are on this machine.
"""

import time

import numpy as np

from texdefect import GlcmParams, scan_features, scan_steps, total_computations

ROWS, COLS, LEVELS = 461, 512, 256

frame = np.tile(
    np.where(np.arange(COLS) % 10 < 5, 200, 60).astype(np.uint8), (ROWS, 1)
)

print(f"frame {ROWS}x{COLS}, {LEVELS} gray levels\n")
print(f"{'window':>7} {'steps':>6} {'ops/extract':>12} {'ops/glcm':>9} "
      f"{'total_ops':>14} {'e9':>4} {'measured_ms':>12}")

for window in (30, 50, 100):
    cost = total_computations(ROWS, COLS, window, LEVELS)
    start = time.perf_counter()
    scan_features(frame, GlcmParams(levels=LEVELS), window, window)
    wall_ms = (time.perf_counter() - start) * 1000
    print(f"{window:>7} {cost.steps:>6} {cost.ops_per_window_extract:>12} "
          f"{cost.ops_per_glcm:>9} {cost.total_ops:>14} {cost.total_ops_e9:>4} "
          f"{wall_ms:>12.1f}")

# The floor in the step count matters: 461 and 512 are not multiples of
# these window sizes, so up to window-1 trailing pixels per axis are never
# scanned and the rows*cols*levels^2 shortcut overestimates the work.
print("\nstep counts come from floor(rows/w) * floor(cols/w):")
for window in (30, 50, 100):
    print(f"  w={window:>3}: {ROWS}//{window} * {COLS}//{window} "
          f"= {ROWS // window} * {COLS // window} = {scan_steps(ROWS, COLS, window)}")
