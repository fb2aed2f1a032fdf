"""
Co-occurrence matrices from first principles
============================================

Build the gray-level co-occurrence matrix of a tiny window by hand and
see how distance, angle and symmetry change it.
"""

import numpy as np

from texdefect import GlcmParams, compute_counts, displacement_vector, to_probabilities

# A 4x4 window with 4 gray levels. Rows run top to bottom.
window = np.array(
    [
        [0, 0, 1, 1],
        [0, 0, 1, 1],
        [0, 2, 2, 2],
        [2, 2, 3, 3],
    ],
    dtype=np.uint8,
)
print("window:")
print(window)

# Each angle maps to a (row, col) pixel offset. Angles are measured
# counter-clockwise from the horizontal axis, and since the row axis
# points down, anything above the horizon has a negative row offset.
for theta in (0, 45, 90, 135):
    print(f"theta={theta:>3} deg -> offset {displacement_vector(theta, 1)}")

# Horizontal pairs at distance 1: counts[i, j] is how often level j sits
# immediately to the right of level i.
glcm = compute_counts(window, GlcmParams(d=1, theta=0, levels=4))
print("\ncounts (d=1, theta=0):")
print(glcm.counts)
print("total pairs:", glcm.total_pairs)  # 4 rows x 3 pairs per row = 12

# Normalizing turns counts into a joint probability distribution over
# level pairs; everything downstream works on this matrix.
probs = to_probabilities(glcm)
print("\nprobabilities (sum = %.1f):" % probs.sum())
print(np.round(probs, 3))

# Symmetric counting adds each pair in both orders, which symmetrizes
# the matrix: counts become counts + counts.T.
sym = compute_counts(window, GlcmParams(d=1, theta=0, levels=4, symmetric=True))
print("\nsymmetric counts (note the mirrored off-diagonals):")
print(sym.counts)
