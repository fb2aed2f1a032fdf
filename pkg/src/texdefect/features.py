"""Shift-invariant texture statistics of a normalized co-occurrence matrix.

Every function takes a G x G probability matrix P with non-negative
entries summing to 1 (see glcm.to_probabilities) and is pure. Relabeling
all gray levels by a constant shifts the matrix along its diagonal and
leaves every statistic here unchanged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "FEATURE_NAMES",
    "FeatureVector",
    "energy",
    "entropy",
    "contrast",
    "homogeneity",
    "correlation",
    "max_probability",
    "extract_all",
]

FEATURE_NAMES = ("energy", "entropy", "contrast", "homogeneity", "correlation", "max_prob")


@dataclass(frozen=True)
class FeatureVector:
    """The six per-window texture statistics, in FEATURE_NAMES order."""

    energy: float
    entropy: float
    contrast: float
    homogeneity: float
    correlation: float
    max_prob: float

    def as_tuple(self) -> tuple[float, ...]:
        return (
            self.energy,
            self.entropy,
            self.contrast,
            self.homogeneity,
            self.correlation,
            self.max_prob,
        )


@lru_cache(maxsize=8)
def _squared_level_diff(levels: int) -> np.ndarray:
    idx = np.arange(levels)
    diff = np.square(idx[:, None] - idx[None, :])
    diff.setflags(write=False)
    return diff


@lru_cache(maxsize=8)
def _inverse_difference_weights(levels: int) -> np.ndarray:
    weights = 1.0 / (1.0 + _squared_level_diff(levels))
    weights.setflags(write=False)
    return weights


def energy(p: np.ndarray) -> float:
    """Angular second moment sum(p^2), in (0, 1]; 1 iff a single cell holds all mass."""
    return float(np.sum(np.square(p)))


def entropy(p: np.ndarray) -> float:
    """Shannon entropy in bits over nonzero cells (0 log 0 := 0)."""
    nz = p[p > 0.0]
    return float(-np.sum(nz * np.log2(nz)) + 0.0)  # +0.0 folds -0.0 into 0.0


def contrast(p: np.ndarray) -> float:
    """Level-difference second moment sum((i - j)^2 p(i, j)); 0 iff diagonal-only."""
    return float(np.sum(p * _squared_level_diff(p.shape[0])))


def homogeneity(p: np.ndarray) -> float:
    """Inverse difference moment sum(p(i, j) / (1 + (i - j)^2)); 1 iff diagonal-only."""
    return float(np.sum(p * _inverse_difference_weights(p.shape[0])))


def correlation(p: np.ndarray) -> float:
    """Linear dependence between paired levels, in [-1, 1].

    Means and standard deviations come from the row and column marginals.
    When either marginal has zero variance (e.g. the matrix of a constant
    window) there is no measurable linear structure and the value is 0.
    """
    idx = np.arange(p.shape[0], dtype=np.float64)
    px = p.sum(axis=1)
    py = p.sum(axis=0)
    mu_x = float(idx @ px)
    mu_y = float(idx @ py)
    var_x = float(np.square(idx - mu_x) @ px)
    var_y = float(np.square(idx - mu_y) @ py)
    denom = math.sqrt(var_x) * math.sqrt(var_y)
    if denom == 0.0:
        return 0.0
    covariance = float(idx @ p @ idx) - mu_x * mu_y
    return covariance / denom


def max_probability(p: np.ndarray) -> float:
    """Largest single cell probability."""
    return float(np.max(p))


def extract_all(p: np.ndarray) -> FeatureVector:
    """All six statistics; component-wise identical to the individual calls."""
    return FeatureVector(
        energy=energy(p),
        entropy=entropy(p),
        contrast=contrast(p),
        homogeneity=homogeneity(p),
        correlation=correlation(p),
        max_prob=max_probability(p),
    )
