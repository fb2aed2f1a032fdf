"""Sliding-window defect detection against a calibrated energy reference.

A frame is tiled into window x window regions (stride defaults to the
window size, so tiles don't overlap; trailing pixels that don't fill a
whole window are dropped). Each window's co-occurrence energy is compared
with reference statistics learned from defect-free frames, and windows
whose z-score exceeds a threshold k are flagged and can be outlined in
the output frame. Energy alone decides the flags; the other five
statistics are carried along for traces and reports.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

import numpy as np

from .features import FEATURE_NAMES, FeatureVector, extract_all
from .glcm import GlcmParams, compute_counts, to_probabilities
from .imaging import Rect, draw_square_outline, extract_window

__all__ = [
    "ProfileMismatchError",
    "WindowGrid",
    "CalibrationProfile",
    "WindowResult",
    "DetectionReport",
    "tile_grid",
    "scan_features",
    "calibrate",
    "detect",
    "annotate",
    "sigma_floor",
]

PROFILE_VERSION = 1
REPORT_VERSION = 1
ANNOTATION_LEVEL = 255
ANNOTATION_THICKNESS = 2

# relative floor applied to the calibration sigma so that a perfectly
# uniform reference texture doesn't divide by zero
_SIGMA_FLOOR_REL = 1e-9


class ProfileMismatchError(ValueError):
    """Calibration profile and requested run parameters disagree."""


@dataclass(frozen=True)
class WindowGrid:
    rows: int
    cols: int
    window: int
    stride: int
    rects: tuple[Rect, ...]

    def __len__(self) -> int:
        return len(self.rects)


def tile_grid(rows: int, cols: int, window: int, stride: int) -> WindowGrid:
    """Row-major window positions at multiples of `stride`, full windows only."""
    if window < 1 or window > min(rows, cols):
        raise ValueError(f"window {window} does not fit a {rows}x{cols} image")
    if stride < 1:
        raise ValueError(f"stride must be >= 1, got {stride}")
    n_down = (rows - window) // stride + 1
    n_across = (cols - window) // stride + 1
    rects = tuple(
        Rect(x=c * stride, y=r * stride, w=window, h=window)
        for r in range(n_down)
        for c in range(n_across)
    )
    return WindowGrid(rows=rows, cols=cols, window=window, stride=stride, rects=rects)


def scan_features(
    img: np.ndarray, params: GlcmParams, window: int, stride: int
) -> list[tuple[Rect, FeatureVector]]:
    """Per-window feature vectors in grid order.

    The image must already be quantized to params.levels gray levels
    (a no-op at 256 levels for 8-bit input).
    """
    img = np.asarray(img)
    grid = tile_grid(img.shape[0], img.shape[1], window, stride)
    out = []
    for rect in grid.rects:
        probs = to_probabilities(compute_counts(extract_window(img, rect), params))
        out.append((rect, extract_all(probs)))
    return out


@dataclass(frozen=True)
class CalibrationProfile:
    """Reference statistics pooled over the windows of defect-free frames.

    mean_energy/std_energy drive detection; feature_stats holds the same
    (mean, std) pair for all six statistics. A profile only applies to
    runs with identical parameters, window and stride; use
    require_compatible() to enforce that.
    """

    params: GlcmParams
    window: int
    stride: int
    n_windows: int
    mean_energy: float
    std_energy: float
    feature_stats: dict[str, tuple[float, float]]

    def require_compatible(self, params: GlcmParams, window: int, stride: int) -> None:
        want = {
            "d": self.params.d,
            "theta": self.params.theta,
            "levels": self.params.levels,
            "symmetric": self.params.symmetric,
            "window": self.window,
            "stride": self.stride,
        }
        got = {
            "d": params.d,
            "theta": params.theta,
            "levels": params.levels,
            "symmetric": params.symmetric,
            "window": window,
            "stride": stride,
        }
        bad = [f"{k}: profile has {want[k]}, run requests {got[k]}" for k in want if want[k] != got[k]]
        if bad:
            raise ProfileMismatchError("; ".join(bad))

    def to_json_dict(self) -> dict:
        return {
            "version": PROFILE_VERSION,
            "d": self.params.d,
            "theta": self.params.theta,
            "g_levels": self.params.levels,
            "symmetric": self.params.symmetric,
            "window": self.window,
            "stride": self.stride,
            "n_windows": self.n_windows,
            "mean_energy": self.mean_energy,
            "std_energy": self.std_energy,
            "feature_stats": {
                name: {"mean": mean, "std": std}
                for name, (mean, std) in self.feature_stats.items()
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json_dict(cls, obj: dict) -> "CalibrationProfile":
        try:
            if obj["version"] != PROFILE_VERSION:
                raise ValueError(f"unsupported profile version {obj['version']}")
            params = GlcmParams(
                d=obj["d"], theta=obj["theta"], levels=obj["g_levels"], symmetric=obj["symmetric"]
            )
            stats = {
                name: (float(entry["mean"]), float(entry["std"]))
                for name, entry in obj["feature_stats"].items()
            }
            return cls(
                params=params,
                window=obj["window"],
                stride=obj["stride"],
                n_windows=obj["n_windows"],
                mean_energy=float(obj["mean_energy"]),
                std_energy=float(obj["std_energy"]),
                feature_stats=stats,
            )
        except KeyError as exc:
            raise ValueError(f"calibration profile missing field {exc}") from None

    @classmethod
    def from_json(cls, text: str) -> "CalibrationProfile":
        return cls.from_json_dict(json.loads(text))


def calibrate(
    clean_imgs, params: GlcmParams, window: int, stride: int
) -> CalibrationProfile:
    """Pool per-window statistics over defect-free frames into a reference.

    Frames may differ in size; every full window of every frame contributes
    one sample. Means and standard deviations are sample statistics (n - 1
    denominator), so at least two pooled windows are required.
    """
    clean_imgs = list(clean_imgs)
    if not clean_imgs:
        raise ValueError("at least one calibration image is required")
    samples = []
    for img in clean_imgs:
        samples.extend(fv.as_tuple() for _, fv in scan_features(img, params, window, stride))
    if len(samples) < 2:
        raise ValueError(f"calibration needs at least 2 pooled windows, got {len(samples)}")
    table = np.asarray(samples, dtype=np.float64)
    means = table.mean(axis=0)
    stds = table.std(axis=0, ddof=1)
    stats = {name: (float(means[i]), float(stds[i])) for i, name in enumerate(FEATURE_NAMES)}
    energy_mean, energy_std = stats["energy"]
    return CalibrationProfile(
        params=params,
        window=window,
        stride=stride,
        n_windows=len(samples),
        mean_energy=energy_mean,
        std_energy=energy_std,
        feature_stats=stats,
    )


@dataclass(frozen=True)
class WindowResult:
    index: int
    rect: Rect
    energy: float
    z_score: float
    flagged: bool


@dataclass(frozen=True)
class DetectionReport:
    """Per-window energies, deviations and flags for one frame."""

    frame_id: str
    params: GlcmParams
    window: int
    stride: int
    k: float
    one_sided: bool
    windows: tuple[WindowResult, ...]
    n_flagged: int
    elapsed_ms: float
    area_cm2: float | None = None

    def flagged_rects(self) -> list[Rect]:
        return [w.rect for w in self.windows if w.flagged]

    def to_json_dict(self, include_timing: bool = False) -> dict:
        # elapsed_ms varies run to run, so it stays out of the payload by
        # default: identical inputs must serialize to identical bytes
        obj = {
            "version": REPORT_VERSION,
            "frame_id": self.frame_id,
            "params": {
                "d": self.params.d,
                "theta": self.params.theta,
                "g_levels": self.params.levels,
                "symmetric": self.params.symmetric,
                "window": self.window,
                "stride": self.stride,
                "k": self.k,
                "one_sided": self.one_sided,
            },
            "n_windows": len(self.windows),
            "n_flagged": self.n_flagged,
            "windows": [
                {
                    "index": w.index,
                    "rect": {"x": w.rect.x, "y": w.rect.y, "w": w.rect.w, "h": w.rect.h},
                    "energy": w.energy,
                    "z_score": w.z_score,
                    "flagged": w.flagged,
                }
                for w in self.windows
            ],
        }
        if self.area_cm2 is not None:
            obj["area_cm2"] = self.area_cm2
        if include_timing:
            obj["elapsed_ms"] = self.elapsed_ms
        return obj

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_json_dict(include_timing), indent=2, sort_keys=True) + "\n"


def sigma_floor(mean_energy: float, std_energy: float) -> float:
    """Effective sigma for z-scores; guards perfectly uniform calibrations."""
    return max(std_energy, _SIGMA_FLOOR_REL * max(mean_energy, 1.0))


def detect(
    img: np.ndarray,
    profile: CalibrationProfile,
    k: float = 3.0,
    one_sided: bool = False,
    frame_id: str = "frame",
    area_cm2: float | None = None,
) -> DetectionReport:
    """Flag windows whose energy deviates more than k reference sigmas.

    Two-sided by default (|z| > k); with one_sided=True only energies above
    the reference mean flag. Deterministic for fixed inputs. The image must
    be quantized to the profile's level count.
    """
    if k <= 0:
        raise ValueError(f"threshold multiplier k must be positive, got {k}")
    start = time.perf_counter()
    sigma = sigma_floor(profile.mean_energy, profile.std_energy)
    results = []
    n_flagged = 0
    for index, (rect, fv) in enumerate(
        scan_features(img, profile.params, profile.window, profile.stride)
    ):
        z = (fv.energy - profile.mean_energy) / sigma
        flagged = (z > k) if one_sided else (abs(z) > k)
        n_flagged += int(flagged)
        results.append(
            WindowResult(index=index, rect=rect, energy=fv.energy, z_score=z, flagged=flagged)
        )
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return DetectionReport(
        frame_id=frame_id,
        params=profile.params,
        window=profile.window,
        stride=profile.stride,
        k=k,
        one_sided=one_sided,
        windows=tuple(results),
        n_flagged=n_flagged,
        elapsed_ms=elapsed_ms,
        area_cm2=area_cm2,
    )


def annotate(img: np.ndarray, report: DetectionReport) -> np.ndarray:
    """Outline every flagged window in white on a copy of the frame."""
    out = np.asarray(img).copy()
    for rect in report.flagged_rects():
        out = draw_square_outline(out, rect, level=ANNOTATION_LEVEL, thickness=ANNOTATION_THICKNESS)
    return out
