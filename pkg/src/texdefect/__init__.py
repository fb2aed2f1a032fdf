"""Texture defect detection from windowed gray-level co-occurrence statistics."""

from .cost_model import ScanCost, scan_steps, total_computations
from .detector import (
    CalibrationProfile,
    DetectionReport,
    ProfileMismatchError,
    WindowGrid,
    WindowResult,
    annotate,
    calibrate,
    detect,
    scan_features,
    tile_grid,
)
from .features import (
    FEATURE_NAMES,
    FeatureVector,
    contrast,
    correlation,
    energy,
    entropy,
    extract_all,
    homogeneity,
    max_probability,
)
from .glcm import ANGLES, Glcm, GlcmParams, compute_counts, displacement_vector, to_probabilities
from .imaging import (
    PgmParseError,
    Rect,
    draw_square_outline,
    extract_window,
    load_pgm,
    quantize,
    read_pgm,
    save_pgm,
    write_pgm,
)

__version__ = "0.1.0"

__all__ = [
    "ANGLES",
    "FEATURE_NAMES",
    "CalibrationProfile",
    "DetectionReport",
    "FeatureVector",
    "Glcm",
    "GlcmParams",
    "PgmParseError",
    "ProfileMismatchError",
    "Rect",
    "ScanCost",
    "WindowGrid",
    "WindowResult",
    "annotate",
    "calibrate",
    "compute_counts",
    "contrast",
    "correlation",
    "detect",
    "displacement_vector",
    "draw_square_outline",
    "energy",
    "entropy",
    "extract_all",
    "extract_window",
    "homogeneity",
    "load_pgm",
    "max_probability",
    "quantize",
    "read_pgm",
    "save_pgm",
    "scan_features",
    "scan_steps",
    "tile_grid",
    "to_probabilities",
    "total_computations",
    "write_pgm",
]
