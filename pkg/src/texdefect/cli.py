"""Command-line front end: calibrate, detect, scan, stream, bench.

Exit codes: 0 clean, 2 defects found, 1 any error (including usage).
Report, trace and annotated-image payloads are byte-reproducible across
runs on identical inputs; wall-clock timings appear only on the console
unless --timestamps is given.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, fields
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from .cost_model import total_computations
from .detector import (
    CalibrationProfile,
    DetectionReport,
    ProfileMismatchError,
    annotate,
    calibrate,
    detect,
    scan_features,
)
from .features import FeatureVector
from .glcm import GlcmParams
from .imaging import Rect, quantize, read_pgm, write_pgm

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_DEFECTS = 2

TRACE_HEADER = "step,x,y,energy,entropy,contrast,homogeneity,correlation,max_prob"

# config-file keys may use the profile spelling for the level count
_CONFIG_ALIASES = {"g_levels": "levels"}


@dataclass
class RunConfig:
    """Resolved run parameters; the defaults are the standard operating point."""

    d: int = 1
    theta: int = 0
    levels: int = 256
    symmetric: bool = False
    window: int = 50
    stride: int | None = None  # None resolves to the window size
    k: float = 3.0
    one_sided: bool = False
    budget_ms: float = 500.0
    out_dir: str = "."
    frame_pattern: str = "*.pgm"
    area_cm2: float | None = None
    timestamps: bool = False

    def glcm_params(self) -> GlcmParams:
        return GlcmParams(d=self.d, theta=self.theta, levels=self.levels, symmetric=self.symmetric)


def _resolve_config(args) -> tuple[RunConfig, set[str]]:
    """Merge defaults < config file < explicit flags; track what was set."""
    config = RunConfig()
    explicit: set[str] = set()
    config_path = getattr(args, "config", None)
    if config_path:
        raw = json.loads(Path(config_path).read_text())
        if not isinstance(raw, dict):
            raise ValueError("config file must hold a flat JSON object")
        valid = {f.name for f in fields(RunConfig)}
        for key, value in raw.items():
            name = _CONFIG_ALIASES.get(key, key)
            if name not in valid:
                raise ValueError(f"unknown config field {key!r}")
            setattr(config, name, value)
            explicit.add(name)
    for field in fields(RunConfig):
        value = getattr(args, field.name, None)
        if value is not None:
            setattr(config, field.name, value)
            explicit.add(field.name)
    return config, explicit


def _fill_stride(config: RunConfig) -> None:
    if config.stride is None:
        config.stride = config.window


def _apply_profile(config: RunConfig, explicit: set[str], profile: CalibrationProfile) -> None:
    """Inherit parameters the user didn't set from the profile; reject conflicts."""
    inherited = {
        "d": profile.params.d,
        "theta": profile.params.theta,
        "levels": profile.params.levels,
        "symmetric": profile.params.symmetric,
        "window": profile.window,
        "stride": profile.stride,
    }
    for name, value in inherited.items():
        if name not in explicit:
            setattr(config, name, value)
    _fill_stride(config)
    profile.require_compatible(config.glcm_params(), config.window, config.stride)


def _out_dir(config: RunConfig) -> Path:
    path = Path(config.out_dir)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _load_profile(path) -> CalibrationProfile:
    return CalibrationProfile.from_json(Path(path).read_text())


def format_trace_row(step: int, rect: Rect, fv: FeatureVector) -> str:
    values = [str(step), str(rect.x), str(rect.y)]
    values += [repr(v) for v in fv.as_tuple()]
    return ",".join(values)


def _dump_report(report: DetectionReport, with_timing: bool) -> str:
    obj = report.to_json_dict(include_timing=with_timing)
    if with_timing:
        obj["timestamp"] = datetime.now(timezone.utc).isoformat()
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _write_frame_outputs(
    out_dir: Path, frame_id: str, raw: np.ndarray, report: DetectionReport, with_timing: bool
) -> None:
    (out_dir / f"{frame_id}.report.json").write_text(_dump_report(report, with_timing))
    # annotations go on the original (unquantized) frame
    write_pgm(out_dir / f"{frame_id}.annotated.pgm", annotate(raw, report))


def _cmd_calibrate(args) -> int:
    config, _ = _resolve_config(args)
    _fill_stride(config)
    frames = []
    failures = 0
    for path in args.frames:
        try:
            frames.append(quantize(read_pgm(path), config.levels))
        except (OSError, ValueError) as exc:
            print(f"error: {path}: {exc}", file=sys.stderr)
            failures += 1
    if failures:
        return EXIT_ERROR
    profile = calibrate(frames, config.glcm_params(), config.window, config.stride)
    out_path = _out_dir(config) / "profile.json"
    out_path.write_text(profile.to_json())
    print(f"calibrated on {len(frames)} frame(s), {profile.n_windows} windows")
    print(f"mean_energy={profile.mean_energy!r} std_energy={profile.std_energy!r}")
    print(f"profile written to {out_path}")
    return EXIT_OK


def _cmd_detect(args) -> int:
    config, explicit = _resolve_config(args)
    profile = _load_profile(args.profile)
    _apply_profile(config, explicit, profile)
    raw = read_pgm(args.frame)
    img = quantize(raw, config.levels)
    frame_id = Path(args.frame).stem
    report = detect(
        img,
        profile,
        k=config.k,
        one_sided=config.one_sided,
        frame_id=frame_id,
        area_cm2=config.area_cm2,
    )
    _write_frame_outputs(_out_dir(config), frame_id, raw, report, config.timestamps)
    print(
        f"{frame_id}: {report.n_flagged}/{len(report.windows)} windows flagged "
        f"({report.elapsed_ms:.1f} ms)"
    )
    return EXIT_DEFECTS if report.n_flagged else EXIT_OK


def _cmd_scan(args) -> int:
    config, _ = _resolve_config(args)
    _fill_stride(config)
    img = quantize(read_pgm(args.frame), config.levels)
    rows = scan_features(img, config.glcm_params(), config.window, config.stride)
    trace_path = _out_dir(config) / f"{Path(args.frame).stem}.trace.csv"
    lines = [TRACE_HEADER]
    lines += [format_trace_row(step, rect, fv) for step, (rect, fv) in enumerate(rows)]
    trace_path.write_text("\n".join(lines) + "\n")
    print(f"{len(rows)} windows traced to {trace_path}")
    return EXIT_OK


def _cmd_stream(args) -> int:
    config, explicit = _resolve_config(args)
    profile = _load_profile(args.profile)
    _apply_profile(config, explicit, profile)
    frame_dir = Path(args.frame_dir)
    paths = sorted(frame_dir.glob(config.frame_pattern))
    if not paths:
        print(f"warning: no frames matching {config.frame_pattern!r} in {frame_dir}", file=sys.stderr)
        return EXIT_OK
    out_dir = _out_dir(config)
    latencies = []
    failures = 0
    total_flagged = 0
    for path in paths:
        start = time.perf_counter()
        try:
            raw = read_pgm(path)
            img = quantize(raw, config.levels)
            report = detect(
                img,
                profile,
                k=config.k,
                one_sided=config.one_sided,
                frame_id=path.stem,
                area_cm2=config.area_cm2,
            )
            _write_frame_outputs(out_dir, path.stem, raw, report, config.timestamps)
        except (OSError, ValueError) as exc:
            print(f"error: {path.name}: {exc}", file=sys.stderr)
            failures += 1
            continue
        elapsed = (time.perf_counter() - start) * 1000.0
        latencies.append(elapsed)
        total_flagged += report.n_flagged
        over = "  OVER-BUDGET" if elapsed > config.budget_ms else ""
        print(f"{path.name}: {report.n_flagged} flagged, {elapsed:.1f} ms{over}")
    if latencies:
        mean_ms = sum(latencies) / len(latencies)
        n_over = sum(1 for ms in latencies if ms > config.budget_ms)
        print(
            f"mean latency {mean_ms:.1f} ms over {len(latencies)} frame(s), "
            f"{n_over} over the {config.budget_ms:.0f} ms budget"
        )
    if failures:
        return EXIT_ERROR
    return EXIT_DEFECTS if total_flagged else EXIT_OK


def _bench_frame(rows: int, cols: int, levels: int) -> np.ndarray:
    # deterministic striped texture, already in [0, levels)
    line = (np.arange(cols) % 16) * (levels // 16 or 1)
    return np.tile(np.minimum(line, levels - 1).astype(np.uint8), (rows, 1))


def _cmd_bench(args) -> int:
    config, _ = _resolve_config(args)
    rows, cols = args.rows, args.cols
    print(f"{'window_size':>11}  {'steps':>6}  {'total_ops':>14}  {'total_ops_e9':>12}  {'wall_ms_per_frame':>17}")
    frame = _bench_frame(rows, cols, config.levels)
    for window in args.windows:
        cost = total_computations(rows, cols, window, config.levels)
        params = GlcmParams(
            d=config.d, theta=config.theta, levels=config.levels, symmetric=config.symmetric
        )
        start = time.perf_counter()
        scan_features(frame, params, window, window)
        wall_ms = (time.perf_counter() - start) * 1000.0
        print(
            f"{window:>11}  {cost.steps:>6}  {cost.total_ops:>14}  "
            f"{cost.total_ops_e9:>12}  {wall_ms:>17.1f}"
        )
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1: the exit-code contract reserves 2 for defects
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _add_shared_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", metavar="FILE", help="JSON config file; flags override it")
    parser.add_argument("--d", type=int, help="inter-pixel distance (default 1)")
    parser.add_argument(
        "--theta", type=int, choices=(0, 45, 90, 135), help="displacement angle in degrees (default 0)"
    )
    parser.add_argument("--levels", type=int, help="quantized gray levels, 2..256 (default 256)")
    parser.add_argument(
        "--symmetric",
        action=argparse.BooleanOptionalAction,
        help="count pixel pairs in both orders",
    )
    parser.add_argument("--window", type=int, help="window size in pixels (default 50)")
    parser.add_argument("--stride", type=int, help="window step in pixels (default: window size)")
    parser.add_argument("--k", type=float, help="z-score threshold multiplier (default 3)")
    parser.add_argument(
        "--one-sided",
        action=argparse.BooleanOptionalAction,
        help="flag only energies above the reference mean",
    )
    parser.add_argument("--budget-ms", type=float, help="per-frame latency budget (default 500)")
    parser.add_argument("--out-dir", metavar="DIR", help="directory for output files (default .)")
    parser.add_argument(
        "--timestamps",
        action=argparse.BooleanOptionalAction,
        help="include wall-clock timing in report payloads",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="texdefect",
        description="GLCM energy based sliding-window texture defect detection",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("calibrate", help="learn reference statistics from defect-free frames")
    p.add_argument("frames", nargs="+", metavar="FRAME", help="defect-free PGM frames")
    _add_shared_flags(p)
    p.set_defaults(func=_cmd_calibrate)

    p = sub.add_parser("detect", help="flag defective windows in one frame")
    p.add_argument("frame", metavar="FRAME")
    p.add_argument("--profile", required=True, metavar="FILE", help="calibration profile JSON")
    _add_shared_flags(p)
    p.set_defaults(func=_cmd_detect)

    p = sub.add_parser("scan", help="write the per-window feature trace CSV for one frame")
    p.add_argument("frame", metavar="FRAME")
    _add_shared_flags(p)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("stream", help="process a directory of frames sequentially")
    p.add_argument("frame_dir", metavar="FRAME_DIR")
    p.add_argument("--profile", required=True, metavar="FILE", help="calibration profile JSON")
    _add_shared_flags(p)
    p.set_defaults(func=_cmd_stream)

    p = sub.add_parser("bench", help="operation-count table plus measured per-frame wall time")
    p.add_argument("--rows", type=int, default=461)
    p.add_argument("--cols", type=int, default=512)
    p.add_argument("--windows", type=int, nargs="+", default=[30, 50, 100], metavar="W")
    _add_shared_flags(p)
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ProfileMismatchError as exc:
        print(f"error: profile incompatible with requested parameters: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
