"""Command-line front end.

Subcommands: analyze (closed-form breakdown and verdict), fit (calibrate a
platform profile from measurements), simulate (one deterministic run),
sweep (achievability grid to CSV/JSON), validate (simulation vs model).

Exit codes: 0 success/satisfied, 1 runtime or validation failure, 2 usage
error, 3 requirement not satisfied (analyze only).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from typing import List, Optional, Sequence

from . import calibration, desim, model, sweep as sweep_mod

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_UNSATISFIED = 3

_REQ_BY_FLAG = {
    "hr": model.HIGH_RESPONSIVENESS,
    "mr": model.MID_RESPONSIVENESS,
    "lr": model.LOW_RESPONSIVENESS,
}


def _ms(seconds: float) -> str:
    return f"{seconds * 1e3:.3f} ms"


def _write_atomic(path: str, data: str) -> None:
    """Write via a temp file in the target directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".edgecap-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _resolve_platform(parser: argparse.ArgumentParser, args) -> model.PlatformProfile:
    if getattr(args, "platform_file", None):
        try:
            with open(args.platform_file) as handle:
                return calibration.profile_from_json(handle.read())
        except OSError as exc:
            print(f"error: cannot read {args.platform_file}: {exc}", file=sys.stderr)
            raise SystemExit(EXIT_FAILURE)
        except calibration.CalibrationError as exc:
            parser.error(str(exc))
    if getattr(args, "platform", None):
        try:
            return calibration.preset(args.platform)
        except KeyError as exc:
            parser.error(exc.args[0])
    parser.error("one of --platform or --platform-file is required")
    raise AssertionError("unreachable")


def _channel(args) -> model.WirelessChannel:
    return model.WirelessChannel(
        goodput=args.goodput_mbps * 1e6,
        backhaul_latency=getattr(args, "backhaul_ms", 0.0) * 1e-3,
    )


def _requirement(parser: argparse.ArgumentParser, args) -> model.Requirement:
    if args.requirement and args.latency_ms is not None:
        parser.error("--requirement and --latency-ms are mutually exclusive")
    if args.requirement:
        return _REQ_BY_FLAG[args.requirement]
    if args.latency_ms is not None:
        return model.Requirement("custom", args.latency_ms * 1e-3)
    parser.error("one of --requirement or --latency-ms is required")
    raise AssertionError("unreachable")


def _add_platform_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--platform", help="preset name: central-server, coral-dev, jetson-nano")
    parser.add_argument("--platform-file", help="profile JSON produced by `edgecap fit`")


def _add_scenario_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--arch", required=True, choices=["centralized", "distributed"])
    _add_platform_flags(parser)
    parser.add_argument("--goodput-mbps", type=float, required=True)
    parser.add_argument("--side", type=int, default=600, help="frame side in pixels")
    parser.add_argument("--depth", type=int, default=8, help="color depth, bits per pixel")
    parser.add_argument("--backhaul-ms", type=float, default=0.0)


def _cmd_analyze(parser: argparse.ArgumentParser, args) -> int:
    platform = _resolve_platform(parser, args)
    req = _requirement(parser, args)
    try:
        scenario = model.Scenario(
            total_users=args.users,
            ap_count=args.aps,
            architecture=model.Architecture(args.arch),
            channel=_channel(args),
            platform=platform,
            frame=model.FrameSpec(side=args.side, color_depth=args.depth),
        )
    except ValueError as exc:
        parser.error(str(exc))
    satisfied, bd = model.check_requirement(scenario, req)
    n_max = model.max_users(scenario.channel, scenario.frame, req)
    print(f"users: {scenario.total_users}  aps: {scenario.ap_count}  per-AP users: {scenario.users_per_ap}")
    print(f"architecture: {args.arch}  platform: {platform.name}  goodput: {args.goodput_mbps:g} Mbps")
    print(f"wireless: {_ms(bd.wireless)}  processing: {_ms(bd.processing)}  backhaul: {_ms(bd.backhaul)}")
    print(f"total: {_ms(bd.total)}")
    print(f"wireless capacity N_max: {n_max}")
    verdict = "satisfied" if satisfied else "NOT satisfied"
    print(f"requirement {req.name} ({_ms(req.l_required)}): {verdict}")
    return EXIT_OK if satisfied else EXIT_UNSATISFIED


def _cmd_fit(parser: argparse.ArgumentParser, args) -> int:
    try:
        with open(args.input) as handle:
            samples = calibration.parse_measurements(handle.read())
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except calibration.CalibrationError as exc:
        print(f"error: {args.input}: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    if args.platform:
        samples = [s for s in samples if s.platform == args.platform]
    try:
        report = calibration.fit_platform(samples)
    except calibration.CalibrationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    try:
        _write_atomic(args.out, calibration.profile_to_json(report.profile))
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    print(
        f"fitted {report.profile.name}: a={report.profile.a * 1e3:.6g} ms, "
        f"b={report.profile.b * 1e3:.6g} ms/px^3 "
        f"(rmse {_ms(report.rmse)}, max residual {_ms(report.max_abs_residual)}, "
        f"{report.sample_count} samples)"
    )
    if report.clamped:
        print("warning: a negative coefficient was clamped to 0", file=sys.stderr)
    print(f"wrote {args.out}")
    return EXIT_OK


def _sim_config(parser: argparse.ArgumentParser, args) -> desim.SimConfig:
    platform = _resolve_platform(parser, args)
    try:
        return desim.SimConfig(
            ap_count=args.aps,
            users_per_ap=args.users_per_ap,
            architecture=model.Architecture(args.arch),
            frame=model.FrameSpec(side=args.side, color_depth=args.depth),
            channel=_channel(args),
            platform=platform,
            mode=desim.SimMode(args.mode),
            duration=args.duration,
            warmup=args.warmup,
            start_stagger=args.stagger,
        )
    except ValueError as exc:
        parser.error(str(exc))


def _cmd_simulate(parser: argparse.ArgumentParser, args) -> int:
    config = _sim_config(parser, args)
    result = desim.run(config)
    try:
        _write_atomic(args.out, result.to_json())
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    if result.no_samples:
        print("warning: no frames completed inside the measurement window", file=sys.stderr)
    print(
        f"{result.frames_completed} frames, mean {_ms(result.mean_latency)}, "
        f"p95 {_ms(result.p95_latency)}, max {_ms(result.max_latency)}"
    )
    print(f"wrote {args.out}")
    return EXIT_OK


def _int_list(text: str) -> List[int]:
    return [int(part) for part in text.split(",") if part]


def _float_list(text: str) -> List[float]:
    return [float(part) for part in text.split(",") if part]


def _cmd_sweep(parser: argparse.ArgumentParser, args) -> int:
    if args.arch == "both":
        archs = [model.Architecture.CENTRALIZED, model.Architecture.DISTRIBUTED]
    else:
        archs = [model.Architecture(args.arch)]
    platforms = []
    for name in args.platforms.split(","):
        try:
            platforms.append(calibration.preset(name.strip()))
        except KeyError as exc:
            parser.error(exc.args[0])
    try:
        grid = sweep_mod.SweepGrid(
            user_counts=args.users or sweep_mod.DEFAULT_USER_COUNTS,
            ap_counts=args.aps or sweep_mod.DEFAULT_AP_COUNTS,
            architectures=archs,
            platforms=platforms,
            channels=[model.WirelessChannel(goodput=m * 1e6) for m in args.goodput_mbps],
            frame=model.FrameSpec(side=args.side, color_depth=args.depth),
        )
    except ValueError as exc:
        parser.error(str(exc))
    cells = sweep_mod.run_sweep(grid)
    try:
        _write_atomic(args.out, sweep_mod.cells_to_csv(cells))
        if args.json:
            _write_atomic(args.json, sweep_mod.cells_to_json(cells))
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    print(f"wrote {len(cells)} cells to {args.out}")
    if args.json:
        print(f"wrote JSON mirror to {args.json}")
    return EXIT_OK


def _cmd_validate(parser: argparse.ArgumentParser, args) -> int:
    platform = _resolve_platform(parser, args)
    modes = [desim.SimMode(m) for m in args.modes.split(",")]
    channel = _channel(args)
    frame = model.FrameSpec(side=args.side, color_depth=args.depth)
    records = []
    all_passed = True
    for mode in modes:
        for n in range(1, args.max_users + 1):
            config = desim.SimConfig(
                ap_count=1,
                users_per_ap=n,
                architecture=model.Architecture.CENTRALIZED,
                frame=frame,
                channel=channel,
                platform=platform,
                mode=mode,
                duration=args.duration,
                warmup=args.warmup,
            )
            rec = desim.validate_against_model(config)
            records.append(rec)
            all_passed = all_passed and rec.passed
            status = "ok" if rec.passed else "FAIL"
            print(
                f"{mode.value:>13}  N={n:>2}  model {_ms(rec.analytical):>12}  "
                f"sim {_ms(rec.simulated_mean):>12}  rel gap {rec.rel_gap:.3e}  {status}"
            )
    if args.out:
        payload = {
            "platform": platform.name,
            "goodput_mbps": args.goodput_mbps,
            "side": args.side,
            "depth": args.depth,
            "n_max": {
                req.name: model.max_users(channel, frame, req)
                for req in model.DEFAULT_REQUIREMENTS
            },
            "records": [
                {
                    "mode": rec.mode.value,
                    "n": rec.users_per_ap,
                    "analytical_ms": rec.analytical * 1e3,
                    "simulated_mean_ms": rec.simulated_mean * 1e3,
                    "simulated_min_ms": rec.simulated_min * 1e3,
                    "simulated_max_ms": rec.simulated_max * 1e3,
                    "rel_gap": rec.rel_gap,
                    "frames_completed": rec.frames_completed,
                    "passed": rec.passed,
                }
                for rec in records
            ],
        }
        try:
            _write_atomic(args.out, json.dumps(payload, indent=2) + "\n")
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_FAILURE
        print(f"wrote {args.out}")
    return EXIT_OK if all_passed else EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgecap",
        description="Latency and capacity planning for edge-offloaded AR pipelines.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="closed-form latency breakdown and verdict")
    p_analyze.add_argument("--users", type=int, required=True)
    p_analyze.add_argument("--aps", type=int, required=True)
    _add_scenario_flags(p_analyze)
    p_analyze.add_argument("--requirement", choices=["hr", "mr", "lr"])
    p_analyze.add_argument("--latency-ms", type=float, help="custom latency budget")
    p_analyze.set_defaults(func=_cmd_analyze)

    p_fit = sub.add_parser("fit", help="fit a platform profile from measurements CSV")
    p_fit.add_argument("--input", required=True, help="measurement CSV")
    p_fit.add_argument("--out", required=True, help="profile JSON to write")
    p_fit.add_argument("--platform", help="keep only this platform's rows")
    p_fit.set_defaults(func=_cmd_fit)

    p_sim = sub.add_parser("simulate", help="one deterministic simulation run")
    p_sim.add_argument("--aps", type=int, required=True)
    p_sim.add_argument("--users-per-ap", type=int, required=True)
    _add_scenario_flags(p_sim)
    p_sim.add_argument(
        "--mode",
        choices=[m.value for m in desim.SimMode],
        default=desim.SimMode.COMBINED.value,
    )
    p_sim.add_argument("--duration", type=float, default=1020.0, help="simulated seconds")
    p_sim.add_argument("--warmup", type=float, default=102.0)
    p_sim.add_argument("--stagger", type=float, default=0.0, help="start offset per user, seconds")
    p_sim.add_argument("--out", required=True, help="result JSON to write")
    p_sim.set_defaults(func=_cmd_simulate)

    p_sweep = sub.add_parser("sweep", help="achievability grid to CSV (and JSON mirror)")
    p_sweep.add_argument("--goodput-mbps", type=_float_list, default=[450.0, 1000.0])
    p_sweep.add_argument("--arch", choices=["centralized", "distributed", "both"], default="both")
    p_sweep.add_argument(
        "--platforms", default="central-server,coral-dev,jetson-nano", help="comma-separated presets"
    )
    p_sweep.add_argument("--users", type=_int_list, help="comma-separated user counts")
    p_sweep.add_argument("--aps", type=_int_list, help="comma-separated AP counts")
    p_sweep.add_argument("--side", type=int, default=600)
    p_sweep.add_argument("--depth", type=int, default=8)
    p_sweep.add_argument("--out", required=True, help="CSV to write")
    p_sweep.add_argument("--json", help="optional JSON mirror")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_val = sub.add_parser("validate", help="compare simulation against the model")
    p_val.add_argument("--max-users", type=int, required=True)
    _add_platform_flags(p_val)
    p_val.add_argument("--goodput-mbps", type=float, required=True)
    p_val.add_argument("--side", type=int, default=600)
    p_val.add_argument("--depth", type=int, default=8)
    p_val.add_argument("--backhaul-ms", type=float, default=0.0)
    p_val.add_argument(
        "--modes",
        default="wireless-only,compute-only,combined",
        help="comma-separated simulation modes",
    )
    p_val.add_argument("--duration", type=float, default=1020.0)
    p_val.add_argument("--warmup", type=float, default=102.0)
    p_val.add_argument("--out", help="optional validation JSON")
    p_val.set_defaults(func=_cmd_validate)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    # Reserved for parallel spot validation; parsed here so misconfiguration
    # surfaces early.
    threads = os.environ.get("EDGECAP_THREADS", "0")
    try:
        workers = int(threads)
        if workers < 0:
            raise ValueError
    except ValueError:
        parser.error(f"EDGECAP_THREADS must be a nonnegative integer, got {threads!r}")
    args.workers = workers or (os.cpu_count() or 1)
    return args.func(parser, args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
