"""Command-line entry points: run, sweep, check-theorem."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import ConfigError, ScenarioConfig, load_config
from .harness import run_scenario, sweep_accuracy, write_sweep_csv
from .safety import CSV_PHI_TOLERANCE, check_theorem
from .trace import read_trace_csv, write_trace_csv

EXIT_OK = 0
EXIT_CONFIG_ERROR = 1
EXIT_CHECK_FAILED = 2


def _parse_grid(spec: str) -> list[float]:
    try:
        start, stop, step = (float(x) for x in spec.split(":"))
    except ValueError as exc:
        raise ConfigError(f"grid must be 'start:stop:step', got {spec!r}") from exc
    if step <= 0 or stop < start:
        raise ConfigError(f"invalid grid range {spec!r}")
    grid = []
    k = 0
    while True:
        value = round(start + k * step, 12)
        if value > stop + 1e-12:
            break
        grid.append(min(value, stop))
        k += 1
    return grid


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="accsim",
                                     description="ACC spoofing-attack simulator")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run one scenario and write its trace CSV")
    p_run.add_argument("--config", required=True)
    p_run.add_argument("--seed", type=int, default=None, help="override the config seed")
    p_run.add_argument("--out", default=".", help="output directory")

    p_sweep = sub.add_parser("sweep", help="IDS accuracy sweep")
    p_sweep.add_argument("--config", required=True)
    p_sweep.add_argument("--grid", required=True, help="accuracy grid as start:stop:step")
    p_sweep.add_argument("--repeats", type=int, default=1)
    p_sweep.add_argument("--out", default=".", help="output directory")

    p_check = sub.add_parser("check-theorem",
                             help="verify the fail-safe braking guarantee on a trace")
    p_check.add_argument("--trace", required=True)
    p_check.add_argument("--config", default=None,
                         help="scenario config for physical/IDS parameters "
                              "(defaults used when omitted)")
    p_check.add_argument("--out", default=None,
                         help="also write the report to this directory")
    return parser


def cmd_run(args) -> int:
    cfg = load_config(args.config)
    if args.seed is not None:
        from dataclasses import replace
        cfg = replace(cfg, seed=args.seed)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    trace = run_scenario(cfg)
    out_path = out_dir / (Path(args.config).stem + "_trace.csv")
    write_trace_csv(trace, out_path)
    print(f"wrote {len(trace)} rows to {out_path}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    cfg = load_config(args.config)
    grid = _parse_grid(args.grid)
    results = sweep_accuracy(cfg, grid, repeats=args.repeats)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    out_path = out_dir / (Path(args.config).stem + "_sweep.csv")
    write_sweep_csv(results, out_path)
    print(f"wrote {len(results)} results to {out_path}")
    return EXIT_OK


def cmd_check(args) -> int:
    cfg = load_config(args.config) if args.config else ScenarioConfig()
    trace = read_trace_csv(args.trace)
    # The trace went through the 9-significant-digit CSV format, so the
    # margin identity is checked at the matching quantization tolerance.
    report = check_theorem(trace, cfg.physical, cfg.ids,
                           tolerance=CSV_PHI_TOLERANCE)
    text = report.to_text()
    sys.stdout.write(text)
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        report_path = out_dir / (Path(args.trace).stem + "_theorem.txt")
        report_path.write_text(text, encoding="utf-8")
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return cmd_run(args)
        if args.command == "sweep":
            return cmd_sweep(args)
        return cmd_check(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR


if __name__ == "__main__":
    sys.exit(main())
