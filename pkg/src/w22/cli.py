"""Command line entry point: ``w22 verify <suite>``."""

from __future__ import annotations

import argparse
import os
import sys

from .verify import SUITES, ConfigError, RunConfig, load_config, render_report, run_suite

EXIT_PASS, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="w22", description="Exact W(2,2) module checks.")
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run a verification suite and emit a JSON report")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--config", help="JSON file with parameters (scalars as \"p/q\" strings)")
    v.add_argument("--seed", type=int, default=None, help="seed for random parameter draws")
    v.add_argument("--out", help="write the report here instead of stdout")
    v.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                   help="worker processes (default: CPU count)")
    v.add_argument("--timings", action="store_true",
                   help="record wall-clock millis per check (makes output non-reproducible)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.seed is not None and args.seed < 0:
            raise ConfigError("--seed: must be non-negative")
        if args.jobs < 1:
            raise ConfigError("--jobs: must be >= 1")
        if args.config:
            cfg = load_config(args.config, args.seed)
        else:
            cfg = RunConfig(seed=args.seed or 0)
        report = run_suite(cfg, args.suite, jobs=args.jobs, timings=args.timings)
    except ConfigError as exc:
        print("w22: config error: %s" % exc, file=sys.stderr)
        return EXIT_CONFIG
    text = render_report(report)
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    s = report["summary"]
    print("w22 verify %s: %d passed, %d failed, %d skipped"
          % (args.suite, s["passed"], s["failed"], s["skipped"]), file=sys.stderr)
    return EXIT_FAIL if s["failed"] else EXIT_PASS


if __name__ == "__main__":
    sys.exit(main())
