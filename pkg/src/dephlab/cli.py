"""Command line entry point: ``dephlab run`` and ``dephlab scan``."""
from __future__ import annotations

import argparse
import logging
import sys

from .errors import ConfigError, DephlabError, DomainError
from .lab.config import load_config
from .lab.emit import emit_csv, emit_plot
from .lab.experiment import run_scan, run_timeseries

log = logging.getLogger("dephlab")


def _overrides(items):
    out = {}
    for item in items or ():
        if "=" not in item:
            raise ConfigError(f"override {item!r} is not key=value")
        key, value = item.split("=", 1)
        out[key.strip()] = value.strip()
    return out


def _write(path, emitter, result):
    if path == "-":
        emitter(result, sys.stdout.buffer)
        return
    with open(path, "wb") as fh:
        emitter(result, fh)
    log.info("wrote %s", path)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dephlab", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (("run", "time series of all five distances"),
                            ("scan", "MAX[D(t)-D(0)] over a parameter axis")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", required=True, help="configuration file")
        p.add_argument("--csv", help="CSV output path ('-' for stdout)")
        p.add_argument("--plot", help="SVG output path")
        p.add_argument("--override", action="append", metavar="KEY=VALUE", help="override a config key (repeatable)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        cfg = load_config(args.config, _overrides(args.override))
        if args.command == "scan" and cfg.scan is None:
            raise ConfigError("scan needs scan_axis and scan_values")
    except (ConfigError, DomainError) as exc:
        print(f"dephlab: invalid configuration: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"dephlab: {exc}", file=sys.stderr)
        return 1
    try:
        result = run_scan(cfg) if args.command == "scan" else run_timeseries(cfg)
        csv_path = args.csv or cfg.csv
        plot_path = args.plot or cfg.plot
        if csv_path is None and plot_path is None:
            csv_path = "-"
        if csv_path:
            _write(csv_path, emit_csv, result)
        if plot_path:
            _write(plot_path, emit_plot, result)
    except (DephlabError, OSError) as exc:
        print(f"dephlab: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
