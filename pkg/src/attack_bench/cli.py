"""``attack-bench`` command line.

Exit status: 0 success, 1 I/O or input-file error, 2 usage or config error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .experiment import ConfigError, build_config, parse_config_text, run_experiment
from .graph import GraphError

EXIT_IO = 1
EXIT_USAGE = 2


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="attack-bench", description="Edge-attack robustness experiments.")
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="run an experiment grid and write CSV results")
    run.add_argument("--config", type=Path, help="flat key = value file mirroring the flags")
    run.add_argument("--network", action="append", help="network file (repeatable)")
    run.add_argument("--format", choices=("edgelist", "gml"), help="format of --network files")
    run.add_argument("--gen", action="append", metavar="gnm:N:M|ba:N:M", help="generated network (repeatable)")
    run.add_argument("--strategies", help="comma list from rne,ide,ibe")
    run.add_argument("--measure", choices=("node", "edge"))
    run.add_argument("--varpi", help="exponent on endpoint degrees for ide (default 1)")
    run.add_argument("--thresholds", help="comma list of q in (0, 1] (default 0.2,0.5,0.7,1.0)")
    run.add_argument("--replicates", help="seeded replicates for rne and random graphs (default 100)")
    run.add_argument("--seed", help="base seed; replicate i uses seed + i")
    run.add_argument("--control", action="store_true", default=None, help="add a matched G(n,m) control per network")
    run.add_argument("--out", help="output directory")
    run.add_argument("--stride", help="also write every n-th curve point to *.plot.csv")
    run.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    values: dict = {}
    if args.config is not None:
        try:
            text = args.config.read_text(encoding="utf-8")
        except OSError as exc:
            print(f"attack-bench: cannot read config: {exc}", file=sys.stderr)
            return EXIT_IO
        try:
            values = parse_config_text(text)
        except ConfigError as exc:
            print(f"attack-bench: {exc}", file=sys.stderr)
            return EXIT_USAGE
    for key in ("network", "format", "gen", "strategies", "measure", "varpi", "thresholds",
                "replicates", "seed", "control", "out", "stride"):
        value = getattr(args, key)
        if value is not None:
            values[key] = value
    try:
        config = build_config(values)
    except ConfigError as exc:
        print(f"attack-bench: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        results = run_experiment(config)
    except (OSError, GraphError) as exc:
        print(f"attack-bench: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {len(results)} curves and index.csv to {config.out_dir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
