# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT
"""
`tfad.cli.main`

Command line entry point::

    tfad synth --output data --seed 7
    tfad train --config tfad.yaml --train data/train.ndjson --val data/val.ndjson
    tfad detect --checkpoint tfad-checkpoint.json --data data/test.ndjson --output out
    tfad eval --predictions out --truth data/test.ndjson --output report.yaml

On success the last line on stdout is ``ok command=<name> key=value ...`` with sorted keys.
On failure ``error[<category>]: <message>`` is printed on stderr and the exit code tells the
category.
"""

import argparse
import logging
import sys

from .. import __version__
from ..errors import CONFIG, INPUT, MODEL, NUMERIC, TfadError
from ..experiments import VARIANTS
from ..synth.anomalykind import AnomalyKind
from . import commands
from .pipelineconfig import PipelineConfig

logger = logging.getLogger("tfad")

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_USAGE = 2
EXIT_CODES = {INPUT: 3, NUMERIC: 4, MODEL: 5, CONFIG: 6}


def _common(parser: argparse.ArgumentParser):
    parser.add_argument("--config", help="YAML configuration file")
    parser.add_argument("--seed", type=int, help="Root seed, overrides the configuration one")
    parser.add_argument("--debug", action="store_true", help="Log every pipeline stage")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tfad", description="Time-frequency anomaly detection")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="Train a model and write the checkpoint")
    _common(p)
    p.add_argument("--train", help="Training dataset (CSV, NDJSON or directory)")
    p.add_argument("--val", help="Labeled validation dataset used to pick the threshold")
    p.add_argument("--checkpoint", help="Checkpoint file to write")

    p = sub.add_parser("detect", help="Score series and label their points")
    _common(p)
    p.add_argument("--checkpoint", help="Checkpoint written by train")
    p.add_argument("--data", required=True, help="Dataset to score")
    p.add_argument("--output", help="Output directory")
    p.add_argument("--threshold", type=float, help="Window threshold, the checkpoint one by default")

    p = sub.add_parser("eval", help="Point adjusted precision, recall and F1")
    _common(p)
    p.add_argument("--predictions", required=True, help="detect output directory or labeled file")
    p.add_argument("--truth", required=True, help="Labeled dataset")
    p.add_argument("--output", default="report.yaml", help="Report file")

    p = sub.add_parser("synth", help="Generate a labeled synthetic benchmark")
    _common(p)
    p.add_argument("--output", default="data", help="Output directory")
    p.add_argument("--series", type=int, default=10, help="Number of series")
    p.add_argument("--length", type=int, default=2000, help="Samples per series")
    p.add_argument("--dims", type=int, default=1, help="Dimensions per series")
    p.add_argument("--anomaly-fraction", type=float, default=0.02, help="Labeled fraction per series")
    p.add_argument("--kinds", nargs="+", choices=[str(k) for k in AnomalyKind.members()], help="Anomaly kinds")
    p.add_argument("--preset", choices=commands.PRESETS, default="default", help="Benchmark preset")

    p = sub.add_parser("augment", help="Write the augmented training windows")
    _common(p)
    p.add_argument("--data", help="Training dataset")
    p.add_argument("--output", default="augmented.ndjson", help="Output NDJSON file")

    p = sub.add_parser("ablation", help="Compare branch, decomposition and augmentation variants")
    _common(p)
    p.add_argument("--data", help="Benchmark directory written by synth, generated when omitted")
    p.add_argument("--preset", choices=commands.PRESETS, default="seasonal", help="Preset of the generated benchmark")
    p.add_argument("--series", type=int, default=10, help="Series of the generated benchmark")
    p.add_argument("--length", type=int, default=2000, help="Length of the generated series")
    p.add_argument("--variants", nargs="+", choices=list(VARIANTS), help="Variants to run, all by default")
    p.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2, 3, 4], help="Training seeds")
    p.add_argument("--output", default="ablation.yaml", help="Report file")

    return parser


def load_config(args) -> PipelineConfig:
    config = PipelineConfig.load(args.config) if args.config else PipelineConfig()
    if args.seed is not None:
        config.seed = args.seed
    return config.validate()


def run(args) -> dict:
    if args.command == "synth":
        seed = args.seed if args.seed is not None else load_config(args).seed
        return commands.cmd_synth(
            args.output, seed, args.series, args.length, args.anomaly_fraction, args.dims, args.kinds, args.preset
        )
    if args.command == "eval":
        return commands.cmd_eval(args.predictions, args.truth, args.output)

    config = load_config(args)
    if args.command == "train":
        return commands.cmd_train(config, args.train, args.val, args.checkpoint, args.debug)
    if args.command == "detect":
        checkpoint = args.checkpoint or config.paths.checkpoint
        return commands.cmd_detect(checkpoint, args.data, args.output or config.paths.output, args.threshold, args.debug)
    if args.command == "augment":
        return commands.cmd_augment(config, args.data, args.output, args.debug)
    return commands.cmd_ablation(config, args.output, args.seeds, args.variants, args.data, args.preset, args.series, args.length)


def summary_line(command: str, summary: dict) -> str:
    fields = " ".join(f"{key}={summary[key]}" for key in sorted(summary))
    return f"ok command={command} {fields}".rstrip()


def _configure_logging(debug: bool):
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    logger.handlers[:] = [handler]
    logger.propagate = False
    logger.setLevel(logging.DEBUG if debug else logging.INFO)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    _configure_logging(args.debug)
    try:
        summary = run(args)
    except TfadError as e:
        print(f"error[{e.category}]: {e}", file=sys.stderr)
        return EXIT_CODES.get(e.category, EXIT_UNEXPECTED)
    except Exception as e:  # noqa: BLE001
        logger.debug("Unexpected failure", exc_info=True)
        print(f"error[unexpected]: {e}", file=sys.stderr)
        return EXIT_UNEXPECTED

    print(summary_line(args.command, summary))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
