# Canopy - Byzantine approximate agreement on trees, with a lockstep network simulator.
# Copyright (C) 2024-present  Canopy contributors

# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from canopy.bounds import BoundParams, k_bound, k_bound_simple, lb_rounds, lb_rounds_closed_form
from canopy.config import Config
from canopy.errors import CanopyError, ReportError
from canopy.harness.adversaries import registry
from canopy.harness.experiment import FORMATS, ExperimentConfig, run_experiment
from canopy.harness.generators import generate_tree, parse_generator_spec
from canopy.harness.report import write_report
from canopy.protocols import MODES, plan_iterations
from canopy.tree import format_tree

log = logging.getLogger(__name__)


def _seeds(text):
    seeds = []
    for part in text.split(","):
        first, dash, last = part.strip().partition("-")
        try:
            seeds.extend(range(int(first), int(last) + 1) if dash else [int(first)])
        except ValueError:
            raise argparse.ArgumentTypeError(f"{part!r} is not a seed or a seed range like 0-99") from None
    return tuple(seeds)


def build_parser(version="0"):
    parser = argparse.ArgumentParser(prog="canopy", description="Byzantine approximate agreement on trees.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {version}")
    parser.add_argument("--log-level", help=f"logging level (default {Config.LOG_LEVEL})")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run an experiment and report verdicts")
    source = run.add_mutually_exclusive_group()
    source.add_argument("--tree", dest="tree_file", help="edge-list file")
    source.add_argument("--gen", dest="generator", help="generator spec kind:size[:seed]")
    run.add_argument("--n", type=int)
    run.add_argument("--t", type=int)
    run.add_argument("--inputs", help="random, endpoints (endpoints-of-diameter) or explicit:LABEL[,LABEL...]")
    run.add_argument("--adversary", help=f"one of {', '.join(registry().names)}")
    run.add_argument("--seeds", type=_seeds, help="seeds like 7, 1,2,3 or 0-99")
    run.add_argument("--mode", choices=MODES)
    run.add_argument("--out", help="write the report here instead of stdout")
    run.add_argument("--format", choices=FORMATS)
    run.add_argument("--emit-transcripts", action="store_true", default=None)
    run.add_argument("--config", help="JSON experiment config; flags override it")

    gen = sub.add_parser("gen-tree", help="print a generated tree as an edge list")
    gen.add_argument("--gen", dest="generator", required=True, help="kind:size[:seed]")
    gen.add_argument("--out")

    bounds = sub.add_parser("bounds", help="evaluate the round-complexity bounds")
    bounds.add_argument("--n", type=int, required=True)
    bounds.add_argument("--t", type=int, required=True)
    bounds.add_argument("--d", type=float, required=True)
    bounds.add_argument("--R", type=int, help="largest R to tabulate (default: the lower bound)")

    return parser


def _run(args):
    overrides = {
        "tree_file": args.tree_file,
        "generator": args.generator,
        "n": args.n,
        "t": args.t,
        "adversary": args.adversary,
        "seeds": args.seeds,
        "mode": args.mode,
        "format": args.format,
        "emit_transcripts": args.emit_transcripts,
    }
    if args.inputs is not None:
        how, _, labels = args.inputs.partition(":")
        overrides["inputs"] = how
        if labels:
            overrides["labels"] = tuple(labels.split(","))

    if args.config:
        cfg = ExperimentConfig.from_file(args.config, **overrides)
    else:
        cfg = ExperimentConfig.from_mapping({k: v for k, v in overrides.items() if v is not None})

    reports = run_experiment(cfg)
    document = write_report(reports, cfg.format, args.out)
    if args.out is None:
        sys.stdout.write(document)

    if bad := [r.seed for r in reports if not r.ok]:
        log.warning("Seeds %s broke validity or 1-agreement.", ", ".join(map(str, bad)))
        return 1
    return 0


def _gen_tree(args):
    kind, size, seed = parse_generator_spec(args.generator)
    text = format_tree(generate_tree(kind, size, seed))

    if args.out is None:
        sys.stdout.write(text)
        return 0

    try:
        Path(args.out).write_text(text, encoding="utf-8")
    except OSError as err:
        raise ReportError(f"can not write {args.out} ({err.strerror})") from None
    return 0


def _bounds(args):
    lower = lb_rounds(args.n, args.t, args.d)
    print(f"lb_rounds            {lower}")
    if args.d >= 4:
        print(f"closed-form shape    {lb_rounds_closed_form(args.n, args.t, args.d):.4f}")
    if args.n > 3 * args.t:
        print(f"plan_iterations      {plan_iterations(args.n, args.t, args.d, 1)}")

    print(f"{'R':>4} {'k_bound':>16} {'k_bound_simple':>16}")
    for r in range(1, (args.R or lower) + 1):
        p = BoundParams(args.n, args.t, r, args.d)
        print(f"{r:>4} {k_bound(p):>16.6g} {k_bound_simple(p):>16.6g}")
    return 0


COMMANDS = {"run": _run, "gen-tree": _gen_tree, "bounds": _bounds}


def main(argv=None, version="0"):
    args = build_parser(version).parse_args(argv)
    logging.basicConfig(
        level=(args.log_level or Config.LOG_LEVEL).upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        return COMMANDS[args.command](args)
    except CanopyError as err:
        print(f"canopy: {err.msg}", file=sys.stderr)
        return 2

