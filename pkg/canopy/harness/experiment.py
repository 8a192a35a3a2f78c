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

import asyncio
import json
import logging
from dataclasses import asdict, dataclass, field, fields, replace
from pathlib import Path
from typing import Optional

import aiofiles
import aiofiles.os
import psutil

from canopy.bounds import lb_rounds
from canopy.config import Config
from canopy.errors import ConfigError
from canopy.harness.adversaries import registry
from canopy.harness.generators import generate_tree, parse_generator_spec
from canopy.harness.inputs import ASSIGNMENTS, assign_inputs
from canopy.harness.strategy import AttackSetting
from canopy.net import ProtocolParty, dump_transcript, run_simulation
from canopy.protocols import MODES, TreeAAConfig, schedule_for
from canopy.protocols.gradecast import ROUNDS
from canopy.tree import convex_hull, diameter, max_pairwise_distance, parse_tree
from canopy.utils import chron

log = logging.getLogger(__name__)

FORMATS = ("csv", "json")


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


@dataclass(frozen=True)
class ExperimentConfig:
    n: int
    t: int
    tree_file: Optional[str] = None
    generator: Optional[str] = None
    inputs: str = "random"
    labels: tuple = ()
    adversary: str = "silent"
    seeds: tuple = (0,)
    mode: str = "final"
    format: str = "csv"
    emit_transcripts: bool = False
    transcript_dir: str = Config.TRANSCRIPT_DIR

    def __post_init__(self):
        for key in ("n", "t"):
            if not _is_int(value := getattr(self, key)):
                raise ConfigError(f"{key} must be an integer, not {value!r}")
        if not isinstance(self.seeds, (list, tuple)) or not all(_is_int(s) for s in self.seeds):
            raise ConfigError(f"seeds must be a list of integers, not {self.seeds!r}")
        if not isinstance(self.labels, (list, tuple)):
            raise ConfigError(f"labels must be a list of vertex labels, not {self.labels!r}")

        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "seeds", tuple(self.seeds))

        if (self.tree_file is None) == (self.generator is None):
            raise ConfigError("give exactly one of a tree file or a generator spec")
        if self.t < 0 or self.n <= 3 * self.t:
            raise ConfigError(f"n={self.n}, t={self.t} does not satisfy t < n/3")
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {', '.join(MODES)}, not {self.mode!r}")
        if self.inputs not in ASSIGNMENTS:
            raise ConfigError(f"inputs must be one of {', '.join(ASSIGNMENTS)}, not {self.inputs!r}")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be csv or json, not {self.format!r}")
        if not self.seeds:
            raise ConfigError("at least one seed is needed")

        # Fails with close matches when the name is wrong.
        registry().describe(self.adversary)

    @classmethod
    def from_mapping(cls, data):
        known = {f.name for f in fields(cls)}
        if unknown := sorted(set(data) - known):
            raise ConfigError(f"unknown keys {', '.join(unknown)}")
        try:
            return cls(**data)
        except (TypeError, ValueError) as err:
            raise ConfigError(str(err)) from None

    @classmethod
    def from_file(cls, path, **overrides):
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except OSError as err:
            raise ConfigError(f"can not read {path} ({err.strerror})") from None
        except json.JSONDecodeError as err:
            raise ConfigError(f"{path} is not valid JSON ({err.msg} at line {err.lineno})") from None

        if not isinstance(data, dict):
            raise ConfigError(f"{path} must hold a JSON object")
        data.update({k: v for k, v in overrides.items() if v is not None})
        return cls.from_mapping(data)

    def load_tree(self):
        if self.generator is not None:
            kind, size, seed = parse_generator_spec(self.generator)
            return generate_tree(kind, size, seed), kind

        try:
            text = Path(self.tree_file).read_text(encoding="utf-8")
        except OSError as err:
            raise ConfigError(f"can not read tree file {self.tree_file} ({err.strerror})") from None
        return parse_tree(text), "file"


@dataclass(frozen=True)
class RunReport:
    seed: int
    mode: str
    n: int
    t: int
    tree_kind: str
    vertices: int
    diameter: int
    rounds: int
    lb_rounds: int
    max_dist: int
    valid: bool
    adversary: str = "silent"
    expected_rounds: int = 0
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    transcript: Optional[str] = None

    @property
    def ok(self):
        return self.valid and self.max_dist <= 1

    def to_dict(self):
        data = asdict(self)
        data["inputs"] = {str(p): v for p, v in self.inputs.items()}
        data["outputs"] = {str(p): v for p, v in self.outputs.items()}
        return data

    @classmethod
    def from_dict(cls, data):
        data = dict(data)
        data["inputs"] = {int(p): v for p, v in data.get("inputs", {}).items()}
        data["outputs"] = {int(p): v for p, v in data.get("outputs", {}).items()}
        return cls(**data)

    def __repr__(self):
        return (
            f"<RunReport seed={self.seed!r} mode={self.mode!r} rounds={self.rounds!r}"
            f" max_dist={self.max_dist!r} valid={self.valid!r}>"
        )


def run_one(cfg, tree, tree_kind, seed):
    """One seed, start to finish. Verdicts come from the tree oracles, never from the parties."""
    setup = TreeAAConfig(tree, cfg.n, cfg.t, cfg.mode)
    schedule = schedule_for(cfg.mode, cfg.n, cfg.t, tree)
    adversary = registry().create(cfg.adversary, AttackSetting(cfg.n, cfg.t, tree, schedule))
    inputs = assign_inputs(tree, cfg.n, cfg.inputs, seed, cfg.labels)
    protocol = setup.protocol()

    outputs, transcript = run_simulation(
        cfg.n,
        cfg.t,
        lambda p: ProtocolParty(protocol, tree=tree),
        inputs,
        adversary,
        seed,
        Config.ROUND_CAP_FACTOR * max(schedule.total_rounds, ROUNDS),
    )

    honest = {p: inputs[p] for p in outputs}
    hull = convex_hull(tree, honest.values())
    d = diameter(tree)

    report = RunReport(
        seed=seed,
        mode=cfg.mode,
        n=cfg.n,
        t=cfg.t,
        tree_kind=tree_kind,
        vertices=tree.order,
        diameter=d,
        rounds=transcript.rounds,
        lb_rounds=lb_rounds(cfg.n, cfg.t, d) if cfg.t >= 1 and d > 1 else 0,
        max_dist=max_pairwise_distance(tree, outputs.values()),
        valid=all(o in hull for o in outputs.values()),
        adversary=cfg.adversary,
        expected_rounds=setup.expected_rounds(),
        inputs=honest,
        outputs=dict(outputs),
    )
    return report, transcript


async def write_transcript(directory, report, transcript):
    await aiofiles.os.makedirs(directory, exist_ok=True)
    path = Path(directory) / (
        f"{report.mode}-{report.tree_kind}-n{report.n}-t{report.t}-{report.adversary}-seed{report.seed}.jsonl"
    )
    async with aiofiles.open(path, "w", encoding="utf-8") as f:
        await f.write(dump_transcript(transcript))
    return str(path)


async def run_experiment_async(cfg):
    tree, tree_kind = cfg.load_tree()
    limit = asyncio.Semaphore(Config.MAX_WORKERS)
    start = chron.stopwatch()

    async def one(seed):
        async with limit:
            report, transcript = await asyncio.to_thread(run_one, cfg, tree, tree_kind, seed)

        if cfg.emit_transcripts:
            report = replace(report, transcript=await write_transcript(cfg.transcript_dir, report, transcript))

        log.info(
            "Seed %d: %d rounds, max distance %d, %s.",
            seed,
            report.rounds,
            report.max_dist,
            "valid" if report.valid else "INVALID",
        )
        return report

    # gather keeps seed order regardless of finishing order.
    reports = list(await asyncio.gather(*(one(seed) for seed in cfg.seeds)))

    rss = psutil.Process().memory_info().rss / 1024**2
    log.info(
        "Ran %d seed(s) of %s/%s on %s in %s (%.1f MiB resident).",
        len(reports),
        cfg.mode,
        cfg.adversary,
        tree_kind,
        chron.since(start),
        rss,
    )
    return reports


def run_experiment(cfg):
    return asyncio.run(run_experiment_async(cfg))

