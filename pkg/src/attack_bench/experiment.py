"""Experiment orchestration: networks x strategies x replicates -> CSV files."""

from __future__ import annotations

import csv
import io
import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

import numpy as np

from ._validation import check_measure, check_seed, check_strategy
from .attacks import PerformanceCurve, make_plan, run_attack
from .generators import GenSpec, gnm
from .graph import Graph
from .index import DEFAULT_THRESHOLDS, check_thresholds, i_index
from .ingestion import load_graph

log = logging.getLogger(__name__)


class ConfigError(ValueError):
    """Invalid experiment configuration (usage error, exit status 2)."""


@dataclass(frozen=True)
class NetworkFile:
    path: Path
    fmt: str = "edgelist"
    name: Optional[str] = None

    @property
    def label(self) -> str:
        return self.name or self.path.stem


NetworkSource = Union[NetworkFile, GenSpec]


@dataclass
class ExperimentConfig:
    networks: list = field(default_factory=list)
    strategies: tuple = ("rne", "ide", "ibe")
    control: bool = False
    varpi: float = 1.0
    measure: str = "node_fraction"
    thresholds: tuple = DEFAULT_THRESHOLDS
    replicates: int = 100
    base_seed: int = 0
    out_dir: Path = Path("results")
    stride: int = 1

    def validate(self) -> "ExperimentConfig":
        if not self.networks:
            raise ConfigError("no networks given")
        if not self.strategies:
            raise ConfigError("no strategies given")
        try:
            self.strategies = tuple(dict.fromkeys(check_strategy(s) for s in self.strategies))
            self.measure = check_measure(self.measure)
            self.thresholds = check_thresholds(self.thresholds)
            self.base_seed = check_seed(self.base_seed)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        if int(self.replicates) < 1:
            raise ConfigError("replicates must be at least 1")
        if int(self.stride) < 1:
            raise ConfigError("stride must be at least 1")
        self.replicates = int(self.replicates)
        self.out_dir = Path(self.out_dir)
        return self


def generate_control(graph: Graph, seed: int) -> Graph:
    """Uniform random graph with the same node and edge counts as ``graph``."""
    return gnm(graph.node_count, graph.edge_count, seed)


@dataclass
class RunResult:
    network: str
    strategy: str
    curve: PerformanceCurve
    index: tuple
    replicates: int
    seed: int


def _slug(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9._-]+", "_", name.replace("'", "_prime")).strip("_") or "network"


def _ensembles(config: ExperimentConfig):
    """Yield ``(label, graph_for_replicate, is_random)`` for every network and control."""
    seed0 = config.base_seed
    for source in config.networks:
        if isinstance(source, GenSpec):
            label = source.name

            def draw(i, source=source):
                return source.build(seed0 + i)

            yield label, draw, True
            n, m = source.n, source.m
        else:
            graph, _ = load_graph(source.path, source.fmt)
            label = source.label

            def draw(i, graph=graph):
                return graph

            yield label, draw, False
            n, m = graph.node_count, graph.edge_count
        if config.control:
            def draw_control(i, n=n, m=m):
                return gnm(n, m, seed0 + i)

            yield label + "'", draw_control, True


def _run_one(label, draw, is_random, strategy, config) -> RunResult:
    reps = config.replicates if (is_random or strategy == "rne") else 1
    curves = []
    values = []
    for i in range(reps):
        seed = config.base_seed + i
        graph = draw(i)
        plan = make_plan(graph, strategy, varpi=config.varpi, seed=seed)
        curve = run_attack(graph, plan, config.measure)
        curves.append(curve)
        values.append([i_index(curve, q) for q in config.thresholds])
    curve = curves[0] if reps == 1 else PerformanceCurve.mean(curves)
    index = tuple(float(v) for v in np.mean(values, axis=0))
    return RunResult(label, strategy, curve, index, reps, config.base_seed)


def _fmt(x: float) -> str:
    return repr(float(x))


def curve_csv(curve: PerformanceCurve, stride: int = 1) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["r", "s"])
    r, s = curve.r, curve.s
    picks = range(len(s)) if stride == 1 else sorted(set(range(0, len(s), stride)) | {len(s) - 1})
    for k in picks:
        writer.writerow([_fmt(r[k]), _fmt(s[k])])
    return buf.getvalue()


def read_curve_csv(path: Union[str, Path], measure: str = "node_fraction") -> PerformanceCurve:
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.DictReader(fh))
    s = np.array([float(row["s"]) for row in rows])
    return PerformanceCurve(s, measure, len(s))


def index_header(thresholds) -> list[str]:
    return ["network", "strategy", "measure", "replicates", "seed"] + [f"I_{q:g}" for q in thresholds]


def run_experiment(config: ExperimentConfig) -> list[RunResult]:
    """Run every (network, strategy) cell and write curve and index CSVs.

    Output is a pure function of ``config``: seeds are ``base_seed + i`` for
    replicate ``i`` and rows are written in config order.
    """
    config.validate()
    out = config.out_dir
    out.mkdir(parents=True, exist_ok=True)
    results = []
    for label, draw, is_random in _ensembles(config):
        for strategy in config.strategies:
            log.info("running %s / %s", label, strategy)
            result = _run_one(label, draw, is_random, strategy, config)
            stem = f"{_slug(label)}__{strategy}"
            (out / f"{stem}.csv").write_text(curve_csv(result.curve), encoding="utf-8")
            if config.stride > 1:
                (out / f"{stem}.plot.csv").write_text(curve_csv(result.curve, config.stride), encoding="utf-8")
            results.append(result)

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(index_header(config.thresholds))
    for res in results:
        writer.writerow([res.network, res.strategy, config.measure.split("_")[0], res.replicates, res.seed]
                        + [_fmt(v) for v in res.index])
    (out / "index.csv").write_text(buf.getvalue(), encoding="utf-8")
    return results


_BOOL = {"1": True, "true": True, "yes": True, "on": True, "0": False, "false": False, "no": False, "off": False}


def parse_gen(text: str) -> GenSpec:
    """``gnm:N:M`` or ``ba:N:M``."""
    parts = text.strip().split(":")
    kinds = {"gnm": "gnm", "ba": "barabasi_albert"}
    if len(parts) != 3 or parts[0] not in kinds:
        raise ConfigError(f"bad generator spec {text!r}; expected gnm:N:M or ba:N:M")
    try:
        n, m = int(parts[1]), int(parts[2])
    except ValueError:
        raise ConfigError(f"bad generator spec {text!r}; N and M must be integers") from None
    try:
        return GenSpec(kinds[parts[0]], n, m)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def network_file(path: str, fmt: Optional[str] = None) -> NetworkFile:
    path = Path(path)
    if fmt is None:
        fmt = "gml" if path.suffix.lower() == ".gml" else "edgelist"
    if fmt not in ("edgelist", "gml"):
        raise ConfigError(f"unknown format {fmt!r}; expected edgelist or gml")
    return NetworkFile(path, fmt)


def _csv_list(value: str) -> list[str]:
    return [v.strip() for v in value.split(",") if v.strip()]


def parse_config_text(text: str) -> dict:
    """Flat ``key = value`` lines; ``network`` and ``gen`` may repeat."""
    values: dict = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            key, _, value = line.partition(" ")
        key, value = key.strip().replace("-", "_"), value.strip()
        if not key:
            raise ConfigError(f"config line {lineno}: missing key")
        if key in ("network", "gen"):
            values.setdefault(key, []).append(value)
        else:
            values[key] = value
    return values


_KNOWN_KEYS = {"network", "gen", "format", "strategies", "measure", "varpi", "thresholds",
               "replicates", "seed", "control", "out", "stride"}


def build_config(values: dict) -> ExperimentConfig:
    """Turn raw string settings (from file and flags) into a validated config."""
    unknown = set(values) - _KNOWN_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
    fmt = values.get("format")
    networks: list = [network_file(p, fmt) for p in values.get("network", [])]
    networks += [parse_gen(g) for g in values.get("gen", [])]
    cfg = ExperimentConfig(networks=networks)
    try:
        if "strategies" in values:
            cfg.strategies = tuple(_csv_list(values["strategies"]))
        if "measure" in values:
            cfg.measure = values["measure"]
        if "varpi" in values:
            cfg.varpi = float(values["varpi"])
        if "thresholds" in values:
            cfg.thresholds = tuple(float(q) for q in _csv_list(values["thresholds"]))
        if "replicates" in values:
            cfg.replicates = int(values["replicates"])
        if "seed" in values:
            cfg.base_seed = int(values["seed"])
        if "stride" in values:
            cfg.stride = int(values["stride"])
        if "out" in values:
            cfg.out_dir = Path(values["out"])
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    control = values.get("control", False)
    if not isinstance(control, bool):
        if str(control).lower() not in _BOOL:
            raise ConfigError(f"control must be a boolean, got {control!r}")
        control = _BOOL[str(control).lower()]
    cfg.control = control
    return cfg.validate()
