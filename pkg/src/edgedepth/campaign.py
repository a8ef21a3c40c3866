"""Verification campaigns: seeded instance streams, evaluation and report files.

A campaign is described by an :class:`ExperimentConfig`, usually loaded from
a JSON file. The same config and seed always produce the same instances and
the same CSV bytes (timings are left out of the CSV unless requested).
"""

from __future__ import annotations

import csv
import io
import json
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterator

from .constructions import HypothesisError
from .corpus import (all_labeled_graphs, all_labeled_trees, erdos_renyi,
                     random_certificate, random_chordal,
                     random_chordal_subgraph_split, random_clique,
                     random_monomial_ideal, random_tree)
from .graphs import Graph, delete_vertices, is_chordal
from .homology import FieldSpec
from .monomials import MonomialIdeal
from .verify import (CSV_COLUMNS, EXPLORATORY, GUARANTEED, DepthCertificate,
                     DepthOracle, VerificationReport, check_certificate,
                     check_colon_identity, check_edge_ideal_bound,
                     check_forest_power_coincidence, check_mixed_bound,
                     check_ordinary_power_bound, check_packing_deletion_lemmas,
                     check_symbolic_depth_bound)

log = logging.getLogger(__name__)

SUITES = ("cor22", "thm34", "thm42", "sym", "lem41", "prop33", "lem31", "lem32",
          "prop21", "forest", "forest-pow")
GENERATORS = ("erdos_renyi", "random_chordal", "random_tree", "exhaustive")


class ConfigError(ValueError):
    pass


@dataclass
class ExperimentConfig:
    suite: str
    generator: str = "erdos_renyi"
    n_min: int = 1
    n_max: int = 6
    s_values: list[int] = field(default_factory=lambda: [2])
    random_instances: int = 0
    edge_probability: float = 0.5
    seed: int = 0
    characteristics: list[int] = field(default_factory=lambda: [0])
    max_generators: int = 10
    max_exponent: int = 3
    cross_check: bool = False
    cache: bool = True
    timings: bool = False
    jobs: int = 1
    output_csv: str | None = None
    output_json: str | None = None
    reproducer_dir: str = "."

    def __post_init__(self):
        if self.suite not in SUITES:
            raise ConfigError(f"unknown suite {self.suite!r}; expected one of {SUITES}")
        if self.generator not in GENERATORS:
            raise ConfigError(f"unknown generator {self.generator!r}; expected one of {GENERATORS}")
        if not 1 <= self.n_min <= self.n_max <= 12:
            raise ConfigError(f"need 1 <= n_min <= n_max <= 12, got {self.n_min}..{self.n_max}")
        if not self.s_values or any(not 1 <= s <= 4 for s in self.s_values):
            raise ConfigError(f"s values must lie in [1, 4], got {self.s_values}")
        if not 0 <= self.edge_probability <= 1:
            raise ConfigError("edge_probability must lie in [0, 1]")
        if self.random_instances < 0 or self.jobs < 1:
            raise ConfigError("random_instances must be >= 0 and jobs >= 1")
        for c in self.characteristics:
            FieldSpec(c)

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        known = set(cls.__dataclass_fields__)
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def load(cls, path: str | Path) -> "ExperimentConfig":
        try:
            data = json.loads(Path(path).read_text())
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: line {exc.lineno}: {exc.msg}") from None
        return cls.from_dict(data)


@dataclass
class Instance:
    id: str
    suite: str
    graph: Graph
    s: int | None = None
    graph2: Graph | None = None
    edge: tuple[int, int] | None = None
    W: list[int] | None = None
    A: list[int] | None = None
    ideal: MonomialIdeal | None = None
    certificate: tuple | None = None


def _graph_stream(cfg: ExperimentConfig, rng: random.Random, keep=None) -> Iterator[Graph]:
    if cfg.generator == "exhaustive":
        for n in range(cfg.n_min, cfg.n_max + 1):
            source = all_labeled_trees(n) if cfg.suite == "forest" else all_labeled_graphs(n)
            for G in source:
                if keep is None or keep(G):
                    yield G
        return
    made = 0
    while made < cfg.random_instances:
        n = rng.randint(cfg.n_min, cfg.n_max)
        if cfg.generator == "random_chordal":
            G = random_chordal(n, rng)
        elif cfg.generator == "random_tree":
            G = random_tree(n, rng)
        else:
            G = erdos_renyi(n, cfg.edge_probability, rng)
        if keep is None or keep(G):
            made += 1
            yield G


def generate_instances(cfg: ExperimentConfig) -> list[Instance]:
    """The full, deterministic instance list of a campaign."""
    rng = random.Random(cfg.seed)
    out: list[Instance] = []

    def add(**kw):
        out.append(Instance(id=f"{cfg.suite}-{len(out):06d}", suite=cfg.suite, **kw))

    suite = cfg.suite
    if suite == "cor22":
        for G in _graph_stream(cfg, rng):
            add(graph=G, s=1)
    elif suite in ("thm34", "thm42", "sym", "forest-pow"):
        keep = None
        if suite == "thm34":
            keep = lambda G: is_chordal(G).chordal  # noqa: E731
        elif suite == "forest-pow":
            keep = Graph.is_forest
        s_values = [2] if suite == "thm42" else cfg.s_values
        for G in _graph_stream(cfg, rng, keep):
            for s in s_values:
                add(graph=G, s=s)
    elif suite == "forest":
        for G in _graph_stream(cfg, rng, Graph.is_forest):
            for s in cfg.s_values:
                add(graph=G, s=s)
    elif suite == "lem41":
        ks = [k for k in cfg.s_values if k >= 2] or [2]
        for G in _graph_stream(cfg, rng, lambda G: G.num_edges > 0):
            add(graph=G, edge=rng.choice(G.edges), s=rng.choice(ks))
    elif suite == "prop33":
        for G in _graph_stream(cfg, rng, lambda G: is_chordal(G).chordal):
            H, H2 = random_chordal_subgraph_split(G, rng)
            for s in cfg.s_values:
                add(graph=H, graph2=H2, s=s)
    elif suite == "lem31":
        for G in _graph_stream(cfg, rng):
            W = sorted(v for v in range(G.n) if rng.random() < 0.3)
            pool = sorted(set().union(*(G.closed_neighborhood(x) for x in W)) if W else set())
            A = [v for v in pool if rng.random() < 0.5]
            add(graph=G, W=W, A=A)
    elif suite == "lem32":
        for G in _graph_stream(cfg, rng):
            W = random_clique(G, rng)
            x1 = W[0]
            required = set(G.neighbors(x1)) - set(W[1:])
            reach = set().union(*(G.neighbors(x) for x in W))
            optional = sorted(reach - required - {x1})
            A = sorted(required | {v for v in optional if rng.random() < 0.5})
            add(graph=G, W=W, A=A)
    elif suite == "prop21":
        made = 0
        while made < cfg.random_instances:
            n = rng.randint(cfg.n_min, cfg.n_max)
            I = random_monomial_ideal(n, cfg.max_generators, cfg.max_exponent, rng)
            rows = random_certificate(I, rng)
            made += 1
            add(graph=Graph(n), ideal=I, certificate=tuple(rows))
    return out


def evaluate(inst: Instance, oracle: DepthOracle) -> VerificationReport:
    F = oracle.field
    suite = inst.suite
    if suite == "cor22":
        rep = check_edge_ideal_bound(inst.graph, F, oracle, id=inst.id)
    elif suite in ("thm34", "thm42", "sym"):
        rep = check_symbolic_depth_bound(inst.graph, inst.s, require_chordal=suite == "thm34",
                                         F=F, oracle=oracle, id=inst.id)
    elif suite == "forest-pow":
        rep = check_ordinary_power_bound(inst.graph, inst.s, F, oracle, id=inst.id)
    elif suite == "prop33":
        rep = check_mixed_bound(inst.graph, inst.graph2, inst.s, F, oracle, id=inst.id)
    elif suite in ("lem31", "lem32"):
        mode = "lemma31" if suite == "lem31" else "lemma32"
        rep = check_packing_deletion_lemmas(inst.graph, inst.W, inst.A, mode, id=inst.id)
        rep.characteristic = F.characteristic
    elif suite == "lem41":
        t0 = time.perf_counter()
        ok = check_colon_identity(inst.graph, inst.edge, inst.s)
        rep = VerificationReport(inst.id, "lem41", inst.graph, int(ok), 1, s=inst.s,
                                 characteristic=F.characteristic,
                                 ms=(time.perf_counter() - t0) * 1000.0,
                                 extra={"edge": list(inst.edge)})
    elif suite == "forest":
        t0 = time.perf_counter()
        ok = check_forest_power_coincidence(inst.graph, inst.s)
        rep = VerificationReport(inst.id, "forest", inst.graph, int(ok), 1, s=inst.s,
                                 characteristic=F.characteristic, chordal=True,
                                 ms=(time.perf_counter() - t0) * 1000.0)
    elif suite == "prop21":
        t0 = time.perf_counter()
        cert = DepthCertificate(inst.certificate)
        accepted, q = check_certificate(inst.ideal, cert)
        if not accepted:
            raise HypothesisError(f"{inst.id}: generated certificate was rejected")
        d = oracle.of_ideal(inst.ideal)
        rep = VerificationReport(inst.id, "prop21", inst.graph, d, q,
                                 characteristic=F.characteristic,
                                 ms=(time.perf_counter() - t0) * 1000.0,
                                 extra={"ideal": str(inst.ideal),
                                        "certificate": [[c, list(nb)] for c, nb in cert.rows]})
    else:
        raise ConfigError(f"unknown suite {suite!r}")
    return rep


@dataclass
class CampaignResult:
    config: ExperimentConfig
    reports: list[VerificationReport]
    characteristic_mismatches: list[dict]
    oracle_mismatches: list[dict]
    oracle_checked: int
    elapsed: float
    reproducer: str | None = None

    @property
    def failures(self) -> list[VerificationReport]:
        return [r for r in self.reports if r.failed]

    @property
    def exploratory_violations(self) -> list[VerificationReport]:
        return [r for r in self.reports if r.mode == EXPLORATORY and r.verdict != "holds"]

    @property
    def tight(self) -> list[VerificationReport]:
        return [r for r in self.reports if r.slack == 0]

    @property
    def exit_code(self) -> int:
        return 2 if self.failures else 0

    def summary(self) -> dict:
        return {
            "suite": self.config.suite,
            "instances": len(self.reports),
            "guaranteed": sum(r.mode == GUARANTEED for r in self.reports),
            "violations": len(self.failures),
            "exploratory_violations": len(self.exploratory_violations),
            "tight": len(self.tight),
            "min_slack": min((r.slack for r in self.reports), default=None),
            "characteristic_mismatches": len(self.characteristic_mismatches),
            "oracle_mismatches": len(self.oracle_mismatches),
            "oracle_checked": self.oracle_checked,
        }

    def csv_text(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in self.reports:
            writer.writerow(r.csv_row(self.config.timings))
        return buf.getvalue()

    def json_text(self) -> str:
        rows = [r.to_dict() for r in self.reports]
        if not self.config.timings:
            for row in rows:
                row.pop("ms")
        return json.dumps(rows, indent=1, sort_keys=True) + "\n"


# worker-side state for process pools
_WORKER: dict = {}


def _init_worker(char: int, cache: bool, cross_check: bool):
    _WORKER["oracle"] = DepthOracle(FieldSpec(char), cache=cache, cross_check=cross_check)


def _evaluate_in_worker(inst: Instance) -> VerificationReport:
    return evaluate(inst, _WORKER["oracle"])


def _shrink(inst: Instance, oracle: DepthOracle) -> Instance:
    """Greedily delete vertices while the violation persists."""
    if inst.suite not in ("cor22", "thm34", "thm42", "forest-pow"):
        return inst
    current = inst
    changed = True
    while changed and current.graph.n > 1:
        changed = False
        for v in range(current.graph.n):
            smaller, _ = delete_vertices(current.graph, [v])
            trial = Instance(current.id, current.suite, smaller, s=current.s)
            try:
                rep = evaluate(trial, oracle)
            except HypothesisError:
                continue
            if rep.failed:
                current, changed = trial, True
                break
    return current


def write_reproducer(inst: Instance, rep: VerificationReport, directory: str | Path) -> Path:
    path = Path(directory) / f"reproducer-{inst.id}.json"
    payload = {"suite": inst.suite, "graph": inst.graph.to_dict(), "s": inst.s,
               "char": rep.characteristic, "report": rep.to_dict()}
    if inst.graph2 is not None:
        payload["graph2"] = inst.graph2.to_dict()
    if inst.ideal is not None:
        payload["ideal"] = str(inst.ideal)
        payload["n"] = inst.ideal.n
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=1) + "\n")
    return path


def run_campaign(cfg: ExperimentConfig, oracles: dict[int, DepthOracle] | None = None,
                 instances: list[Instance] | None = None) -> CampaignResult:
    """Evaluate every instance once per requested characteristic.

    Stops at the first guaranteed violation and writes a reproducer for it.
    ``oracles`` may be passed in to share depth caches between campaigns.
    """
    t0 = time.perf_counter()
    if instances is None:
        instances = generate_instances(cfg)
    oracles = oracles if oracles is not None else {}
    reports: list[VerificationReport] = []
    by_char: dict[int, dict[str, int]] = {}
    reproducer = None
    for char in cfg.characteristics:
        oracle = oracles.setdefault(
            char, DepthOracle(FieldSpec(char), cache=cfg.cache, cross_check=cfg.cross_check))
        if cfg.jobs > 1:
            with ProcessPoolExecutor(cfg.jobs, initializer=_init_worker,
                                     initargs=(char, cfg.cache, cfg.cross_check)) as pool:
                batch = list(pool.map(_evaluate_in_worker, instances, chunksize=16))
        else:
            batch = []
            for inst in instances:
                rep = evaluate(inst, oracle)
                batch.append(rep)
                if rep.failed:
                    break
        by_char[char] = {r.id: r.value for r in batch}
        reports.extend(batch)
        bad = next((r for r in batch if r.failed), None)
        if bad is not None:
            inst = next(i for i in instances if i.id == bad.id)
            small = _shrink(inst, oracle)
            rep = evaluate(small, oracle)
            reproducer = str(write_reproducer(small, rep if rep.failed else bad,
                                              cfg.reproducer_dir))
            log.error("guaranteed violation at %s; reproducer written to %s", bad.id, reproducer)
            break
    reports.sort(key=lambda r: (r.id, r.characteristic))

    char_mismatches = []
    chars = list(by_char)
    for other in chars[1:]:
        for rid, value in by_char[chars[0]].items():
            if rid in by_char[other] and by_char[other][rid] != value:
                char_mismatches.append({"id": rid, chars[0]: value, other: by_char[other][rid]})
    oracle_mismatches = [m for o in oracles.values() for m in o.mismatches]
    checked = sum(o.checked for o in oracles.values())
    return CampaignResult(cfg, reports, char_mismatches, oracle_mismatches, checked,
                          time.perf_counter() - t0, reproducer)


def write_outputs(result: CampaignResult):
    cfg = result.config
    if cfg.output_csv:
        Path(cfg.output_csv).parent.mkdir(parents=True, exist_ok=True)
        Path(cfg.output_csv).write_text(result.csv_text())
    if cfg.output_json:
        Path(cfg.output_json).parent.mkdir(parents=True, exist_ok=True)
        Path(cfg.output_json).write_text(result.json_text())


def config_template(suite: str = "thm34") -> dict:
    return asdict(ExperimentConfig(suite=suite))
