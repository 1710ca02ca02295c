"""End-to-end runs: compile, optimize angles, measure, score against oracles.

A single run compiles the graph to a QUBO, materializes the energy table,
optimizes the layer angles from a linear-ramp start, evolves the final state,
marginalizes slack bits out, and scores the vertex distribution:

  correct probability  = total mass on bit strings decoding to a valid TDS
  optimal probability  = mass on TDS of minimum cardinality
  z_star               = most probable vertex bit string (lexicographically
                         smallest on ties)

The sweep runs a Cartesian grid of (layers, penalty multiplier, iteration
budget) cells with per-cell replicate seeds and writes CSV/JSON results.
"""

from __future__ import annotations

import concurrent.futures
import csv
import io
import json
import pathlib
import time
from dataclasses import dataclass, field, replace
from typing import Mapping

import numpy as np

from .graphs import Graph, is_total_dominating_set, load_graph, minimum_tds_bruteforce
from .ising import build_energy_table
from .optimize import (
    OptimizerConfig,
    OptimizationTrace,
    angle_bounds,
    default_ramp_scales,
    initial_angles,
    minimize,
)
from .qaoa import AngleSchedule, evolve, expectation, marginalize_vertices, sample
from .qubo import compile_tdp_qubo

DEFAULT_SHOTS = 100_000
DEFAULT_SWEEP_LAYERS = (2, 5, 10, 20)
DEFAULT_SWEEP_MULTIPLIERS = (0.8, 0.9, 1.0, 1.1, 1.2, 1.3, 1.4, 1.5)
DEFAULT_SWEEP_MAXITERS = (50, 100, 200, 500)

ROW_FIELDS = (
    "q", "P", "maxiter", "seed", "z_star", "is_tds", "is_min_tds",
    "correct_prob", "optimal_prob", "final_cost", "evals", "runtime_ms", "error",
)
SUMMARY_FIELDS = (
    "q", "P", "maxiter", "n_seeds", "median_correct_prob", "median_optimal_prob",
    "tds_rate", "min_tds_rate", "cell_is_tds", "cell_is_min_tds",
)


@dataclass(frozen=True)
class RunConfig:
    """Parameters of one QAOA cell."""

    graph_source: str = "builtin:paper6"
    layers_q: int = 2
    penalty: float | None = None
    penalty_multiplier: float | None = None
    max_iterations: int = 200
    shots: int = DEFAULT_SHOTS
    seed: int = 0
    exact_metrics: bool = True
    gamma_scale: float | None = None
    beta_scale: float | None = None
    function_tolerance: float = 1e-8
    objective_shots: int | None = None

    def __post_init__(self):
        if self.layers_q < 1:
            raise ValueError(f"layers_q must be positive, got {self.layers_q}")
        if self.penalty is not None and self.penalty_multiplier is not None:
            raise ValueError("give either penalty or penalty_multiplier, not both")

    def resolve_penalty(self, g: Graph) -> float:
        if self.penalty is not None:
            return float(self.penalty)
        multiplier = 1.5 if self.penalty_multiplier is None else self.penalty_multiplier
        return float(multiplier) * g.n_vertices

    def to_dict(self) -> dict:
        return {
            "graph_source": self.graph_source,
            "layers_q": self.layers_q,
            "penalty": self.penalty,
            "penalty_multiplier": self.penalty_multiplier,
            "max_iterations": self.max_iterations,
            "shots": self.shots,
            "seed": self.seed,
            "exact_metrics": self.exact_metrics,
            "gamma_scale": self.gamma_scale,
            "beta_scale": self.beta_scale,
            "function_tolerance": self.function_tolerance,
            "objective_shots": self.objective_shots,
        }


@dataclass(frozen=True)
class Metrics:
    correct_probability: float
    optimal_probability: float
    z_star: str
    z_star_is_tds: bool
    z_star_is_minimal_tds: bool


@dataclass
class RunResult:
    """Everything produced by one run; see to_dict for the JSON view."""

    config: RunConfig
    penalty: float
    optimized_schedule: AngleSchedule
    trace: OptimizationTrace
    z_star: str
    z_star_is_tds: bool
    z_star_is_minimal_tds: bool
    correct_probability: float
    optimal_probability: float
    top_k: list[tuple[str, float]]
    exact_marginal: dict[str, float] = field(repr=False)
    sampled_marginal: dict[str, float] = field(repr=False)
    sampled_counts: dict[str, int] = field(repr=False)
    runtime_ms: float = 0.0

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "penalty": self.penalty,
            "optimized_schedule": {
                "gammas": list(self.optimized_schedule.gammas),
                "betas": list(self.optimized_schedule.betas),
            },
            "cost_trace": {
                "final_cost": self.trace.best_value,
                "evaluations": self.trace.n_evaluations,
                "termination_reason": self.trace.termination_reason,
            },
            "z_star": self.z_star,
            "z_star_is_tds": self.z_star_is_tds,
            "z_star_is_minimal_tds": self.z_star_is_minimal_tds,
            "correct_probability": self.correct_probability,
            "optimal_probability": self.optimal_probability,
            "top_k": [[bits, p] for bits, p in self.top_k],
            "runtime_ms": self.runtime_ms,
        }

    def distribution_csv(self) -> str:
        """CSV `bits,probability,count`, descending by probability."""
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(["bits", "probability", "count"])
        order = sorted(self.exact_marginal, key=lambda b: (-self.exact_marginal[b], b))
        for bits in order:
            writer.writerow([bits, repr(self.exact_marginal[bits]), self.sampled_counts.get(bits, 0)])
        return out.getvalue()


def bitstring_to_vertex_set(bits: str) -> frozenset[int]:
    """Leftmost character is vertex 0."""
    return frozenset(i for i, ch in enumerate(bits) if ch == "1")


def compute_metrics(dist: Mapping[str, float], g: Graph) -> Metrics:
    """Score a normalized vertex-bitstring distribution against the oracles."""
    total = sum(dist.values())
    if abs(total - 1.0) > 1e-6:
        raise ValueError(f"distribution is not normalized: total mass {total}")
    min_size, _ = minimum_tds_bruteforce(g)

    correct = 0.0
    optimal = 0.0
    for bits, prob in dist.items():
        vertex_set = bitstring_to_vertex_set(bits)
        if is_total_dominating_set(g, vertex_set):
            correct += prob
            if len(vertex_set) == min_size:
                optimal += prob

    z_star = min(dist, key=lambda b: (-dist[b], b))
    z_set = bitstring_to_vertex_set(z_star)
    z_is_tds = is_total_dominating_set(g, z_set)
    return Metrics(
        correct_probability=correct,
        optimal_probability=optimal,
        z_star=z_star,
        z_star_is_tds=z_is_tds,
        z_star_is_minimal_tds=z_is_tds and len(z_set) == min_size,
    )


def _child_seed(seed: int, tag: int) -> int:
    return int(np.random.SeedSequence([seed % (1 << 63), tag]).generate_state(1)[0])


def derive_cell_seed(base_seed: int, q: int, penalty: float, maxiter: int, replicate: int) -> int:
    """Deterministic per-cell seed for sweep replicates."""
    entropy = [base_seed % (1 << 63), q, int(round(penalty * 1e6)), maxiter, replicate]
    return int(np.random.SeedSequence(entropy).generate_state(1)[0])


def run_single(config: RunConfig, graph: Graph | None = None) -> RunResult:
    """Execute one QAOA cell end to end."""
    start = time.perf_counter()
    g = graph if graph is not None else load_graph(config.graph_source)
    penalty = config.resolve_penalty(g)
    model = compile_tdp_qubo(g, penalty)
    table = build_energy_table(model)

    q = config.layers_q
    auto_gamma, auto_beta = default_ramp_scales(q, penalty)
    gamma_scale = auto_gamma if config.gamma_scale is None else config.gamma_scale
    beta_scale = auto_beta if config.beta_scale is None else config.beta_scale
    x0 = initial_angles(q, gamma_scale, beta_scale).as_vector()
    opt_config = OptimizerConfig(
        max_iterations=config.max_iterations,
        bounds=angle_bounds(q),
        function_tolerance=config.function_tolerance,
        seed=_child_seed(config.seed, 1),
    )

    if config.objective_shots is None:
        def objective(x: np.ndarray) -> float:
            state = evolve(table, AngleSchedule.from_vector(x))
            return expectation(state, table)
    else:
        estimator_rng = np.random.default_rng(_child_seed(config.seed, 3))

        def objective(x: np.ndarray) -> float:
            state = evolve(table, AngleSchedule.from_vector(x))
            probs = state.probabilities()
            counts = estimator_rng.multinomial(config.objective_shots, probs / probs.sum())
            return float(np.dot(counts, table.energies)) / config.objective_shots

    trace = minimize(objective, x0, opt_config)
    best_schedule = AngleSchedule.from_vector(trace.best_point)
    final_state = evolve(table, best_schedule)

    n_vertex = model.registry.n_vertex_vars
    exact_marginal = marginalize_vertices(final_state.probabilities(), n_vertex)
    counts = sample(final_state, config.shots, _child_seed(config.seed, 2))
    sampled_marginal = marginalize_vertices(counts, n_vertex, n_qubits=model.n_vars)
    sampled_counts = _marginal_counts(counts, n_vertex, model.n_vars)

    active = exact_marginal if config.exact_metrics else sampled_marginal
    metrics = compute_metrics(active, g)
    top_k = sorted(active.items(), key=lambda kv: (-kv[1], kv[0]))[:10]

    return RunResult(
        config=config,
        penalty=penalty,
        optimized_schedule=best_schedule,
        trace=trace,
        z_star=metrics.z_star,
        z_star_is_tds=metrics.z_star_is_tds,
        z_star_is_minimal_tds=metrics.z_star_is_minimal_tds,
        correct_probability=metrics.correct_probability,
        optimal_probability=metrics.optimal_probability,
        top_k=top_k,
        exact_marginal=exact_marginal,
        sampled_marginal=sampled_marginal,
        sampled_counts=sampled_counts,
        runtime_ms=(time.perf_counter() - start) * 1e3,
    )


def _marginal_counts(counts: dict[int, int], n_vertex: int, n_qubits: int) -> dict[str, int]:
    shift = n_qubits - n_vertex
    out: dict[str, int] = {}
    for k, c in counts.items():
        bits = format(k >> shift, f"0{n_vertex}b")
        out[bits] = out.get(bits, 0) + c
    return out


@dataclass
class SweepResult:
    rows: list[dict]
    summaries: list[dict]
    n_cells: int
    n_cells_tds: int
    n_cells_min_tds: int

    def rows_csv(self) -> str:
        return _dicts_to_csv(self.rows, ROW_FIELDS)

    def summary_csv(self) -> str:
        return _dicts_to_csv(self.summaries, SUMMARY_FIELDS)

    def to_dict(self) -> dict:
        return {
            "rows": self.rows,
            "summaries": self.summaries,
            "n_cells": self.n_cells,
            "n_cells_tds": self.n_cells_tds,
            "n_cells_min_tds": self.n_cells_min_tds,
        }


def _dicts_to_csv(rows: list[dict], fields: tuple[str, ...]) -> str:
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=fields)
    writer.writeheader()
    for row in rows:
        writer.writerow({k: row.get(k, "") for k in fields})
    return out.getvalue()


def _run_sweep_cell(args: tuple[RunConfig, int, float, int, int]) -> dict:
    base, q, multiplier, maxiter, replicate = args
    row = {"q": q, "P": "", "maxiter": maxiter, "seed": replicate, "error": ""}
    try:
        g = load_graph(base.graph_source)
        penalty = multiplier * g.n_vertices
        row["P"] = penalty
        seed = derive_cell_seed(base.seed, q, penalty, maxiter, replicate)
        config = replace(
            base,
            layers_q=q,
            penalty=penalty,
            penalty_multiplier=None,
            max_iterations=maxiter,
            seed=seed,
        )
        result = run_single(config, graph=g)
        row.update(
            z_star=result.z_star,
            is_tds=result.z_star_is_tds,
            is_min_tds=result.z_star_is_minimal_tds,
            correct_prob=result.correct_probability,
            optimal_prob=result.optimal_probability,
            final_cost=result.trace.best_value,
            evals=result.trace.n_evaluations,
            runtime_ms=round(result.runtime_ms, 3),
        )
    except Exception as exc:
        row.update(
            z_star="", is_tds=False, is_min_tds=False, correct_prob="",
            optimal_prob="", final_cost="", evals=0, runtime_ms=0.0,
            error=f"{type(exc).__name__}: {exc}",
        )
    return row


def run_sweep(
    base: RunConfig,
    layer_values=DEFAULT_SWEEP_LAYERS,
    multiplier_values=DEFAULT_SWEEP_MULTIPLIERS,
    maxiter_values=DEFAULT_SWEEP_MAXITERS,
    n_seeds: int = 1,
    workers: int = 1,
) -> SweepResult:
    """Run the Cartesian (q, P multiplier, maxiter) grid with replicate seeds.

    One row per (cell, replicate); one summary per cell aggregating over
    replicates. Failures are recorded in the row's error column and do not
    stop the sweep. base.seed is the sweep-level seed from which every
    replicate seed is derived.
    """
    tasks = [
        (base, q, m, it, r)
        for q in layer_values
        for m in multiplier_values
        for it in maxiter_values
        for r in range(n_seeds)
    ]
    if workers > 1 and len(tasks) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_run_sweep_cell, tasks, chunksize=1))
    else:
        rows = [_run_sweep_cell(t) for t in tasks]
    rows.sort(key=lambda r: (r["q"], r["P"] != "", r["P"] or 0.0, r["maxiter"], r["seed"]))

    cells: dict[tuple, list[dict]] = {}
    for row in rows:
        if row["error"]:
            continue
        cells.setdefault((row["q"], row["P"], row["maxiter"]), []).append(row)

    summaries = []
    for (q, penalty, maxiter), cell in sorted(cells.items()):
        tds_rate = float(np.mean([r["is_tds"] for r in cell]))
        min_rate = float(np.mean([r["is_min_tds"] for r in cell]))
        summaries.append({
            "q": q,
            "P": penalty,
            "maxiter": maxiter,
            "n_seeds": len(cell),
            "median_correct_prob": float(np.median([r["correct_prob"] for r in cell])),
            "median_optimal_prob": float(np.median([r["optimal_prob"] for r in cell])),
            "tds_rate": tds_rate,
            "min_tds_rate": min_rate,
            "cell_is_tds": tds_rate >= 0.5,
            "cell_is_min_tds": min_rate >= 0.5,
        })
    n_cells = len(layer_values) * len(multiplier_values) * len(maxiter_values)
    return SweepResult(
        rows=rows,
        summaries=summaries,
        n_cells=n_cells,
        n_cells_tds=sum(s["cell_is_tds"] for s in summaries),
        n_cells_min_tds=sum(s["cell_is_min_tds"] for s in summaries),
    )


def write_run_outputs(result: RunResult, out_dir) -> None:
    """Write result.json, distribution.csv, and trace.csv into out_dir."""
    out = pathlib.Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "result.json").write_text(json.dumps(result.to_dict(), indent=2) + "\n")
    (out / "distribution.csv").write_text(result.distribution_csv())
    (out / "trace.csv").write_text(result.trace.to_csv())


def write_sweep_outputs(result: SweepResult, out_dir) -> None:
    """Write rows.csv, summary.csv, and sweep.json into out_dir."""
    out = pathlib.Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "rows.csv").write_text(result.rows_csv())
    (out / "summary.csv").write_text(result.summary_csv())
    (out / "sweep.json").write_text(json.dumps(result.to_dict(), indent=2) + "\n")
