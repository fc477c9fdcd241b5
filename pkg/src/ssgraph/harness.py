"""Experiment harness: seeded repeated runs, aggregation, and reports.

Three experiments are provided. `run_table1` reruns the rewiring model at
the (n, m) of sixteen crawled university web graphs and compares the
degeneracy of the result against the embedded reference numbers.
`run_powerlaw_sweep` runs size/density grids with degree-histogram
snapshots and power-law fits at chosen step checkpoints. `analyze_file`
computes the same instruments for a user-supplied edge list or degree
sequence.

Reports embed the full configuration (per-run seeds included) and are
serializable as JSON or CSV. Runs are merged by (label, run index), never
by completion order, so worker count never changes a report's content;
wall times are the only nondeterministic field and can be suppressed.
"""

from __future__ import annotations

import json
import multiprocessing
import time
from dataclasses import dataclass, field
from pathlib import Path
from statistics import mean, stdev
from typing import Sequence

from .graph import Graph, read_edge_list
from .metrics import (
    DegreeHistogram,
    FitMode,
    degeneracy,
    degree_histogram,
    fit_power_law,
    min_degree,
)
from .models import (
    RewiringVariant,
    SSParams,
    gen_config_from_sequence,
    read_degree_sequence,
    ss_run,
)
from .rng import RNG_NAME, SplitMix64, derive_seed


@dataclass(frozen=True)
class Table1Row:
    """One crawled site: its size, the crawl's degeneracy, and the reference
    mean/stdev degeneracies reported for the two models."""

    site: str
    n: int
    m: int
    dmax_web: int
    mu_acl: float
    sigma_acl: float
    mu_ss: float
    sigma_ss: float


TABLE1_ROWS: tuple[Table1Row, ...] = (
    Table1Row("arizona", 5315, 16892, 15, 10.0, 0.0, 8.0, 0.0),
    Table1Row("berkeley", 2826, 22957, 45, 21.6, 0.547, 16.0, 0.0),
    Table1Row("caltech", 622, 4830, 7, 5.8, 0.447, 12.8, 0.447),
    Table1Row("cmu", 2052, 23821, 57, 37.2, 0.447, 20.0, 0.707),
    Table1Row("cornell", 7145, 14919, 17, 19.4, 0.547, 6.0, 0.0),
    Table1Row("harvard", 915, 9327, 21, 12.6, 0.894, 16.4, 0.547),
    Table1Row("mit", 4861, 15360, 31, 24.4, 0.547, 7.0, 0.0),
    Table1Row("nd", 1913, 16328, 33, 29.2, 0.447, 15.4, 0.547),
    Table1Row("stanford", 2553, 25693, 27, 14.6, 0.547, 18.4, 0.547),
    Table1Row("ucla", 2718, 19755, 22, 16.6, 0.547, 14.2, 0.447),
    Table1Row("ucsb", 5236, 10338, 22, 13.8, 0.447, 5.0, 0.0),
    Table1Row("ucsd", 553, 3885, 15, 7.2, 0.447, 11.8, 0.447),
    Table1Row("uiowa", 1410, 12258, 8, 8.8, 0.447, 15.2, 0.447),
    Table1Row("uiuc", 5623, 28872, 29, 21.0, 0.0, 11.8, 0.836),
    Table1Row("unc", 1465, 5446, 17, 9.8, 0.447, 8.0, 0.0),
    Table1Row("washington", 7001, 24901, 17, 12.0, 0.0, 9.0, 0.0),
)

TABLE1_BY_SITE = {row.site: row for row in TABLE1_ROWS}


@dataclass
class RunRecord:
    """One completed run; `metrics` holds the experiment-specific payload
    (d_max, fits, snapshots, ...) already in JSON-ready form."""

    label: str
    n: int
    m: int
    run_index: int
    seed: int
    elapsed_ms: float
    metrics: dict

    def to_dict(self, include_timing: bool = True) -> dict:
        out = {
            "label": self.label,
            "n": self.n,
            "m": self.m,
            "run_index": self.run_index,
            "seed": self.seed,
            **self.metrics,
        }
        if include_timing:
            out["elapsed_ms"] = self.elapsed_ms
        return out


@dataclass
class ExperimentReport:
    kind: str
    config: dict
    runs: list[RunRecord]
    aggregates: dict[str, dict] = field(default_factory=dict)

    def to_dict(self, include_timing: bool = True) -> dict:
        return {
            "kind": self.kind,
            "config": self.config,
            "runs": [r.to_dict(include_timing) for r in self.runs],
            "aggregates": self.aggregates,
        }

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_dict(include_timing), sort_keys=True, indent=2) + "\n"

    def to_csv(self, include_timing: bool = True) -> str:
        """Flat per-run table. d_max experiments use the columns
        site,n,m,run_index,seed,d_max,elapsed_ms; sweep reports emit one row
        per (run, checkpoint, fit mode) instead."""
        if self.kind == "sweep":
            return self._sweep_csv(include_timing)
        header = "site,n,m,run_index,seed,d_max,elapsed_ms"
        lines = [header]
        for r in self.runs:
            d_max = r.metrics.get("d_max", "")
            elapsed = f"{r.elapsed_ms:.3f}" if include_timing else ""
            lines.append(f"{r.label},{r.n},{r.m},{r.run_index},{r.seed},{d_max},{elapsed}")
        return "\n".join(lines) + "\n"

    def _sweep_csv(self, include_timing: bool) -> str:
        header = ("label,n,m,run_index,seed,step,mode,alpha,intercept,"
                  "r_squared,points_used,max_degree,elapsed_ms")
        lines = [header]
        for r in self.runs:
            elapsed = f"{r.elapsed_ms:.3f}" if include_timing else ""
            for snap in r.metrics["snapshots"]:
                for mode_name, fit in snap["fits"].items():
                    if fit is None:
                        cells = [mode_name, "", "", "", ""]
                    else:
                        cells = [mode_name, f"{fit['alpha']:.6g}",
                                 f"{fit['intercept']:.6g}", f"{fit['r_squared']:.6g}",
                                 str(fit["points_used"])]
                    lines.append(
                        f"{r.label},{r.n},{r.m},{r.run_index},{r.seed},{snap['step']},"
                        + ",".join(cells) + f",{snap['max_degree']},{elapsed}"
                    )
        return "\n".join(lines) + "\n"


def _aggregate(values: Sequence[float]) -> dict:
    return {
        "runs": len(values),
        "mean": mean(values),
        "stdev": stdev(values) if len(values) > 1 else None,
    }


def _execute(task_fn, tasks: list, workers: int) -> list:
    if workers <= 1 or len(tasks) <= 1:
        return [task_fn(t) for t in tasks]
    with multiprocessing.Pool(workers) as pool:
        return pool.map(task_fn, tasks, chunksize=1)


# -- Table 1 ----------------------------------------------------------------


def _ss_dmax_task(task: dict) -> RunRecord:
    t0 = time.perf_counter()
    params = SSParams(
        n=task["n"], m=task["m"], r=task["r"], seed=task["seed"],
        variant=RewiringVariant(task["variant"]),
    )
    g, _ = ss_run(params, engine=task["engine"])
    result = degeneracy(g)
    elapsed = (time.perf_counter() - t0) * 1e3
    return RunRecord(
        label=task["label"], n=task["n"], m=task["m"],
        run_index=task["run_index"], seed=task["seed"], elapsed_ms=elapsed,
        metrics={"d_max": result.d_max},
    )


def _config_dmax_task(task: dict) -> RunRecord:
    t0 = time.perf_counter()
    seq = task["sequence"]
    g = gen_config_from_sequence(list(seq), SplitMix64(task["seed"]))
    result = degeneracy(g)
    elapsed = (time.perf_counter() - t0) * 1e3
    return RunRecord(
        label=task["label"], n=g.n, m=g.edge_count,
        run_index=task["run_index"], seed=task["seed"], elapsed_ms=elapsed,
        metrics={
            "d_max": result.d_max,
            "requested_m": sum(seq) // 2,
            "realized_m": g.edge_count,
        },
    )


def run_table1(
    sites: Sequence[str] | None = None,
    repeats: int = 5,
    r: int = 10_000_000,
    base_seed: int = 0,
    variant: RewiringVariant = RewiringVariant.INCIDENT_EDGE,
    workers: int = 1,
    degree_sequences: dict[str, Sequence[int]] | None = None,
    engine: str = "auto",
) -> ExperimentReport:
    """Rerun the rewiring model at each selected site's (n, m), `repeats`
    seeded runs per site, and aggregate the degeneracies.

    When a degree sequence is supplied for a site, the same number of
    configuration-model runs from that sequence is added under the label
    `<site>:config`. Per-run seeds are base_seed XOR hash(label, run index),
    so row selection never changes another row's runs.
    """
    if repeats < 1:
        raise ValueError(f"repeats must be >= 1, got {repeats}")
    if sites is None:
        rows = list(TABLE1_ROWS)
    else:
        unknown = [s for s in sites if s not in TABLE1_BY_SITE]
        if unknown:
            raise ValueError(f"unknown site label(s): {', '.join(unknown)}")
        rows = [TABLE1_BY_SITE[s] for s in sites]
    degree_sequences = degree_sequences or {}

    ss_tasks = [
        {
            "label": row.site, "n": row.n, "m": row.m, "r": r,
            "variant": variant.value, "engine": engine,
            "run_index": idx, "seed": derive_seed(base_seed, row.site, idx),
        }
        for row in rows
        for idx in range(repeats)
    ]
    runs = _execute(_ss_dmax_task, ss_tasks, workers)

    config_tasks = []
    for row in rows:
        seq = degree_sequences.get(row.site)
        if seq is None:
            continue
        label = f"{row.site}:config"
        config_tasks += [
            {
                "label": label, "sequence": tuple(seq),
                "run_index": idx, "seed": derive_seed(base_seed, label, idx),
            }
            for idx in range(repeats)
        ]
    runs += _execute(_config_dmax_task, config_tasks, workers)

    aggregates: dict[str, dict] = {}
    for row in rows:
        values = [rec.metrics["d_max"] for rec in runs if rec.label == row.site]
        aggregates[row.site] = {
            "n": row.n,
            "m": row.m,
            **_aggregate(values),
            "reference": {
                "dmax_web": row.dmax_web,
                "mu_acl": row.mu_acl, "sigma_acl": row.sigma_acl,
                "mu_ss": row.mu_ss, "sigma_ss": row.sigma_ss,
            },
        }
        label = f"{row.site}:config"
        cfg_values = [rec.metrics["d_max"] for rec in runs if rec.label == label]
        if cfg_values:
            aggregates[label] = _aggregate(cfg_values)

    config = {
        "base_seed": base_seed, "r": r, "repeats": repeats,
        "variant": variant.value, "rng": RNG_NAME,
        "sites": [row.site for row in rows],
    }
    return ExperimentReport(kind="table1", config=config, runs=runs,
                            aggregates=aggregates)


# -- power-law sweep ---------------------------------------------------------


def _fit_or_none(h: DegreeHistogram, mode: FitMode) -> dict | None:
    try:
        return fit_power_law(h, mode).to_dict()
    except ValueError:
        return None


def _sweep_task(task: dict) -> RunRecord:
    t0 = time.perf_counter()
    params = SSParams(
        n=task["n"], m=task["m"], r=task["r"], seed=task["seed"],
        variant=RewiringVariant(task["variant"]), checkpoints=task["checkpoints"],
    )
    _, snapshots = ss_run(params, engine=task["engine"])
    snaps = []
    for step, hist in zip(task["checkpoints"], snapshots):
        snaps.append({
            "step": step,
            "max_degree": hist.max_degree(),
            "fits": {
                FitMode.RAW_COUNTS.value: _fit_or_none(hist, FitMode.RAW_COUNTS),
                FitMode.CCDF.value: _fit_or_none(hist, FitMode.CCDF),
            },
            "histogram": [list(p) for p in hist.as_pairs()],
        })
    elapsed = (time.perf_counter() - t0) * 1e3
    return RunRecord(
        label=task["label"], n=task["n"], m=task["m"],
        run_index=task["run_index"], seed=task["seed"], elapsed_ms=elapsed,
        metrics={"snapshots": snaps},
    )


def run_powerlaw_sweep(
    n_list: Sequence[int],
    density_list: Sequence[float],
    r: int = 10_000_000,
    checkpoints: Sequence[int] = (),
    repeats: int = 5,
    base_seed: int = 0,
    variant: RewiringVariant = RewiringVariant.INCIDENT_EDGE,
    workers: int = 1,
    engine: str = "auto",
) -> ExperimentReport:
    """Run the chain on every (n, m = density * n) cell with histogram
    snapshots and power-law fits at each checkpoint. The final step r is
    always snapshotted, whether or not it is listed."""
    if repeats < 1:
        raise ValueError(f"repeats must be >= 1, got {repeats}")
    effective_cps = tuple(sorted(set(checkpoints) | {r}))
    tasks = []
    for n in n_list:
        for density in density_list:
            m = int(round(density * n))
            label = f"n{n}_m{m}"
            tasks += [
                {
                    "label": label, "n": n, "m": m, "r": r,
                    "checkpoints": effective_cps, "variant": variant.value,
                    "engine": engine, "run_index": idx,
                    "seed": derive_seed(base_seed, label, idx),
                }
                for idx in range(repeats)
            ]
    runs = _execute(_sweep_task, tasks, workers)

    aggregates: dict[str, dict] = {}
    for task in tasks:
        label = task["label"]
        if label in aggregates:
            continue
        group = [rec for rec in runs if rec.label == label]
        finals = [rec.metrics["snapshots"][-1] for rec in group]
        agg: dict = {
            "n": group[0].n, "m": group[0].m, "runs": len(group),
            "max_degree": _aggregate([s["max_degree"] for s in finals]),
        }
        for mode in FitMode:
            fits = [s["fits"][mode.value] for s in finals]
            fits = [f for f in fits if f is not None]
            if fits:
                agg[f"alpha_{mode.value}"] = _aggregate([f["alpha"] for f in fits])
                agg[f"r_squared_{mode.value}"] = _aggregate([f["r_squared"] for f in fits])
        aggregates[label] = agg

    config = {
        "base_seed": base_seed, "r": r, "repeats": repeats,
        "variant": variant.value, "rng": RNG_NAME,
        "n_list": list(n_list), "density_list": list(density_list),
        "checkpoints": list(effective_cps),
    }
    return ExperimentReport(kind="sweep", config=config, runs=runs,
                            aggregates=aggregates)


def write_sweep_histograms(report: ExperimentReport, out_dir: str | Path) -> list[Path]:
    """One CSV per (cell, run, checkpoint), ready for log-log plotting."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for rec in report.runs:
        for snap in rec.metrics["snapshots"]:
            path = out_dir / f"{rec.label}_run{rec.run_index}_step{snap['step']}.csv"
            lines = ["degree,count"]
            lines += [f"{d},{c}" for d, c in snap["histogram"]]
            path.write_text("\n".join(lines) + "\n")
            written.append(path)
    return written


# -- file analysis -----------------------------------------------------------

ALL_METRICS = ("d_max", "min_degree", "histogram", "fit")


def _graph_metrics(g: Graph, which: Sequence[str]) -> dict:
    out: dict = {}
    if "d_max" in which:
        out["d_max"] = degeneracy(g).d_max
    if "min_degree" in which:
        out["min_degree"] = min_degree(g)
    if "histogram" in which or "fit" in which:
        hist = degree_histogram(g)
        if "histogram" in which:
            out["histogram"] = [list(p) for p in hist.as_pairs()]
            out["max_degree"] = hist.max_degree()
        if "fit" in which:
            out["fits"] = {
                FitMode.RAW_COUNTS.value: _fit_or_none(hist, FitMode.RAW_COUNTS),
                FitMode.CCDF.value: _fit_or_none(hist, FitMode.CCDF),
            }
    return out


def detect_file_kind(path: str | Path) -> str:
    """Edge lists have two integers per data line, degree sequences one."""
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = len(line.split())
        if tokens == 2:
            return "edges"
        if tokens == 1:
            return "degrees"
        raise ValueError(f"{path}: line {lineno}: expected 1 or 2 fields, got {tokens}")
    raise ValueError(f"{path}: no data lines found")


def _analyze_config_task(task: dict) -> RunRecord:
    t0 = time.perf_counter()
    g = gen_config_from_sequence(list(task["sequence"]), SplitMix64(task["seed"]))
    payload = _graph_metrics(g, task["metrics"])
    payload["requested_m"] = sum(task["sequence"]) // 2
    payload["realized_m"] = g.edge_count
    elapsed = (time.perf_counter() - t0) * 1e3
    return RunRecord(label=task["label"], n=g.n, m=g.edge_count,
                     run_index=task["run_index"], seed=task["seed"],
                     elapsed_ms=elapsed, metrics=payload)


def analyze_file(
    path: str | Path,
    kind: str = "auto",
    metrics: Sequence[str] | None = None,
    repeats: int = 1,
    base_seed: int = 0,
    workers: int = 1,
) -> ExperimentReport:
    """Instrument a user-supplied graph file.

    Edge lists are measured directly. Degree sequences get `repeats`
    seeded configuration-model generations, each measured, with mean/stdev
    degeneracy aggregated across them.
    """
    path = Path(path)
    which = tuple(metrics) if metrics else ALL_METRICS
    unknown = [w for w in which if w not in ALL_METRICS]
    if unknown:
        raise ValueError(f"unknown metric(s): {', '.join(unknown)}")
    if kind == "auto":
        kind = detect_file_kind(path)
    if kind not in ("edges", "degrees"):
        raise ValueError(f"unknown file kind {kind!r}")

    if kind == "edges":
        g = read_edge_list(path)
        t0 = time.perf_counter()
        payload = _graph_metrics(g, which)
        elapsed = (time.perf_counter() - t0) * 1e3
        runs = [RunRecord(label=path.stem, n=g.n, m=g.edge_count, run_index=0,
                          seed=0, elapsed_ms=elapsed, metrics=payload)]
        aggregates = {}
    else:
        seq = read_degree_sequence(path)
        label = f"config:{path.stem}"
        tasks = [
            {
                "label": label, "sequence": tuple(seq), "metrics": which,
                "run_index": idx, "seed": derive_seed(base_seed, label, idx),
            }
            for idx in range(repeats)
        ]
        runs = _execute(_analyze_config_task, tasks, workers)
        aggregates = {}
        if "d_max" in which:
            aggregates[label] = _aggregate([rec.metrics["d_max"] for rec in runs])

    config = {
        "path": str(path), "kind": kind, "metrics": list(which),
        "base_seed": base_seed, "repeats": repeats, "rng": RNG_NAME,
    }
    return ExperimentReport(kind="analyze", config=config, runs=runs,
                            aggregates=aggregates)
