"""Command-line harness.

Subcommands:
    generate  emit one graph (ss | gnm | growth | config) as an edge list
    analyze   instrument an edge-list or degree-sequence file
    table1    rerun the rewiring model at the embedded crawled-site sizes
    sweep     size/density grid with checkpointed histograms and fits

Exit code 0 on success, 1 on any parse or configuration error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .graph import write_edge_list
from .harness import (
    TABLE1_BY_SITE,
    ExperimentReport,
    analyze_file,
    run_powerlaw_sweep,
    run_table1,
    write_sweep_histograms,
)
from .metrics import degree_histogram
from .models import (
    RewiringVariant,
    SSParams,
    gen_config_from_sequence,
    gen_er_gnm,
    gen_fixed_degree_growth,
    read_degree_sequence,
    ss_run,
)
from .rng import SplitMix64


def _int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip()]


def _float_list(text: str) -> list[float]:
    return [float(tok) for tok in text.split(",") if tok.strip()]


def _add_common(parser: argparse.ArgumentParser, repeats_default: int = 5) -> None:
    parser.add_argument("--seed", type=int, default=0, help="base seed (default 0)")
    parser.add_argument("--repeats", type=int, default=repeats_default,
                        help=f"runs per configuration (default {repeats_default})")
    parser.add_argument("--variant", choices=[v.value for v in RewiringVariant],
                        default=RewiringVariant.INCIDENT_EDGE.value,
                        help="doomed-edge selection rule (default incident)")
    parser.add_argument("--r", type=int, default=10_000_000,
                        help="rewiring iterations per run (default 1e7)")
    parser.add_argument("--format", choices=["csv", "json"], default="json",
                        help="report format (default json)")
    parser.add_argument("--out", type=Path, default=None,
                        help="write the report here instead of stdout")
    parser.add_argument("--workers", type=int, default=1,
                        help="parallel worker processes (default 1)")
    parser.add_argument("--no-timing", action="store_true",
                        help="omit wall times for byte-reproducible reports")


def _emit_report(report: ExperimentReport, args) -> None:
    include_timing = not args.no_timing
    text = (report.to_json(include_timing) if args.format == "json"
            else report.to_csv(include_timing))
    if args.out:
        args.out.write_text(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)


_GENERATE_REQUIRES = {
    "ss": ("n", "m"), "gnm": ("n", "m"), "growth": ("n", "d"),
    "config": ("degrees",),
}


def _cmd_generate(args) -> int:
    missing = [f"--{name}" for name in _GENERATE_REQUIRES[args.model]
               if getattr(args, name) is None]
    if missing:
        raise ValueError(f"generate {args.model} requires {', '.join(missing)}")
    rng = SplitMix64(args.seed)
    if args.model == "ss":
        params = SSParams(n=args.n, m=args.m, r=args.r, seed=args.seed,
                          variant=RewiringVariant(args.variant))
        g, _ = ss_run(params)
    elif args.model == "gnm":
        g = gen_er_gnm(args.n, args.m, rng)
    elif args.model == "growth":
        g = gen_fixed_degree_growth(args.n, args.d, rng)
    else:  # config
        seq = read_degree_sequence(args.degrees)
        g = gen_config_from_sequence(seq, rng)
        requested = sum(seq) // 2
        if g.edge_count != requested:
            print(f"simplification dropped {requested - g.edge_count} of "
                  f"{requested} matched edges (self-loops/parallels)",
                  file=sys.stderr)
    if args.out:
        write_edge_list(g, args.out)
        print(f"wrote {args.out} ({g.n} vertices, {g.edge_count} edges)")
    else:
        for u, v in g.iter_edges():
            print(u, v)
    if args.hist_out:
        args.hist_out.write_text(degree_histogram(g).to_csv())
        print(f"wrote {args.hist_out}", file=sys.stderr)
    return 0


def _cmd_analyze(args) -> int:
    report = analyze_file(args.path, kind=args.kind, metrics=args.metrics,
                          repeats=args.repeats, base_seed=args.seed,
                          workers=args.workers)
    _emit_report(report, args)
    return 0


def _cmd_table1(args) -> int:
    sites = args.sites.split(",") if args.sites else None
    degree_sequences = {}
    for entry in args.degrees or []:
        site, _, path = entry.partition("=")
        if not path:
            raise ValueError(f"--degrees expects SITE=FILE, got {entry!r}")
        if site not in TABLE1_BY_SITE:
            raise ValueError(f"unknown site label(s): {site}")
        degree_sequences[site] = read_degree_sequence(path)
    report = run_table1(
        sites=sites, repeats=args.repeats, r=args.r, base_seed=args.seed,
        variant=RewiringVariant(args.variant), workers=args.workers,
        degree_sequences=degree_sequences or None,
    )
    _emit_report(report, args)
    return 0


def _cmd_sweep(args) -> int:
    report = run_powerlaw_sweep(
        n_list=args.n_list, density_list=args.density_list, r=args.r,
        checkpoints=args.checkpoints or [], repeats=args.repeats,
        base_seed=args.seed, variant=RewiringVariant(args.variant),
        workers=args.workers,
    )
    if args.hist_dir:
        written = write_sweep_histograms(report, args.hist_dir)
        print(f"wrote {len(written)} histogram CSVs to {args.hist_dir}",
              file=sys.stderr)
    _emit_report(report, args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ssgraph",
        description="Steady-state rewiring graphs, degeneracy, and power-law fits",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate one graph as an edge list")
    gen.add_argument("model", choices=["ss", "gnm", "growth", "config"])
    gen.add_argument("--n", type=int, help="vertex count")
    gen.add_argument("--m", type=int, help="edge count")
    gen.add_argument("--d", type=int, help="attachment degree (growth)")
    gen.add_argument("--degrees", type=Path, help="degree-sequence file (config)")
    gen.add_argument("--r", type=int, default=10_000_000,
                     help="rewiring iterations (ss only, default 1e7)")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--variant", choices=[v.value for v in RewiringVariant],
                     default=RewiringVariant.INCIDENT_EDGE.value)
    gen.add_argument("--out", type=Path, default=None,
                     help="edge-list output file (default stdout)")
    gen.add_argument("--hist-out", type=Path, default=None,
                     help="also write the degree histogram CSV here")
    gen.set_defaults(func=_cmd_generate)

    ana = sub.add_parser("analyze", help="instrument an existing graph file")
    ana.add_argument("path", type=Path)
    ana.add_argument("--kind", choices=["auto", "edges", "degrees"], default="auto")
    ana.add_argument("--metrics", type=lambda s: s.split(","), default=None,
                     help="comma list of d_max,min_degree,histogram,fit (default all)")
    _add_common(ana, repeats_default=1)
    ana.set_defaults(func=_cmd_analyze)

    t1 = sub.add_parser("table1", help="rerun the model at the crawled-site sizes")
    t1.add_argument("--sites", default=None,
                    help="comma list of site labels (default: all 16)")
    t1.add_argument("--degrees", action="append", metavar="SITE=FILE",
                    help="degree-sequence file for a site; adds config-model runs")
    _add_common(t1)
    t1.set_defaults(func=_cmd_table1)

    sw = sub.add_parser("sweep", help="power-law emergence grid")
    sw.add_argument("--n-list", type=_int_list, required=True,
                    help="comma list of vertex counts")
    sw.add_argument("--density-list", type=_float_list, required=True,
                    help="comma list of m/n densities")
    sw.add_argument("--checkpoints", type=_int_list, default=None,
                    help="comma list of step indices to snapshot (final always added)")
    sw.add_argument("--hist-dir", type=Path, default=None,
                    help="directory for per-snapshot histogram CSVs")
    _add_common(sw)
    sw.set_defaults(func=_cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
