"""Steady-state rewiring graphs, degeneracy, and power-law instruments."""

from .graph import Graph, parse_edge_list, read_edge_list, write_edge_list
from .harness import (
    TABLE1_BY_SITE,
    TABLE1_ROWS,
    ExperimentReport,
    RunRecord,
    Table1Row,
    analyze_file,
    run_powerlaw_sweep,
    run_table1,
    write_sweep_histograms,
)
from .metrics import (
    DegeneracyResult,
    DegreeHistogram,
    FitMode,
    PowerLawFit,
    degeneracy,
    degree_histogram,
    fit_power_law,
    min_degree,
)
from .models import (
    DegreeSequence,
    RewiringVariant,
    SSParams,
    StepOutcome,
    gen_config_from_sequence,
    gen_er_gnm,
    gen_fixed_degree_growth,
    read_degree_sequence,
    ss_run,
    ss_step,
)
from .rng import RNG_NAME, SplitMix64, derive_seed

__version__ = "0.1.0"

__all__ = [
    "Graph", "parse_edge_list", "read_edge_list", "write_edge_list",
    "TABLE1_BY_SITE", "TABLE1_ROWS", "ExperimentReport", "RunRecord",
    "Table1Row", "analyze_file", "run_powerlaw_sweep", "run_table1",
    "write_sweep_histograms",
    "DegeneracyResult", "DegreeHistogram", "FitMode", "PowerLawFit",
    "degeneracy", "degree_histogram", "fit_power_law", "min_degree",
    "DegreeSequence", "RewiringVariant", "SSParams", "StepOutcome",
    "gen_config_from_sequence", "gen_er_gnm", "gen_fixed_degree_growth",
    "read_degree_sequence", "ss_run", "ss_step",
    "RNG_NAME", "SplitMix64", "derive_seed",
    "__version__",
]
