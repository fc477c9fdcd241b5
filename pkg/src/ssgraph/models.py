"""Graph generators and the steady-state rewiring chain.

The chain keeps n and m fixed and evolves the edge set: pick a doomed edge
through a random vertex (or uniformly, under the alternative variant), pick
a uniform vertex x and a degree-proportional vertex y, and move the edge to
(x, y) if that pair is a fresh non-loop; otherwise the graph is left
completely unchanged and the iteration still counts.

Also provides the comparison generators: uniform G(n, m) initialization,
fixed-degree preferential growth, and configuration-model sampling from a
degree sequence.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from pathlib import Path

from .graph import Graph
from .metrics import DegreeHistogram, degree_histogram
from .rng import SplitMix64

try:
    from . import _kernel
except ImportError:  # pragma: no cover - numba not installed
    _kernel = None


class RewiringVariant(enum.Enum):
    """Resolution of the ambiguity in how the doomed edge is selected.

    INCIDENT_EDGE: draw a vertex v uniformly (retrying while isolated), then
    a uniform edge incident to v. GLOBAL_EDGE: draw a uniform edge outright,
    which would make the vertex-selection step dead code; kept selectable so
    the two readings can be compared empirically.
    """

    INCIDENT_EDGE = "incident"
    GLOBAL_EDGE = "global"


class StepOutcome(enum.Enum):
    REWIRED = "rewired"
    REJECTED_EXISTING_EDGE = "rejected_existing_edge"
    REJECTED_SELF_PAIR = "rejected_self_pair"


# degree sequence: one non-negative integer per vertex
DegreeSequence = list[int]


@dataclass(frozen=True)
class SSParams:
    """Full parameterization of one rewiring run."""

    n: int
    m: int
    r: int
    seed: int
    variant: RewiringVariant = RewiringVariant.INCIDENT_EDGE
    checkpoints: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        max_edges = self.n * (self.n - 1) // 2
        if not 1 <= self.m <= max_edges:
            raise ValueError(f"m must be in [1, {max_edges}] for n={self.n}, got {self.m}")
        if self.r < 0:
            raise ValueError(f"r must be >= 0, got {self.r}")
        object.__setattr__(self, "checkpoints", tuple(self.checkpoints))
        for prev, cur in zip((-1,) + self.checkpoints, self.checkpoints):
            if cur <= prev:
                raise ValueError(f"checkpoints must be strictly ascending, got {self.checkpoints}")
            if not 0 <= cur <= self.r:
                raise ValueError(f"checkpoint {cur} outside [0, {self.r}]")


def gen_er_gnm(n: int, m: int, rng: SplitMix64) -> Graph:
    """Uniform random simple graph with exactly m edges: rejection-sample
    vertex pairs, retrying on self-loops and duplicates."""
    max_edges = n * (n - 1) // 2
    if m > max_edges:
        raise ValueError(f"m={m} exceeds the {max_edges} possible edges for n={n}")
    random = rng.random
    g = Graph(n)
    while g.edge_count < m:
        u = int(random() * n)
        v = int(random() * n)
        if u != v:
            g.add_edge(u, v)
    return g


def ss_step(g: Graph, rng: SplitMix64,
            variant: RewiringVariant = RewiringVariant.INCIDENT_EDGE) -> StepOutcome:
    """One rewiring iteration; the graph changes iff the outcome is REWIRED.

    y is sampled and the acceptance pair is tested on the graph before any
    removal, so the accepted (x, y) can never equal the doomed edge.
    """
    if g.edge_count == 0:
        raise ValueError("rewiring step requires at least one edge")
    if variant is RewiringVariant.INCIDENT_EDGE:
        while True:
            v = g.sample_uniform_vertex(rng)
            if g.degree(v) > 0:
                break
        v, u = g.sample_incident_edge(v, rng)
    else:
        u, v = g.sample_uniform_edge(rng)
    x = g.sample_uniform_vertex(rng)
    y = g.sample_vertex_by_degree(rng)
    if x == y:
        return StepOutcome.REJECTED_SELF_PAIR
    if g.has_edge(x, y):
        return StepOutcome.REJECTED_EXISTING_EDGE
    g.remove_edge(u, v)
    g.add_edge(x, y)
    return StepOutcome.REWIRED


def ss_run(params: SSParams, engine: str = "auto") -> tuple[Graph, list[DegreeHistogram]]:
    """Generate G(n, m), advance the chain r iterations, and return the
    final graph plus degree-histogram snapshots at the checkpoints.

    engine: "auto" picks the compiled kernel when numba is importable and
    falls back to the pure loop otherwise; "kernel" / "pure" force one path.
    Both paths consume the identical SplitMix64 stream and yield identical
    graphs, so the choice never changes results.
    """
    if engine not in ("auto", "kernel", "pure"):
        raise ValueError(f"unknown engine {engine!r}")
    if engine == "kernel" and _kernel is None:
        raise RuntimeError("kernel engine requested but numba is unavailable")
    rng = SplitMix64(params.seed)
    g = gen_er_gnm(params.n, params.m, rng)
    use_kernel = engine == "kernel" or (
        engine == "auto" and _kernel is not None and params.r > 0
    )
    if use_kernel:
        return _run_with_kernel(g, rng, params)
    return _run_pure(g, rng, params)


def _run_pure(g: Graph, rng: SplitMix64, params: SSParams):
    snapshots = []
    done = 0
    for cp in params.checkpoints:
        for _ in range(cp - done):
            ss_step(g, rng, params.variant)
        done = cp
        snapshots.append(degree_histogram(g))
    for _ in range(params.r - done):
        ss_step(g, rng, params.variant)
    return g, snapshots


def _run_with_kernel(g: Graph, rng: SplitMix64, params: SSParams):
    variant_code = (
        _kernel.VARIANT_INCIDENT
        if params.variant is RewiringVariant.INCIDENT_EDGE
        else _kernel.VARIANT_GLOBAL
    )
    state = _kernel.ChainState.from_graph(g)
    snapshots = []
    done = 0
    for cp in params.checkpoints:
        state.run(rng, cp - done, variant_code)
        done = cp
        counts = state.degree_counts()
        snapshots.append(DegreeHistogram.from_count_array(counts, n_total=params.n))
    state.run(rng, params.r - done, variant_code)
    return state.to_graph(), snapshots


def gen_fixed_degree_growth(n: int, d: int, rng: SplitMix64) -> Graph:
    """Grow a graph one vertex at a time, every arrival attaching d edges to
    distinct existing vertices chosen degree-proportionally (redraw on
    self or already-chosen targets). Seeded with a (d+1)-clique so every
    vertex ends with degree >= d."""
    if d < 1:
        raise ValueError(f"attachment degree must be >= 1, got {d}")
    if n <= d:
        raise ValueError(f"need n > d, got n={n}, d={d}")
    g = Graph(n)
    for v in range(d + 1):
        for u in range(v):
            g.add_edge(u, v)
    for w in range(d + 1, n):
        while g.degree(w) < d:
            y = g.sample_vertex_by_degree(rng)
            if y != w:
                g.add_edge(w, y)  # False just means redraw
    return g


def gen_config_from_sequence(seq: DegreeSequence, rng: SplitMix64) -> Graph:
    """Configuration model: uniform random stub matching, then simplify by
    dropping self-loops and collapsing parallel edges. Realized degrees are
    therefore bounded above by the requested sequence componentwise."""
    if not seq:
        raise ValueError("degree sequence is empty")
    if any(d < 0 for d in seq):
        raise ValueError("degree sequence has a negative entry")
    if sum(seq) % 2 != 0:
        raise ValueError(f"degree sum must be even, got {sum(seq)}")
    stubs = [v for v, d in enumerate(seq) for _ in range(d)]
    rng.shuffle(stubs)
    g = Graph(len(seq))
    for i in range(0, len(stubs), 2):
        g.add_edge(stubs[i], stubs[i + 1])
    return g


def read_degree_sequence(path: str | Path) -> DegreeSequence:
    """Degree-sequence file: one non-negative integer per line, '#' comments
    and blank lines skipped."""
    seq = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            d = int(line)
        except ValueError:
            raise ValueError(f"line {lineno}: expected an integer, got {raw!r}") from None
        if d < 0:
            raise ValueError(f"line {lineno}: negative degree {d}")
        seq.append(d)
    return seq
