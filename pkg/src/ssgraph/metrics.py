"""Graph instruments: degeneracy, degree histograms, power-law fits.

Degeneracy here is the max over all subgraphs of the minimum degree within
the subgraph, computed by repeated minimum-degree elimination: the largest
degree ever seen at removal time is the answer, and the removal order plus
removal-time degrees form a checkable certificate.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from heapq import heapify, heappop, heappush

import numpy as np

from .graph import Graph


@dataclass
class DegeneracyResult:
    d_max: int
    elimination_order: list[int]
    elimination_degrees: list[int]


def degeneracy(g: Graph) -> DegeneracyResult:
    """Minimum-degree elimination over a scratch copy of the degree state.

    Ties broken toward the lowest vertex id via a lazy (degree, id) heap,
    which makes the certificate deterministic. That exact tie-break rules
    out an O(1)-extraction bucket queue; the log factor is invisible at the
    sizes this package handles.
    """
    n = g.n
    deg = g.degrees()
    alive = [True] * n
    # key = degree * n + id sorts by degree, then lowest id
    heap = [deg[v] * n + v for v in range(n)]
    heapify(heap)
    adj = [g.neighbors(v) for v in range(n)]
    order: list[int] = []
    removal_degrees: list[int] = []
    d_max = 0
    while heap:
        key = heappop(heap)
        v = key % n
        dv = key // n
        if not alive[v] or dv != deg[v]:
            continue  # stale lazy entry
        alive[v] = False
        order.append(v)
        removal_degrees.append(dv)
        if dv > d_max:
            d_max = dv
        for w in adj[v]:
            if alive[w]:
                deg[w] -= 1
                heappush(heap, deg[w] * n + w)
    return DegeneracyResult(d_max=d_max, elimination_order=order,
                            elimination_degrees=removal_degrees)


def min_degree(g: Graph) -> int:
    return min(g.degrees())


@dataclass
class DegreeHistogram:
    """Exact degree -> vertex-count map; degree-0 vertices included."""

    counts: dict[int, int]
    n_total: int

    def __post_init__(self):
        if any(d < 0 for d in self.counts):
            raise ValueError("negative degree in histogram")
        if any(c <= 0 for c in self.counts.values()):
            raise ValueError("non-positive count in histogram")
        if sum(self.counts.values()) != self.n_total:
            raise ValueError("histogram counts do not sum to n_total")

    @classmethod
    def from_count_array(cls, counts, n_total: int) -> "DegreeHistogram":
        """From counts[d] = number of vertices with degree d."""
        return cls({d: int(c) for d, c in enumerate(counts) if c > 0}, n_total)

    def max_degree(self) -> int:
        return max(self.counts)

    def to_csv(self) -> str:
        lines = ["degree,count"]
        lines += [f"{d},{self.counts[d]}" for d in sorted(self.counts)]
        return "\n".join(lines) + "\n"

    def as_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.counts.items())


def degree_histogram(g: Graph) -> DegreeHistogram:
    return DegreeHistogram(dict(Counter(g.degrees())), n_total=g.n)


class FitMode(enum.Enum):
    RAW_COUNTS = "raw_counts"
    CCDF = "ccdf"


@dataclass
class PowerLawFit:
    alpha: float
    intercept: float
    r_squared: float
    mode: FitMode
    points_used: int

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "intercept": self.intercept,
            "r_squared": self.r_squared,
            "mode": self.mode.value,
            "points_used": self.points_used,
        }


def fit_power_law(h: DegreeHistogram, mode: FitMode = FitMode.RAW_COUNTS) -> PowerLawFit:
    """Least-squares line on (log10 degree, log10 value), degree-0 excluded.

    RAW_COUNTS fits the per-degree counts directly; CCDF fits
    P(Degree >= d), which is smoother in the tail. Needs at least 3
    distinct positive degrees with nonzero count.
    """
    degrees = sorted(d for d, c in h.counts.items() if d >= 1 and c > 0)
    if len(degrees) < 3:
        raise ValueError(
            f"power-law fit needs >= 3 distinct positive degrees, got {len(degrees)}"
        )
    if mode is FitMode.RAW_COUNTS:
        values = [float(h.counts[d]) for d in degrees]
    else:
        values = []
        cum = 0
        for d in reversed(degrees):
            cum += h.counts[d]
            values.append(cum / h.n_total)
        values.reverse()
    xs = np.log10(np.array(degrees, dtype=float))
    ys = np.log10(np.array(values))
    slope, intercept = np.polyfit(xs, ys, 1)
    predicted = slope * xs + intercept
    ss_res = float(np.sum((ys - predicted) ** 2))
    ss_tot = float(np.sum((ys - ys.mean()) ** 2))
    if ss_tot <= 1e-30:
        r_squared = 1.0 if ss_res <= 1e-30 else 0.0
    else:
        r_squared = max(0.0, min(1.0, 1.0 - ss_res / ss_tot))
    return PowerLawFit(alpha=float(slope), intercept=float(intercept),
                       r_squared=r_squared, mode=mode, points_used=len(degrees))
