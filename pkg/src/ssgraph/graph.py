"""Simple undirected graph with O(1) mutation and sampling primitives.

The rewiring chain needs four samplers, each O(1): uniform vertex, uniform
edge, degree-proportional vertex, and uniform incident edge. The structure
carries an indexable edge list (swap-remove deletion), a normalized-pair
edge index, and per-vertex adjacency stored as list + position map so a
uniform neighbor is one array lookup.

Self-loops and parallel edges are never stored.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .rng import SplitMix64


class Graph:
    """Mutable simple undirected graph over dense vertex ids 0..n-1."""

    __slots__ = ("n", "_edges", "_edge_index", "_adj", "_adj_pos", "_degrees")

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"vertex count must be >= 1, got {n}")
        self.n = n
        self._edges: list[tuple[int, int]] = []
        self._edge_index: dict[int, int] = {}
        self._adj: list[list[int]] = [[] for _ in range(n)]
        self._adj_pos: list[dict[int, int]] = [{} for _ in range(n)]
        self._degrees: list[int] = [0] * n

    # -- basic queries ---------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def degree(self, v: int) -> int:
        return self._degrees[v]

    def degrees(self) -> list[int]:
        return list(self._degrees)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(self._adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """Copy of the edge list as normalized (min, max) pairs."""
        return list(self._edges)

    def iter_edges(self) -> Iterator[tuple[int, int]]:
        return iter(self._edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return u * self.n + v in self._edge_index

    def max_degree(self) -> int:
        return max(self._degrees)

    # -- mutation --------------------------------------------------------

    def add_edge(self, u: int, v: int) -> bool:
        """Add edge (u, v); returns False (graph unchanged) if it would be a
        self-loop or a parallel edge."""
        n = self.n
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"vertex out of range: ({u}, {v}) with n={n}")
        if u == v:
            return False
        a, b = (u, v) if u < v else (v, u)
        key = a * n + b
        if key in self._edge_index:
            return False
        self._edge_index[key] = len(self._edges)
        self._edges.append((a, b))
        adj_a = self._adj[a]
        self._adj_pos[a][b] = len(adj_a)
        adj_a.append(b)
        adj_b = self._adj[b]
        self._adj_pos[b][a] = len(adj_b)
        adj_b.append(a)
        self._degrees[a] += 1
        self._degrees[b] += 1
        return True

    def remove_edge(self, u: int, v: int) -> None:
        """Remove edge (u, v). Removing an absent edge is a contract
        violation and raises."""
        n = self.n
        a, b = (u, v) if u < v else (v, u)
        pos = self._edge_index.pop(a * n + b, None)
        if pos is None:
            raise ValueError(f"edge ({u}, {v}) not present")
        last = self._edges.pop()
        if pos < len(self._edges):
            self._edges[pos] = last
            self._edge_index[last[0] * n + last[1]] = pos
        for p, q in ((a, b), (b, a)):
            adj = self._adj[p]
            adj_pos = self._adj_pos[p]
            i = adj_pos.pop(q)
            moved = adj.pop()
            if i < len(adj):
                adj[i] = moved
                adj_pos[moved] = i
        self._degrees[a] -= 1
        self._degrees[b] -= 1

    # -- sampling --------------------------------------------------------

    def sample_uniform_vertex(self, rng: SplitMix64) -> int:
        return int(rng.random() * self.n)

    def sample_uniform_edge(self, rng: SplitMix64) -> tuple[int, int]:
        m = len(self._edges)
        if m == 0:
            raise ValueError("cannot sample an edge from an empty edge set")
        return self._edges[int(rng.random() * m)]

    def sample_vertex_by_degree(self, rng: SplitMix64) -> int:
        """Vertex v with probability degree(v) / 2m: uniform edge, then
        uniform endpoint. Exact, and never returns an isolated vertex."""
        m = len(self._edges)
        if m == 0:
            raise ValueError("cannot sample by degree from an empty edge set")
        e = self._edges[int(rng.random() * m)]
        return e[0] if int(rng.random() * 2) == 0 else e[1]

    def sample_incident_edge(self, v: int, rng: SplitMix64) -> tuple[int, int]:
        """Uniform edge among the degree(v) edges incident to v, returned
        as (v, neighbor)."""
        adj = self._adj[v]
        if not adj:
            raise ValueError(f"vertex {v} has no incident edges")
        return v, adj[int(rng.random() * len(adj))]

    # -- plumbing ---------------------------------------------------------

    def copy(self) -> Graph:
        g = Graph.__new__(Graph)
        g.n = self.n
        g._edges = list(self._edges)
        g._edge_index = dict(self._edge_index)
        g._adj = [list(a) for a in self._adj]
        g._adj_pos = [dict(p) for p in self._adj_pos]
        g._degrees = list(self._degrees)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build from an edge iterable; self-loops or duplicates raise."""
        g = cls(n)
        for u, v in edges:
            if not g.add_edge(u, v):
                raise ValueError(f"rejected edge ({u}, {v}): self-loop or duplicate")
        return g

    def check_consistency(self) -> None:
        """Validate all four structures against each other; raises
        AssertionError on any mismatch. Used by tests and debug paths."""
        n = self.n
        assert len(self._adj) == n and len(self._adj_pos) == n and len(self._degrees) == n
        assert len(self._edge_index) == len(self._edges)
        rebuilt: list[set[int]] = [set() for _ in range(n)]
        for pos, (u, v) in enumerate(self._edges):
            assert 0 <= u < v < n, f"edge {(u, v)} not normalized or out of range"
            assert self._edge_index[u * n + v] == pos
            rebuilt[u].add(v)
            rebuilt[v].add(u)
        for v in range(n):
            assert set(self._adj[v]) == rebuilt[v], f"adjacency mismatch at {v}"
            assert len(self._adj[v]) == len(rebuilt[v]), f"duplicate neighbor at {v}"
            assert self._degrees[v] == len(self._adj[v])
            assert self._adj_pos[v] == {u: i for i, u in enumerate(self._adj[v])}
        assert sum(self._degrees) == 2 * len(self._edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self._edges)})"


# -- edge-list text format ------------------------------------------------
#
# One edge per line, two whitespace-separated non-negative integers.
# Lines starting with '#' are comments; blank lines are skipped.


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """Parse edge-list text; vertex count defaults to max id + 1.

    Self-loops and duplicate lines are rejected with the offending line
    number in the message.
    """
    parsed: list[tuple[int, int, int]] = []
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: expected two integers, got {raw!r}") from None
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: negative vertex id in {raw!r}")
        if u == v:
            raise ValueError(f"line {lineno}: self-loop ({u}, {v})")
        parsed.append((lineno, u, v))
        max_id = max(max_id, u, v)
    count = (max_id + 1) if n is None else n
    g = Graph(max(count, 1))
    for lineno, u, v in parsed:
        if not g.add_edge(u, v):
            raise ValueError(f"line {lineno}: duplicate edge ({u}, {v})")
    return g


def read_edge_list(path: str | Path, n: int | None = None) -> Graph:
    return parse_edge_list(Path(path).read_text(), n=n)


def write_edge_list(g: Graph, path: str | Path) -> None:
    lines = [f"{u} {v}" for u, v in g.iter_edges()]
    Path(path).write_text("\n".join(lines) + ("\n" if lines else ""))
