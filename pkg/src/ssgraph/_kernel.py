"""numba-compiled engine for long rewiring runs.

The chain state lives in flat arrays: edge endpoint arrays, per-vertex
adjacency segments in one arena (entries are edge ids), each edge's position
inside both endpoint segments, and a typed dict mapping normalized pair keys
to edge slots. A SplitMix64 state word is threaded through, advanced with
the same mix as rng.SplitMix64, and every mutation mirrors the pure Graph
operations (append at segment end, swap-remove, edge-slot backfill from the
last slot), so a kernel run is draw-for-draw and bit-for-bit identical to a
loop of models.ss_step from the same seed. tests/test_kernel.py pins that
equivalence; do not change one side without the other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import float64, int64, njit, uint64
from numba.typed import Dict

from .graph import Graph

_GOLD = uint64(0x9E3779B97F4A7C15)
_MIX_1 = uint64(0xBF58476D1CE4E5B9)
_MIX_2 = uint64(0x94D049BB133111EB)
_INV_2_53 = 1.0 / 9007199254740992.0

VARIANT_INCIDENT = 0
VARIANT_GLOBAL = 1


@njit(inline="always")
def _rand(s):
    """Advance SplitMix64: returns (new_state, uniform float in [0, 1))."""
    s = s + _GOLD
    z = (s ^ (s >> uint64(30))) * _MIX_1
    z = (z ^ (z >> uint64(27))) * _MIX_2
    z = z ^ (z >> uint64(31))
    return s, float64(z >> uint64(11)) * _INV_2_53


@njit(cache=True)
def _build_edge_index(n, eu, ev):
    index = Dict.empty(key_type=int64, value_type=int64)
    for j in range(eu.shape[0]):
        index[eu[j] * n + ev[j]] = j
    return index


@njit(cache=True)
def _run_steps(n, eu, ev, epos_u, epos_v, deg, arena, start, cap,
               edge_index, arena_end, rng_state, steps, variant):
    """Advance the chain `steps` iterations. Mutates everything in place
    except `arena`, which may be reallocated and is therefore returned
    along with the new arena end and RNG state."""
    m = eu.shape[0]
    s = rng_state
    for _ in range(steps):
        # steps 1-2: the doomed edge
        if variant == VARIANT_INCIDENT:
            while True:
                s, f = _rand(s)
                v = int64(f * n)
                if deg[v] > 0:
                    break
            s, f = _rand(s)
            j = arena[start[v] + int64(f * deg[v])]
        else:
            s, f = _rand(s)
            j = int64(f * m)
        # step 3: x uniform over all vertices
        s, f = _rand(s)
        x = int64(f * n)
        # step 4: y degree-proportional via uniform edge + uniform endpoint
        s, f = _rand(s)
        j2 = int64(f * m)
        s, f = _rand(s)
        y = eu[j2] if int64(f * 2) == 0 else ev[j2]
        # step 5: accept only if (x, y) is a fresh non-loop pair
        if x == y:
            continue
        a, b = (x, y) if x < y else (y, x)
        key_xy = a * n + b
        if key_xy in edge_index:
            continue

        uu = eu[j]
        vv = ev[j]
        # drop edge j from both adjacency segments (swap-remove)
        pu = epos_u[j]
        last = deg[uu] - 1
        moved = arena[start[uu] + last]
        arena[start[uu] + pu] = moved
        if moved != j:
            if eu[moved] == uu:
                epos_u[moved] = pu
            else:
                epos_v[moved] = pu
        deg[uu] = last
        pv = epos_v[j]
        last = deg[vv] - 1
        moved = arena[start[vv] + last]
        arena[start[vv] + pv] = moved
        if moved != j:
            if eu[moved] == vv:
                epos_u[moved] = pv
            else:
                epos_v[moved] = pv
        deg[vv] = last
        del edge_index[uu * n + vv]
        # backfill edge slot j from the tail slot, mirroring list swap-remove
        tail = m - 1
        if j != tail:
            tu = eu[tail]
            tv = ev[tail]
            eu[j] = tu
            ev[j] = tv
            epos_u[j] = epos_u[tail]
            epos_v[j] = epos_v[tail]
            edge_index[tu * n + tv] = j
            arena[start[tu] + epos_u[tail]] = j
            arena[start[tv] + epos_v[tail]] = j
        # append (a, b) in the freed tail slot
        eu[tail] = a
        ev[tail] = b
        edge_index[key_xy] = tail
        for side in range(2):
            w = a if side == 0 else b
            if deg[w] == cap[w]:
                # relocate w's segment to the arena tail with doubled capacity
                newcap = cap[w] * 2
                if arena_end + newcap > arena.shape[0]:
                    grown = np.empty(
                        max(arena.shape[0] * 2, arena_end + newcap), dtype=np.int64
                    )
                    grown[:arena_end] = arena[:arena_end]
                    arena = grown
                news = arena_end
                for i in range(deg[w]):
                    arena[news + i] = arena[start[w] + i]
                start[w] = news
                cap[w] = newcap
                arena_end = news + newcap
            if side == 0:
                epos_u[tail] = deg[w]
            else:
                epos_v[tail] = deg[w]
            arena[start[w] + deg[w]] = tail
            deg[w] += 1

    return arena, arena_end, s


@dataclass
class ChainState:
    """Array mirror of a Graph, ready to feed the jitted step loop."""

    n: int
    eu: np.ndarray
    ev: np.ndarray
    epos_u: np.ndarray
    epos_v: np.ndarray
    deg: np.ndarray
    arena: np.ndarray
    start: np.ndarray
    cap: np.ndarray
    arena_end: int
    edge_index: object

    @classmethod
    def from_graph(cls, g: Graph) -> "ChainState":
        n = g.n
        m = g.edge_count
        eu = np.empty(m, dtype=np.int64)
        ev = np.empty(m, dtype=np.int64)
        for j, (u, v) in enumerate(g.iter_edges()):
            eu[j] = u
            ev[j] = v
        deg = np.array(g.degrees(), dtype=np.int64)
        cap = deg + 4
        start = np.zeros(n, dtype=np.int64)
        np.cumsum(cap[:-1], out=start[1:])
        arena = np.full(int(cap.sum()), -1, dtype=np.int64)
        epos_u = np.empty(m, dtype=np.int64)
        epos_v = np.empty(m, dtype=np.int64)
        edge_index = _build_edge_index(n, eu, ev)
        # fill segments in the graph's own adjacency order so the array
        # layout matches the pure structure entry for entry
        for v in range(n):
            base = start[v]
            for i, u in enumerate(g._adj[v]):
                a, b = (u, v) if u < v else (v, u)
                j = g._edge_index[a * n + b]
                arena[base + i] = j
                if eu[j] == v:
                    epos_u[j] = i
                else:
                    epos_v[j] = i
        return cls(
            n=n, eu=eu, ev=ev, epos_u=epos_u, epos_v=epos_v, deg=deg,
            arena=arena, start=start, cap=cap, arena_end=int(cap.sum()),
            edge_index=edge_index,
        )

    def run(self, rng, steps: int, variant_code: int) -> None:
        """Advance `steps` iterations, consuming and updating rng's state."""
        if steps == 0:
            return
        arena, arena_end, state = _run_steps(
            self.n, self.eu, self.ev, self.epos_u, self.epos_v, self.deg,
            self.arena, self.start, self.cap, self.edge_index,
            self.arena_end, np.uint64(rng.getstate()), steps, variant_code,
        )
        self.arena = arena
        self.arena_end = int(arena_end)
        rng.setstate(int(state))

    def degree_counts(self) -> np.ndarray:
        return np.bincount(self.deg)

    def to_graph(self) -> Graph:
        """Rebuild a Graph with the exact edge-list and adjacency layout."""
        n = self.n
        g = Graph.__new__(Graph)
        g.n = n
        g._edges = [(int(u), int(v)) for u, v in zip(self.eu, self.ev)]
        g._edge_index = {u * n + v: j for j, (u, v) in enumerate(g._edges)}
        adj: list[list[int]] = []
        for v in range(n):
            base = int(self.start[v])
            row = []
            for i in range(int(self.deg[v])):
                j = int(self.arena[base + i])
                u = int(self.ev[j]) if int(self.eu[j]) == v else int(self.eu[j])
                row.append(u)
            adj.append(row)
        g._adj = adj
        g._adj_pos = [{u: i for i, u in enumerate(row)} for row in adj]
        g._degrees = [len(row) for row in adj]
        return g
