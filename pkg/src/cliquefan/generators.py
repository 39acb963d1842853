"""Deterministic graph constructions: Turán graphs, clique fans, the
complete-multipartite lower-bound construction, and seeded random graphs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph


@dataclass(frozen=True)
class FanShape:
    """``k`` cliques of order ``r`` sharing exactly one vertex."""

    k: int
    r: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("fan needs at least one clique")
        if self.r < 2:
            raise ValueError("clique order must be at least 2")

    @property
    def vertex_count(self) -> int:
        return (self.r - 1) * self.k + 1


@dataclass(frozen=True)
class TupleShape:
    """Base clique of ``len(ks)`` vertices, the i-th carrying ``ks[i]``
    disjoint cliques of order ``2r + 1`` through it."""

    ks: tuple[int, ...]
    r: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "ks", tuple(self.ks))
        if len(self.ks) < 1:
            raise ValueError("base must have at least one vertex")
        if any(k < 0 for k in self.ks):
            raise ValueError("blade counts must be nonnegative")
        if any(a < b for a, b in zip(self.ks, self.ks[1:])):
            raise ValueError("blade counts must be non-increasing")
        if self.r < 1:
            raise ValueError("r must be positive")

    @property
    def vertex_count(self) -> int:
        return len(self.ks) + 2 * self.r * sum(self.ks)


def turan_graph(n: int, r: int) -> Graph:
    """Balanced complete r-partite graph; vertex v sits in part v mod r."""
    if r < 1:
        raise ValueError("need at least one part")
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    full = (1 << n) - 1
    part_masks = [0] * r
    for v in range(n):
        part_masks[v % r] |= 1 << v
    masks = [full ^ part_masks[v % r] for v in range(n)]
    sizes = [part_masks[p].bit_count() for p in range(r)]
    m = (n * n - sum(s * s for s in sizes)) // 2
    return Graph._from_masks(n, masks, m)


def fan_graph(shape: FanShape) -> tuple[Graph, int]:
    """Fan with the given shape; returns the graph and its center (always 0)."""
    k, r = shape.k, shape.r
    edges = []
    for j in range(k):
        blade = range(1 + j * (r - 1), 1 + (j + 1) * (r - 1))
        for v in blade:
            edges.append((0, v))
        for a in blade:
            for b in blade:
                if a < b:
                    edges.append((a, b))
    return Graph(shape.vertex_count, edges), 0


def generalized_fan(shape: TupleShape) -> tuple[Graph, tuple[int, ...]]:
    """Base clique with per-vertex fans of odd cliques K_{2r+1}.

    Base vertices are 0..m-1; blade vertices follow in allocation order.
    Returns the graph and the base.
    """
    m = len(shape.ks)
    blade_size = 2 * shape.r
    edges = []
    for a in range(m):
        for b in range(a + 1, m):
            edges.append((a, b))
    nxt = m
    for center, count in enumerate(shape.ks):
        for _ in range(count):
            blade = range(nxt, nxt + blade_size)
            nxt += blade_size
            for v in blade:
                edges.append((center, v))
            for a in blade:
                for b in blade:
                    if a < b:
                        edges.append((a, b))
    return Graph(shape.vertex_count, edges), tuple(range(m))


# Catalogued triangle-free part graphs for the lower-bound construction.
# Each atom lists its order, edge set and exact independence number; a
# part of size s is filled with s // order disjoint copies.
_C5_EDGES = ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4))
_C13_EDGES = tuple(
    sorted({tuple(sorted((i, (i + d) % 13))) for i in range(13) for d in (1, 5)})
)

PART_CATALOG: dict[str, dict] = {
    "c5": {"order": 5, "edges": _C5_EDGES, "alpha": 2},
    "c13-power": {"order": 13, "edges": _C13_EDGES, "alpha": 4},
    "empty": {"order": 1, "edges": (), "alpha": 1},
}


def part_sizes(n: int, r: int) -> list[int]:
    """Balanced part sizes; remainder vertices go to the first parts."""
    q, rem = divmod(n, r)
    return [q + 1 if i < rem else q for i in range(r)]


def catalogued_alpha(part_key: str, size: int) -> int:
    """Exact independence number of one filled part of the given size."""
    if part_key.startswith("tf-process:"):
        raise ValueError("triangle-free process parts have no catalogued alpha; measure it")
    atom = PART_CATALOG[part_key]
    if size % atom["order"]:
        raise ValueError(f"part size {size} incompatible with catalogued graph {part_key!r}")
    return (size // atom["order"]) * atom["alpha"]


def rt_lower_construction(n: int, r: int, part_key: str = "c5") -> Graph:
    """Complete r-partite graph with a triangle-free graph inside each part.

    Parts are contiguous vertex ranges. Intra-part graphs come from the
    catalog (disjoint copies of the named atom) or from the seeded
    triangle-free process via key ``tf-process:<seed>``. The result has
    no clique larger than 2r, hence contains no fan of odd cliques
    K_{2r+1}, while keeping at least the full between-part edge count.
    """
    if r < 2:
        raise ValueError("need at least two parts")
    sizes = part_sizes(n, r)
    edges: list[tuple[int, int]] = []
    start = 0
    starts = []
    for s in sizes:
        starts.append(start)
        start += s
    # Complete join between distinct parts.
    for i in range(r):
        for j in range(i + 1, r):
            for a in range(starts[i], starts[i] + sizes[i]):
                for b in range(starts[j], starts[j] + sizes[j]):
                    edges.append((a, b))
    # Fill each part.
    for idx, (off, s) in enumerate(zip(starts, sizes)):
        if part_key.startswith("tf-process:"):
            seed = int(part_key.split(":", 1)[1])
            sample = triangle_free_process(s, seed + idx)
            edges.extend((off + u, off + v) for u, v in sample.edges())
            continue
        if part_key not in PART_CATALOG:
            raise ValueError(f"unknown part graph {part_key!r}")
        atom = PART_CATALOG[part_key]
        if s % atom["order"]:
            raise ValueError(
                f"part size {s} incompatible with catalogued graph {part_key!r}"
            )
        for copy in range(s // atom["order"]):
            base = off + copy * atom["order"]
            edges.extend((base + u, base + v) for u, v in atom["edges"])
    return Graph(n, edges)


def gnp_random(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p) from a seeded PCG64 stream.

    Pairs are drawn in lexicographic order, one row of the upper
    triangle at a time, so a seed pins the graph bit for bit.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    rng = np.random.Generator(np.random.PCG64(seed))
    adj = np.zeros((n, n), dtype=bool)
    for i in range(n - 1):
        adj[i, i + 1:] = rng.random(n - 1 - i) < p
    adj |= adj.T
    masks = [
        int.from_bytes(np.packbits(adj[i], bitorder="little").tobytes(), "little")
        for i in range(n)
    ]
    return Graph._from_masks(n, masks, int(adj.sum()) // 2)


def triangle_free_process(n: int, seed: int) -> Graph:
    """Seeded triangle-free process: visit all pairs in a random order,
    keeping each edge that closes no triangle."""
    rng = np.random.Generator(np.random.PCG64(seed))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    order = rng.permutation(len(pairs))
    adj = [0] * n
    size = 0
    for idx in order:
        u, v = pairs[idx]
        if adj[u] & adj[v]:
            continue
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        size += 1
    return Graph._from_masks(n, adj, size)
