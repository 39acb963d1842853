"""Complete subgraph search and embedding verification.

Everything here uses non-induced semantics: extra edges in the host never
invalidate a witness. Search order is fixed (ascending center, ascending
blade vertices), so results are reproducible and the first witness found
is always the lexicographically smallest one the search visits.
"""

from __future__ import annotations

from dataclasses import dataclass

from .generators import FanShape
from .graphs import Graph, induced_subgraph, is_clique, mask_from
from .invariants import max_matching


@dataclass(frozen=True)
class CliqueWitness:
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class FanEmbedding:
    """Center plus pairwise disjoint blades; blade + center must be a clique."""

    center: int
    blades: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class GeneralizedFanEmbedding:
    """Base clique plus, for each base vertex, its blades of size 2r.

    ``blades_by_center[i]`` holds the blades of ``base[i]``; the blade
    counts sorted non-increasingly form the embedding's tuple.
    """

    base: tuple[int, ...]
    blades_by_center: tuple[tuple[tuple[int, ...], ...], ...]

    def fan_tuple(self) -> tuple[int, ...]:
        return tuple(sorted((len(b) for b in self.blades_by_center), reverse=True))


def find_clique(g: Graph, q: int) -> CliqueWitness | None:
    """Lexicographically first q-clique, or None.

    Plain backtracking over ascending ids, pruned only by candidate
    counts, which keeps the visiting order obvious and reproducible.
    """
    if q < 1:
        raise ValueError("clique size must be positive")
    if q > g.n:
        return None
    if q == 1:
        return CliqueWitness((0,))
    adj = g._adj
    prefix: list[int] = []

    def rec(cand: int) -> bool:
        if len(prefix) == q:
            return True
        if len(prefix) + cand.bit_count() < q:
            return False
        m = cand
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            prefix.append(v)
            if rec(m & adj[v]):
                return True
            prefix.pop()
        return False

    if rec((1 << g.n) - 1):
        return CliqueWitness(tuple(prefix))
    return None


def _cliques_within(adj: tuple[int, ...], avail: int, size: int):
    """Yield all ``size``-cliques inside the ``avail`` mask as ascending
    tuples, in lexicographic order."""
    if size == 0:
        yield ()
        return
    prefix: list[int] = []

    def rec(cand: int):
        if len(prefix) == size:
            yield tuple(prefix)
            return
        m = cand
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if len(prefix) + 1 + (m & adj[v]).bit_count() >= size:
                prefix.append(v)
                yield from rec(m & adj[v])
                prefix.pop()

    yield from rec(avail)


def _triangle_fan_at(g: Graph, center: int, k: int) -> tuple[int, FanEmbedding | None]:
    """Matching number of the neighborhood of ``center`` and, when it
    reaches ``k``, the fan of k triangles through ``center``."""
    nbhd = g.neighbors(center)
    sub, mapping = induced_subgraph(g, nbhd)
    back = {i: v for v, i in mapping.items()}
    mm = max_matching(sub)
    if len(mm) < k:
        return len(mm), None
    blades = sorted(tuple(sorted((back[a], back[b]))) for a, b in mm.edges)
    return len(mm), FanEmbedding(center, tuple(blades[:k]))


def find_fan(g: Graph, shape: FanShape) -> FanEmbedding | None:
    """Complete search for a fan of ``shape.k`` cliques of order ``shape.r``.

    For triangles the per-center test is a maximum matching in the
    neighborhood (k disjoint edges there are exactly k triangles through
    the center). For other clique orders the search backtracks over
    disjoint (r-1)-cliques inside the neighborhood, ordering blade
    families by their smallest vertices.
    """
    k, r = shape.k, shape.r
    if shape.vertex_count > g.n:
        return None
    if r == 3:
        for x in range(g.n):
            _, emb = _triangle_fan_at(g, x, k)
            if emb is not None:
                return emb
        return None
    adj = g._adj
    for x in range(g.n):
        if g.degree(x) < (r - 1) * k:
            continue
        blades = _disjoint_blades(adj, g.neighbor_mask(x), r - 1, k, -1)
        if blades is not None:
            return FanEmbedding(x, tuple(blades))
    return None


def _disjoint_blades(
    adj: tuple[int, ...], avail: int, size: int, count: int, min_first: int
) -> list[tuple[int, ...]] | None:
    if count == 0:
        return []
    floor = avail & ~((1 << (min_first + 1)) - 1) if min_first >= 0 else avail
    for c in _cliques_within(adj, floor, size):
        rest = _disjoint_blades(adj, avail & ~mask_from(c), size, count - 1, c[0])
        if rest is not None:
            return [c] + rest
    return None


def verify_fan(g: Graph, e: FanEmbedding, shape: FanShape) -> str | None:
    """None when the embedding is a valid fan of the given shape in ``g``,
    else the first violated constraint."""
    k, r = shape.k, shape.r
    if not 0 <= e.center < g.n:
        return f"center {e.center} out of range"
    if len(e.blades) != k:
        return f"wrong blade count: {len(e.blades)} != {k}"
    seen = {e.center}
    for blade in e.blades:
        if len(blade) != r - 1:
            return f"wrong blade size: {len(blade)} != {r - 1}"
        for v in blade:
            if not 0 <= v < g.n:
                return f"vertex {v} out of range"
            if v in seen:
                return f"duplicate vertex {v}"
            seen.add(v)
    for blade in e.blades:
        group = (e.center, *blade)
        for i, u in enumerate(group):
            for v in group[i + 1:]:
                if not g.has_edge(u, v):
                    return f"missing edge ({u}, {v})"
    return None


def verify_generalized_fan(g: Graph, e: GeneralizedFanEmbedding, r: int) -> str | None:
    """None when valid, else the first violated constraint.

    Blades must have size 2r, be pairwise disjoint and avoid the base,
    and form a clique of order 2r+1 together with their center; the base
    itself must be a clique.
    """
    if len(e.base) == 0:
        return "empty base"
    if len(set(e.base)) != len(e.base):
        return "duplicate vertex in base"
    for v in e.base:
        if not 0 <= v < g.n:
            return f"vertex {v} out of range"
    if len(e.blades_by_center) != len(e.base):
        return "blade lists misaligned with base"
    if not is_clique(g, e.base):
        return "base is not a clique"
    seen = set(e.base)
    for center, blades in zip(e.base, e.blades_by_center):
        for blade in blades:
            if len(blade) != 2 * r:
                return f"wrong blade size: {len(blade)} != {2 * r}"
            for v in blade:
                if not 0 <= v < g.n:
                    return f"vertex {v} out of range"
                if v in seen:
                    return f"duplicate vertex {v}"
                seen.add(v)
            group = (center, *blade)
            for i, u in enumerate(group):
                for v in group[i + 1:]:
                    if not g.has_edge(u, v):
                        return f"missing edge ({u}, {v})"
    return None
