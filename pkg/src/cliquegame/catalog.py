"""Small-graph catalogs: canonical adjacency forms and exhaustive
enumeration of connected chordal graphs.

Graphs on n vertices are encoded as bitmasks over the C(n,2) vertex pairs in
lexicographic order; the canonical form is the minimum mask over all vertex
relabelings.  Intended for n up to about 7.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .graphs import Graph, bits


def edge_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def edge_mask_of(g: Graph) -> int:
    index = {p: i for i, p in enumerate(edge_pairs(g.n))}
    mask = 0
    for e in g.edges():
        mask |= 1 << index[e]
    return mask


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    pairs = edge_pairs(n)
    return Graph(n, [pairs[i] for i in bits(mask)])


def all_graphs(n: int):
    """Every labeled graph on n vertices (2^C(n,2) of them)."""
    for mask in range(1 << len(edge_pairs(n))):
        yield graph_from_edge_mask(n, mask)


@lru_cache(maxsize=None)
def _perm_edge_maps(n: int) -> tuple[tuple[int, ...], ...]:
    pairs = edge_pairs(n)
    index = {p: i for i, p in enumerate(pairs)}
    maps = []
    for perm in permutations(range(n)):
        maps.append(
            tuple(
                index[(perm[u], perm[v])] if perm[u] < perm[v] else index[(perm[v], perm[u])]
                for u, v in pairs
            )
        )
    return tuple(maps)


def canonical_edge_mask(g: Graph) -> int:
    """Minimum edge mask over all vertex relabelings (isomorphism invariant)."""
    mask = edge_mask_of(g)
    best = mask
    for emap in _perm_edge_maps(g.n):
        m = 0
        for i in bits(mask):
            m |= 1 << emap[i]
        if m < best:
            best = m
    return best


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        for v in bits(frontier):
            reach |= g.adj[v]
        frontier = reach & ~seen
        seen |= reach
    return seen == (1 << g.n) - 1


def all_clique_masks(g: Graph) -> list[int]:
    """Every nonempty clique of g, as vertex masks."""
    out: list[int] = []

    def grow(mask: int, cand: int) -> None:
        while cand:
            low = cand & -cand
            cand ^= low
            grown = mask | low
            out.append(grown)
            grow(grown, g.adj[low.bit_length() - 1] & cand)

    grow(0, (1 << g.n) - 1)
    return out


def connected_chordal_catalog(max_n: int) -> list[Graph]:
    """All connected chordal graphs with 1..max_n vertices, one per
    isomorphism class, in canonical form.

    Built by simplicial-vertex augmentation: every connected chordal graph
    on n vertices is a connected chordal graph on n-1 vertices plus one new
    vertex attached to a nonempty clique.
    """
    by_n: dict[int, list[Graph]] = {1: [Graph(1)]}
    for n in range(2, max_n + 1):
        seen: set[int] = set()
        for prev in by_n[n - 1]:
            base = prev.edges()
            for q in all_clique_masks(prev):
                g = Graph(n, base + [(u, n - 1) for u in bits(q)])
                seen.add(canonical_edge_mask(g))
        by_n[n] = [graph_from_edge_mask(n, m) for m in sorted(seen)]
    return [g for n in range(1, max_n + 1) for g in by_n.get(n, [])]
