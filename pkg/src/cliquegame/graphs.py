"""Graphs, linear orderings, chordality machinery, and k-tree generators.

Vertex ids are dense integers 0..n-1.  Adjacency is stored as one bitmask
per vertex, which keeps neighborhood and clique queries cheap at the scales
this package targets (play graphs up to a few dozen vertices, generators up
to a few hundred).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphFormatError(ValueError):
    """Graph JSON violated the wire format; message carries the position."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable undirected simple graph over vertex ids 0..n-1."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"unknown vertex id {v} (n={self.n})")

    def neighbors_mask(self, v: int) -> int:
        self.check_vertex(v)
        return self.adj[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.neighbors_mask(v)))

    def degree(self, v: int) -> int:
        return self.neighbors_mask(v).bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            higher = self.adj[u] >> (u + 1) << (u + 1)
            out.extend((u, v) for v in bits(higher))
        return out

    @property
    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def is_clique(self, mask: int) -> bool:
        """True when the vertices of ``mask`` are pairwise adjacent."""
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            if rest & ~self.adj[low.bit_length() - 1]:
                return False
        return True

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()!r})"


def graph_to_json(g: Graph) -> dict:
    """Wire format: {"n": int, "edges": [[u, v], ...]} with u < v, sorted."""
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}


def graph_from_json(obj: object) -> Graph:
    """Parse the wire format, rejecting violations with a located message."""
    if not isinstance(obj, dict):
        raise GraphFormatError("graph: expected an object")
    if "n" not in obj:
        raise GraphFormatError("graph: missing field 'n'")
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise GraphFormatError("graph.n: expected a nonnegative integer")
    raw = obj.get("edges", [])
    if not isinstance(raw, list):
        raise GraphFormatError("graph.edges: expected a list")
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for i, e in enumerate(raw):
        where = f"graph.edges[{i}]"
        if (not isinstance(e, (list, tuple))) or len(e) != 2:
            raise GraphFormatError(f"{where}: expected a pair [u, v]")
        u, v = e
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in (u, v)):
            raise GraphFormatError(f"{where}: endpoints must be integers")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"{where}: vertex out of range for n={n}")
        if u >= v:
            raise GraphFormatError(f"{where}: endpoints must satisfy u < v, got [{u}, {v}]")
        if (u, v) in seen:
            raise GraphFormatError(f"{where}: duplicate edge [{u}, {v}]")
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, edges)


class LinearOrdering:
    """A permutation v_1..v_n of the vertex ids with its inverse map."""

    __slots__ = ("order", "position")

    def __init__(self, order: Iterable[int]):
        seq = tuple(order)
        n = len(seq)
        pos = [-1] * n
        for i, v in enumerate(seq):
            if not (0 <= v < n):
                raise ValueError(f"ordering entry {v} out of range for n={n}")
            if pos[v] != -1:
                raise ValueError(f"ordering repeats vertex {v}")
            pos[v] = i
        object.__setattr__(self, "order", seq)
        object.__setattr__(self, "position", tuple(pos))

    def __setattr__(self, name, value):
        raise AttributeError("LinearOrdering is immutable")

    def __len__(self):
        return len(self.order)

    def position_of(self, v: int) -> int:
        return self.position[v]

    def less(self, x: int, y: int) -> bool:
        return self.position[x] < self.position[y]

    def least(self, mask: int) -> int | None:
        """Least vertex of a nonzero bitmask under this ordering, else None."""
        best = None
        best_pos = len(self.order)
        for v in bits(mask):
            p = self.position[v]
            if p < best_pos:
                best, best_pos = v, p
        return best

    def reversed(self) -> "LinearOrdering":
        return LinearOrdering(reversed(self.order))

    def __eq__(self, other):
        return isinstance(other, LinearOrdering) and self.order == other.order

    def __hash__(self):
        return hash(self.order)

    def __repr__(self):
        return f"LinearOrdering({list(self.order)!r})"


class OrderedGraph:
    """Graph plus linear ordering; parents are the lower-ordered neighbors."""

    __slots__ = ("graph", "ordering", "parents_mask", "children_mask")

    def __init__(self, graph: Graph, ordering: LinearOrdering):
        if len(ordering) != graph.n:
            raise ValueError(
                f"ordering has {len(ordering)} entries for a graph on {graph.n} vertices"
            )
        pos = ordering.position
        parents = []
        children = []
        for v in range(graph.n):
            pm = 0
            for u in bits(graph.adj[v]):
                if pos[u] < pos[v]:
                    pm |= 1 << u
            parents.append(pm)
            children.append(graph.adj[v] ^ pm)
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "ordering", ordering)
        object.__setattr__(self, "parents_mask", tuple(parents))
        object.__setattr__(self, "children_mask", tuple(children))

    def __setattr__(self, name, value):
        raise AttributeError("OrderedGraph is immutable")

    def parents(self, v: int) -> set[int]:
        self.graph.check_vertex(v)
        return set(bits(self.parents_mask[v]))

    def children(self, v: int) -> set[int]:
        self.graph.check_vertex(v)
        return set(bits(self.children_mask[v]))

    def major_parent(self, v: int) -> int | None:
        """Least parent of v under the ordering, or None when v has none."""
        self.graph.check_vertex(v)
        return self.ordering.least(self.parents_mask[v])

    def max_parents(self) -> int:
        return max((m.bit_count() for m in self.parents_mask), default=0)

    def is_simplicial(self) -> bool:
        """True when every vertex's closed back-neighborhood is a clique."""
        return all(self.graph.is_clique(pm) for pm in self.parents_mask)


def is_simplicial_ordering(og: OrderedGraph) -> bool:
    return og.is_simplicial()


def mcs_order(g: Graph) -> list[int]:
    """Maximum-cardinality search visit order, lowest-id tie-break.

    For a chordal graph the visit order is simplicial (each vertex's
    already-visited neighbors form a clique); for other graphs it is just a
    deterministic ordering.
    """
    n = g.n
    weight = [0] * n
    visited = 0
    order = []
    for _ in range(n):
        best = -1
        best_w = -1
        for v in range(n):
            if not (visited >> v & 1) and weight[v] > best_w:
                best, best_w = v, weight[v]
        order.append(best)
        visited |= 1 << best
        for u in bits(g.adj[best] & ~visited):
            weight[u] += 1
    return order


def simplicial_ordering(g: Graph) -> LinearOrdering | None:
    """An ordering whose closed back-neighborhoods are cliques, or None.

    Succeeds exactly on chordal graphs; deterministic for a fixed graph.
    """
    ordering = LinearOrdering(mcs_order(g))
    og = OrderedGraph(g, ordering)
    return ordering if og.is_simplicial() else None


def is_chordal(g: Graph) -> bool:
    return simplicial_ordering(g) is not None


def has_clique(g: Graph, mask: int, size: int) -> bool:
    """True when ``mask`` contains a clique on ``size`` vertices."""
    if size <= 0:
        return True
    if size == 1:
        return mask != 0
    adj = g.adj
    if size == 2:
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            if adj[low.bit_length() - 1] & rest:
                return True
        return False

    def rec(cand: int, need: int) -> bool:
        if need == 1:
            return cand != 0
        while cand.bit_count() >= need:
            low = cand & -cand
            cand ^= low
            if rec(adj[low.bit_length() - 1] & cand, need - 1):
                return True
        return False

    return rec(mask, size)


def find_clique(g: Graph, mask: int, size: int) -> tuple[int, ...] | None:
    """A clique on ``size`` vertices inside ``mask``, or None."""
    if size <= 0:
        return ()
    adj = g.adj

    def rec(cand: int, need: int) -> tuple[int, ...] | None:
        if need == 0:
            return ()
        while cand.bit_count() >= need:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            sub = rec(adj[v] & cand, need - 1)
            if sub is not None:
                return (v,) + sub
        return None

    return rec(mask, size)


def clique_number(g: Graph) -> int:
    """Exact clique number; linear-time via orderings on chordal inputs."""
    if g.n == 0:
        return 0
    ordering = simplicial_ordering(g)
    if ordering is not None:
        og = OrderedGraph(g, ordering)
        return og.max_parents() + 1
    return _max_clique_size(g)


def _max_clique_size(g: Graph) -> int:
    adj = g.adj
    best = 1

    def grow(cand: int, size: int) -> None:
        nonlocal best
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            if size + 1 > best:
                best = size + 1
            grow(adj[v] & cand, size + 1)

    grow((1 << g.n) - 1, 0)
    return best


@dataclass(frozen=True)
class PartialKTreeWitness:
    """A sparse graph together with the chordal supergraph that certifies it.

    ``g`` is the graph to be played on; ``h`` is a chordal graph on the same
    vertex set containing every edge of ``g`` with clique number at most k+1.
    """

    g: Graph
    h: Graph
    k: int

    def validate(self) -> None:
        if self.g.n != self.h.n:
            raise ValueError("witness graphs must share one vertex set")
        for v in range(self.g.n):
            if self.g.adj[v] & ~self.h.adj[v]:
                raise ValueError(f"vertex {v} has an edge missing from the supergraph")
        if not is_chordal(self.h):
            raise ValueError("witness supergraph is not chordal")
        w = clique_number(self.h)
        if w > self.k + 1:
            raise ValueError(f"supergraph clique number {w} exceeds k+1={self.k + 1}")


def witness_to_json(w: PartialKTreeWitness) -> dict:
    out = graph_to_json(w.g)
    out["h_edges"] = [[u, v] for u, v in w.h.edges()]
    out["k"] = w.k
    return out


def witness_from_json(obj: object) -> PartialKTreeWitness:
    g = graph_from_json(obj)
    assert isinstance(obj, dict)
    if "h_edges" not in obj:
        raise GraphFormatError("witness: missing field 'h_edges'")
    if "k" not in obj:
        raise GraphFormatError("witness: missing field 'k'")
    k = obj["k"]
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise GraphFormatError("witness.k: expected a positive integer")
    h = graph_from_json({"n": obj["n"], "edges": obj["h_edges"]})
    try:
        # h must contain g; rebuild the message with a located prefix.
        w = PartialKTreeWitness(g, h, k)
        w.validate()
    except ValueError as exc:
        raise GraphFormatError(f"witness: {exc}") from exc
    return w


def _ktree(rng: random.Random, k: int, n: int) -> Graph:
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if n < k + 1:
        raise ValueError(f"need at least k+1={k + 1} vertices, got {n}")
    edges = [(u, v) for u in range(k + 1) for v in range(u + 1, k + 1)]
    base = frozenset(range(k + 1))
    # Every k-subset of the base clique seeds the attachment pool.
    cliques = [base - {v} for v in range(k + 1)]
    for new in range(k + 1, n):
        target = cliques[rng.randrange(len(cliques))]
        edges.extend((min(u, new), max(u, new)) for u in sorted(target))
        for drop in sorted(target):
            cliques.append((target - {drop}) | {new})
    return Graph(n, edges)


def generate_ktree(k: int, n: int, seed) -> Graph:
    """Random k-tree: K_{k+1} grown by attaching vertices to k-cliques.

    Chordal with clique number k+1 and exactly C(k+1,2) + (n-k-1)*k edges;
    deterministic for a fixed seed.
    """
    return _ktree(random.Random(seed), k, n)


def generate_partial_ktree(
    k: int, n: int, keep_prob: float, seed
) -> PartialKTreeWitness:
    """Witness pair (g, h): h a random k-tree, g a random spanning subgraph.

    Each edge of h survives into g independently with ``keep_prob``.
    """
    if not 0.0 <= keep_prob <= 1.0:
        raise ValueError(f"keep_prob must lie in [0, 1], got {keep_prob}")
    rng = random.Random(seed)
    h = _ktree(rng, k, n)
    kept = [e for e in h.edges() if rng.random() < keep_prob]
    return PartialKTreeWitness(Graph(n, kept), h, k)
