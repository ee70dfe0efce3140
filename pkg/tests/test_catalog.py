import random

from cliquegame.catalog import (
    all_clique_masks,
    all_graphs,
    canonical_edge_mask,
    connected_chordal_catalog,
    edge_mask_of,
    graph_from_edge_mask,
    is_connected,
)
from cliquegame.graphs import Graph, bits, is_chordal
from oracles import pairwise_adjacent


class TestCanonicalForm:
    def test_invariant_under_relabeling(self):
        rng = random.Random(4)
        for _ in range(80):
            n = rng.randint(1, 6)
            g = Graph(
                n,
                [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5],
            )
            perm = list(range(n))
            rng.shuffle(perm)
            relabeled = Graph(
                n,
                [tuple(sorted((perm[u], perm[v]))) for u, v in g.edges()],
            )
            assert canonical_edge_mask(g) == canonical_edge_mask(relabeled)

    def test_mask_roundtrip(self):
        g = Graph(4, [(0, 2), (1, 3)])
        assert graph_from_edge_mask(4, edge_mask_of(g)) == g


class TestConnectivity:
    def test_connected_cases(self):
        assert is_connected(Graph(1))
        assert is_connected(Graph(3, [(0, 1), (1, 2)]))
        assert not is_connected(Graph(3, [(0, 1)]))
        assert is_connected(Graph(0))


class TestCliqueEnumeration:
    def test_all_cliques_are_cliques_and_complete(self):
        g = Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
        masks = all_clique_masks(g)
        assert len(set(masks)) == len(masks)
        for m in masks:
            assert pairwise_adjacent(g, list(bits(m)))
        # every singleton, every edge, and the triangle appear
        assert len(masks) == 4 + 4 + 1


class TestCatalog:
    def test_matches_brute_force_up_to_5(self):
        catalog = connected_chordal_catalog(5)
        by_n = {}
        for g in catalog:
            by_n.setdefault(g.n, set()).add(canonical_edge_mask(g))
        for n in range(1, 6):
            brute = {
                canonical_edge_mask(g)
                for g in all_graphs(n)
                if is_connected(g) and is_chordal(g)
            }
            assert by_n.get(n, set()) == brute

    def test_entries_are_connected_chordal_canonical(self):
        seen = set()
        for g in connected_chordal_catalog(6):
            assert is_connected(g)
            assert is_chordal(g)
            cf = canonical_edge_mask(g)
            assert edge_mask_of(g) == cf
            assert (g.n, cf) not in seen
            seen.add((g.n, cf))
