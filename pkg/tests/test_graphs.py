import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquegame.graphs import (
    Graph,
    GraphFormatError,
    LinearOrdering,
    OrderedGraph,
    clique_number,
    generate_ktree,
    generate_partial_ktree,
    graph_from_json,
    graph_to_json,
    is_chordal,
    is_simplicial_ordering,
    simplicial_ordering,
    witness_from_json,
    witness_to_json,
)
from oracles import chordal_by_induced_cycles, max_clique_by_subsets

from cliquegame.fixtures import anchored_board, hub_threat_board


def complete_graph(n):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def random_graph(rng, n, p):
    return Graph(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    )


class TestGraph:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph(2, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            Graph(2, [(0, 2)])

    def test_adjacency_symmetric(self):
        g = Graph(3, [(0, 2)])
        assert g.has_edge(0, 2) and g.has_edge(2, 0)
        assert not g.has_edge(0, 1)

    def test_empty_graph_is_valid(self):
        g = Graph(0)
        assert g.edges() == []
        assert clique_number(g) == 0
        assert is_chordal(g)

    def test_immutable(self):
        g = Graph(1)
        with pytest.raises(AttributeError):
            g.n = 2


class TestGraphJson:
    def test_roundtrip(self):
        g = Graph(5, [(0, 1), (1, 4), (2, 3)])
        assert graph_from_json(graph_to_json(g)) == g

    @pytest.mark.parametrize(
        "payload, fragment",
        [
            ({"edges": []}, "missing field 'n'"),
            ({"n": -1}, "graph.n"),
            ({"n": 2, "edges": [[0]]}, "edges[0]"),
            ({"n": 2, "edges": [[1, 0]]}, "u < v"),
            ({"n": 2, "edges": [[0, 1], [0, 1]]}, "edges[1]: duplicate"),
            ({"n": 2, "edges": [[0, 5]]}, "out of range"),
            ({"n": 2, "edges": [["a", 1]]}, "integers"),
        ],
    )
    def test_rejects_with_position(self, payload, fragment):
        with pytest.raises(GraphFormatError, match=fragment.replace("[", r"\[")):
            graph_from_json(payload)


class TestOrderedGraph:
    def test_parents_path_example(self):
        # path a-b-c ordered a<b<c: parents(c) = {b}
        og = OrderedGraph(Graph(3, [(0, 1), (1, 2)]), LinearOrdering([0, 1, 2]))
        assert og.parents(2) == {1}
        assert og.children(0) == {1}

    def test_parents_anchored_fixture(self):
        board = anchored_board()
        og = OrderedGraph(board.graph, board.ordering)
        assert og.parents(board.hub) == {0, 2}

    def test_least_vertex_has_no_parents(self):
        board = anchored_board()
        og = OrderedGraph(board.graph, board.ordering)
        least = board.ordering.order[0]
        assert og.parents(least) == set()
        assert og.major_parent(least) is None

    def test_unknown_vertex_rejected(self):
        og = OrderedGraph(Graph(2, [(0, 1)]), LinearOrdering([0, 1]))
        with pytest.raises(ValueError, match="unknown vertex"):
            og.parents(5)

    def test_partition_of_neighborhood(self):
        rng = random.Random(3)
        for _ in range(200):
            n = rng.randint(1, 9)
            g = random_graph(rng, n, rng.random())
            order = list(range(n))
            rng.shuffle(order)
            og = OrderedGraph(g, LinearOrdering(order))
            for v in range(n):
                parents, children = og.parents(v), og.children(v)
                assert parents | children == set(g.neighbors(v))
                assert not parents & children

    def test_major_parent_against_scan(self):
        rng = random.Random(11)
        for seed in range(30):
            g = generate_ktree(3, rng.randint(4, 15), seed)
            order = list(range(g.n))
            rng.shuffle(order)
            ordering = LinearOrdering(order)
            og = OrderedGraph(g, ordering)
            for v in range(g.n):
                lower = [
                    u for u in g.neighbors(v)
                    if ordering.position_of(u) < ordering.position_of(v)
                ]
                expected = (
                    min(lower, key=ordering.position_of) if lower else None
                )
                assert og.major_parent(v) == expected

    def test_major_parent_anchored_fixture(self):
        board = anchored_board()
        og = OrderedGraph(board.graph, board.ordering)
        # far rim vertices 5 and 8 both hang from the hub
        assert og.major_parent(5) == board.hub
        assert og.major_parent(8) == board.hub


class TestSimplicialOrdering:
    def test_complete_graph_any_ordering(self):
        g = complete_graph(4)
        for perm in itertools.permutations(range(4)):
            assert is_simplicial_ordering(OrderedGraph(g, LinearOrdering(perm)))

    def test_c4_no_ordering_is_simplicial(self):
        g = cycle_graph(4)
        for perm in itertools.permutations(range(4)):
            assert not is_simplicial_ordering(OrderedGraph(g, LinearOrdering(perm)))

    def test_anchored_fixture_ordering(self):
        board = anchored_board()
        assert is_simplicial_ordering(OrderedGraph(board.graph, board.ordering))

    def test_single_vertex(self):
        assert simplicial_ordering(Graph(1)) == LinearOrdering([0])

    def test_empty_ordering_is_simplicial(self):
        assert simplicial_ordering(Graph(0)) == LinearOrdering([])

    def test_c4_returns_none(self):
        g = cycle_graph(4)
        assert simplicial_ordering(g) is None
        assert not chordal_by_induced_cycles(g)

    def test_deterministic(self):
        g = generate_ktree(2, 12, seed=5)
        assert simplicial_ordering(g) == simplicial_ordering(g)

    @pytest.mark.parametrize("k,n,seed", [(1, 8, 0), (2, 10, 1), (3, 12, 2), (4, 9, 3)])
    def test_ktree_roundtrip(self, k, n, seed):
        g = generate_ktree(k, n, seed)
        ordering = simplicial_ordering(g)
        assert ordering is not None
        assert is_simplicial_ordering(OrderedGraph(g, ordering))

    @given(st.integers(min_value=0, max_value=10_000))
    @settings(max_examples=60, deadline=None)
    def test_roundtrip_on_random_chordal(self, seed):
        rng = random.Random(seed)
        k = rng.randint(1, 4)
        g = generate_ktree(k, rng.randint(k + 1, 20), seed)
        ordering = simplicial_ordering(g)
        assert ordering is not None
        assert is_simplicial_ordering(OrderedGraph(g, ordering))


class TestIsChordal:
    def test_c4_false(self):
        assert not is_chordal(cycle_graph(4))

    def test_trees_true(self):
        rng = random.Random(2)
        for n in range(1, 12):
            edges = [(rng.randrange(v), v) for v in range(1, n)]
            assert is_chordal(Graph(n, edges))

    def test_matches_induced_cycle_oracle_small(self):
        # exhaustive n <= 5 here; the acceptance suite extends to n <= 6
        for n in range(5 + 1):
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
            for mask in range(1 << len(pairs)):
                g = Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
                assert is_chordal(g) == chordal_by_induced_cycles(g)

    def test_matches_oracle_on_deleted_partial_ktrees(self):
        rng = random.Random(9)
        for seed in range(60):
            w = generate_partial_ktree(3, rng.randint(4, 8), rng.random(), seed)
            assert is_chordal(w.g) == chordal_by_induced_cycles(w.g)


class TestCliqueNumber:
    def test_complete(self):
        assert clique_number(complete_graph(5)) == 5

    def test_hub_threat_fixture(self):
        assert clique_number(hub_threat_board().graph) == 3

    def test_generated_4tree(self):
        g = generate_ktree(4, 20, seed=3)
        assert clique_number(g) == 5

    def test_matches_brute_force(self):
        rng = random.Random(17)
        for _ in range(60):
            g = random_graph(rng, rng.randint(1, 8), rng.random())
            assert clique_number(g) == max_clique_by_subsets(g)

    def test_chordal_path_matches_brute_force(self):
        rng = random.Random(23)
        for seed in range(25):
            g = generate_ktree(rng.randint(1, 4), rng.randint(6, 12), seed)
            assert clique_number(g) == max_clique_by_subsets(g)


class TestMaxParents:
    def test_complete_graph(self):
        for k in (1, 2, 3):
            g = complete_graph(k + 1)
            og = OrderedGraph(g, LinearOrdering(range(k + 1)))
            assert og.max_parents() == k

    def test_edgeless(self):
        og = OrderedGraph(Graph(4), LinearOrdering(range(4)))
        assert og.max_parents() == 0

    def test_bounded_by_k_on_chordal_sweeps(self):
        # clique number 4 chordal graphs never exceed 3 parents
        for seed in range(300):
            g = generate_ktree(3, 5 + seed % 14, seed)
            ordering = simplicial_ordering(g)
            assert OrderedGraph(g, ordering).max_parents() <= 3


class TestGenerators:
    def test_1tree_is_tree(self):
        g = generate_ktree(1, 5, seed=0)
        assert g.num_edges == 4 and is_chordal(g)

    def test_base_clique_only(self):
        assert generate_ktree(2, 3, seed=0) == complete_graph(3)

    def test_seeded_3tree(self):
        g = generate_ktree(3, 12, seed=7)
        assert is_chordal(g)
        assert clique_number(g) == 4

    def test_edge_count_formula(self):
        rng = random.Random(5)
        for seed in range(60):
            k = rng.randint(1, 5)
            n = rng.randint(k + 1, 40)
            g = generate_ktree(k, n, seed)
            assert g.num_edges == k * (k + 1) // 2 + (n - k - 1) * k

    def test_determinism(self):
        assert generate_ktree(3, 15, seed=9) == generate_ktree(3, 15, seed=9)

    def test_too_few_vertices(self):
        with pytest.raises(ValueError, match="at least k\\+1"):
            generate_ktree(3, 3, seed=0)

    def test_partial_keep_all(self):
        w = generate_partial_ktree(2, 9, 1.0, seed=4)
        assert w.g == w.h

    def test_partial_keep_none(self):
        w = generate_partial_ktree(2, 9, 0.0, seed=4)
        assert w.g.num_edges == 0
        assert clique_number(w.h) == 3

    def test_partial_witness_invariants(self):
        w = generate_partial_ktree(2, 10, 0.6, seed=3)
        w.validate()
        assert is_chordal(w.h)
        assert clique_number(w.h) <= 3

    def test_partial_h_matches_plain_ktree(self):
        w = generate_partial_ktree(3, 14, 0.5, seed=11)
        assert w.h == generate_ktree(3, 14, seed=11)

    def test_bad_keep_prob(self):
        with pytest.raises(ValueError, match="keep_prob"):
            generate_partial_ktree(2, 5, 1.5, seed=0)


class TestWitnessJson:
    def test_roundtrip(self):
        w = generate_partial_ktree(2, 8, 0.5, seed=1)
        back = witness_from_json(witness_to_json(w))
        assert back.g == w.g and back.h == w.h and back.k == w.k

    def test_rejects_non_subgraph(self):
        obj = {"n": 3, "edges": [[0, 1], [1, 2]], "h_edges": [[0, 1]], "k": 1}
        with pytest.raises(GraphFormatError, match="missing from the supergraph"):
            witness_from_json(obj)

    def test_rejects_missing_k(self):
        obj = {"n": 3, "edges": [], "h_edges": [[0, 1]]}
        with pytest.raises(GraphFormatError, match="missing field 'k'"):
            witness_from_json(obj)
