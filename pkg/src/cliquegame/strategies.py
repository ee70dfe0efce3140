"""Move-producing agents: activation-strategy Alice and adversarial Bobs.

Alice's turn has two stages.  Search: activate Bob's vertex, then walk the
mother chain (least uncolored closed back-neighbor), activating inactive
vertices until an active one is reached; if Bob's vertex has no mother, fall
back to the least uncolored vertex overall.  Coloring: give the reached
vertex a legal color chosen by a pluggable policy.
"""

from __future__ import annotations

import random
from typing import Callable, NamedTuple, Sequence

from .engine import (
    ALICE,
    ActivationFailure,
    GameConfig,
    GameState,
    Move,
    RuleViolation,
)
from .graphs import (
    LinearOrdering,
    OrderedGraph,
    bits,
    has_clique,
    mcs_order,
    simplicial_ordering,
)


class TurnPlan(NamedTuple):
    """One Alice turn: vertices to activate (in order), then the move."""

    activations: tuple[int, ...]
    move: Move


def mother(og: OrderedGraph, state: GameState, x: int) -> int | None:
    """Least uncolored vertex of x's closed back-neighborhood, or None.

    Recomputed from the current position: x qualifies while uncolored, and
    the result moves as vertices get colored.
    """
    og.graph.check_vertex(x)
    return og.ordering.least((og.parents_mask[x] | (1 << x)) & state.uncolored)


ColorPolicy = Callable[[GameState, int, list[int]], int]


def least_index_policy(state: GameState, vertex: int, legal: list[int]) -> int:
    return legal[0]


COLOR_POLICIES: dict[str, ColorPolicy] = {
    "least-index": least_index_policy,
}


class ActivationAlice:
    """Alice agent built on a simplicial ordering of her strategy graph.

    The ordering defaults to the graph's computed simplicial ordering (or a
    deterministic search order when the graph is not chordal); pass
    ``ordering`` to pin a specific one, e.g. for scripted fixtures.
    """

    def __init__(
        self,
        color_policy: str | ColorPolicy = "least-index",
        ordering: LinearOrdering | None = None,
    ):
        if isinstance(color_policy, str):
            color_policy = COLOR_POLICIES[color_policy]
        self.color_policy = color_policy
        self._fixed_ordering = ordering
        self.ordered: OrderedGraph | None = None

    def reset(self, config: GameConfig, seed=None) -> None:
        graph = config.strategy_graph or config.play_graph
        ordering = self._fixed_ordering
        if ordering is None:
            ordering = simplicial_ordering(graph) or LinearOrdering(mcs_order(graph))
        self.ordered = OrderedGraph(graph, ordering)

    def take_turn(self, state: GameState, bob_move: Move | None) -> TurnPlan:
        if bob_move is None:
            return self.first_move(state)
        return self.respond(state, bob_move.vertex)

    def first_move(self, state: GameState) -> TurnPlan:
        """Activate and color the least vertex of the ordering."""
        v = self.ordered.ordering.order[0]
        activations = () if state.is_active(v) else (v,)
        return TurnPlan(activations, self._colored(state, v))

    def respond(self, state: GameState, bob_vertex: int) -> TurnPlan:
        """Search stage then coloring stage, as one turn plan.

        Bob's vertex is already active (coloring activates); re-activating
        it is a no-op, so the chain starts at its mother.
        """
        og = self.ordered
        activations: list[int] = []
        activated = 0
        x = mother(og, state, bob_vertex)
        if x is None:
            u = og.ordering.least(state.uncolored)
            if not state.is_active(u):
                activations.append(u)
        else:
            while not (state.active | activated) >> x & 1:
                activations.append(x)
                activated |= 1 << x
                x = mother(og, state, x)
            u = x
        return TurnPlan(tuple(activations), self._colored(state, u))

    def _colored(self, state: GameState, u: int) -> Move:
        legal = state.legal_colors(u)
        if not legal:
            raise ActivationFailure(u)
        return Move(u, self.color_policy(state, u, legal))


class RandomBob:
    """Uniformly random legal (vertex, color) pair."""

    def __init__(self, seed=None):
        self._seed = seed
        self.rng = random.Random(seed)

    def reset(self, config: GameConfig, seed=None) -> None:
        self.rng = random.Random(self._seed if self._seed is not None else seed)

    def choose(self, state: GameState) -> Move:
        moves = state.legal_moves()
        return moves[self.rng.randrange(len(moves))]


class CliqueThreatBob:
    """Greedy adversary that shrinks other vertices' palettes.

    Scores each legal move by (vertices left with an empty palette, legal
    colors removed across uncolored vertices) and takes the lexicographic
    maximum; ties break toward the lowest (vertex, color).  An immediately
    winning move therefore always outranks mere shrinking.
    """

    def choose(self, state: GameState) -> Move:
        g = state.config.play_graph
        k = state.config.k
        legal_map = state.legal_color_map()
        best: Move | None = None
        best_score = (-1, -1)
        for v in bits(state.uncolored):
            for a in legal_map[v]:
                class_mask = state.class_masks[a - 1]
                stuck = removed = 0
                for w in bits(g.adj[v] & state.uncolored):
                    lw = legal_map[w]
                    if a in lw and has_clique(
                        g, g.adj[w] & g.adj[v] & class_mask, k - 1
                    ):
                        removed += 1
                        if len(lw) == 1:
                            stuck += 1
                score = (stuck, removed)
                if score > best_score:
                    best, best_score = Move(v, a), score
        if best is None:
            raise RuleViolation("no legal move anywhere")
        return best


class ScriptedBob:
    """Bob that replays a fixed move list.

    Entries whose vertex is already colored or whose color has become
    illegal are skipped; after the script runs out, play falls back to the
    lowest legal (vertex, color).
    """

    def __init__(self, script: Sequence[tuple[int, int]]):
        self.script = [Move(v, a) for v, a in script]
        self._next = 0

    def reset(self, config: GameConfig, seed=None) -> None:
        self._next = 0

    def choose(self, state: GameState) -> Move:
        while self._next < len(self.script):
            mv = self.script[self._next]
            self._next += 1
            if not state.is_colored(mv.vertex) and state.is_color_legal(
                mv.vertex, mv.color
            ):
                return mv
        for v in bits(state.uncolored):
            legal = state.legal_colors(v)
            if legal:
                return Move(v, legal[0])
        raise RuleViolation("no legal move anywhere")


class MinimaxBob:
    """Perfect adversary: plays into a Bob-winning subtree when one exists,
    else the lowest legal (vertex, color)."""

    def __init__(self, budget: int | None = None):
        self.budget = budget

    def choose(self, state: GameState) -> Move:
        from .solver import GameSolver

        cfg = state.config
        solver = GameSolver(cfg.play_graph, cfg.k, cfg.c, budget=self.budget)
        fallback: Move | None = None
        for v in bits(state.uncolored):
            for a in state.legal_colors(v):
                masks = list(state.class_masks)
                masks[a - 1] |= 1 << v
                if fallback is None:
                    fallback = Move(v, a)
                if not solver.alice_wins_from(masks, ALICE):
                    return Move(v, a)
        if fallback is None:
            raise RuleViolation("no legal move anywhere")
        return fallback


def bob_from_spec(spec: dict, seed=None) -> object:
    """Instantiate a Bob from a config-table spec like {"type": "random"}."""
    kind = spec.get("type")
    if kind == "random":
        return RandomBob(spec.get("seed", seed))
    if kind == "clique-threat":
        return CliqueThreatBob()
    if kind == "minimax":
        return MinimaxBob(budget=spec.get("budget"))
    if kind == "scripted":
        return ScriptedBob([tuple(m) for m in spec["script"]])
    raise ValueError(f"unknown bob strategy {kind!r}")


def alice_from_spec(spec: dict) -> ActivationAlice:
    kind = spec.get("type", "activation")
    if kind != "activation":
        raise ValueError(f"unknown alice strategy {kind!r}")
    return ActivationAlice(color_policy=spec.get("color_policy", "least-index"))
