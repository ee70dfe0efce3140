"""Exact winner determination via memoized AND/OR game-tree search.

Positions are canonicalized under color-label permutation (color classes
sorted by size then vertex set), which is sound because relabeling colors
never changes the winner.  A plain unmemoized recursion is kept alongside as
an independent oracle.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .engine import ALICE, BOB
from .graphs import Graph, bits, has_clique


class BudgetExceeded(Exception):
    """Search hit its node limit; partial results are never reported."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


def canonical_key(class_masks, turn: str) -> tuple:
    """Canonical form of a position under color permutation.

    Nonempty color classes are sorted by (size, vertex set); the uncolored
    set is the complement of their union, so classes plus turn determine the
    position up to color relabeling.
    """
    classes = sorted((m for m in class_masks if m), key=lambda m: (m.bit_count(), m))
    return (turn, tuple(classes))


class GameSolver:
    """Memoized perfect-play search for one (graph, k, c) configuration."""

    def __init__(
        self,
        graph: Graph,
        k: int,
        c: int,
        budget: int | None = None,
        symmetry_probe_rng: random.Random | None = None,
    ):
        if k < 1 or c < 1:
            raise ValueError("k and c must be at least 1")
        self.graph = graph
        self.k = k
        self.c = c
        self.budget = budget
        self.nodes = 0
        self._memo: dict[tuple, bool] = {}
        self._full = (1 << graph.n) - 1
        self._probe_rng = symmetry_probe_rng

    def alice_wins(self) -> bool:
        """Winner of the full game from the empty board, Alice to move."""
        return self.alice_wins_from([0] * self.c, ALICE)

    def alice_wins_from(self, class_masks, turn: str) -> bool:
        masks = list(class_masks)
        if len(masks) != self.c:
            raise ValueError(f"expected {self.c} color classes, got {len(masks)}")
        return self._solve(masks, turn)

    def _solve(self, masks: list[int], turn: str) -> bool:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceeded(self.nodes)
        colored = 0
        for m in masks:
            colored |= m
        uncolored = self._full ^ colored
        if not uncolored:
            return True
        key = canonical_key(masks, turn)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if self._probe_rng is not None and self._probe_rng.random() < 0.02:
            self._assert_symmetry(masks, turn, key)
        adj = self.graph.adj
        k = self.k
        g = self.graph
        options: list[tuple[int, list[int]]] = []
        stuck = False
        for v in bits(uncolored):
            legal = [
                a for a in range(self.c) if not has_clique(g, adj[v] & masks[a], k)
            ]
            if not legal:
                stuck = True
                break
            options.append((v, legal))
        if stuck:
            self._memo[key] = False
            return False
        want = turn == ALICE  # Alice needs one winning child, Bob needs all
        nxt = BOB if turn == ALICE else ALICE
        result = not want
        for v, legal in options:
            bit = 1 << v
            for a in legal:
                masks[a] |= bit
                child = self._solve(masks, nxt)
                masks[a] ^= bit
                if child == want:
                    result = want
                    break
            if result == want:
                break
        self._memo[key] = result
        return result

    def _assert_symmetry(self, masks, turn, key) -> None:
        perm = list(range(self.c))
        self._probe_rng.shuffle(perm)
        permuted = [masks[perm[a]] for a in range(self.c)]
        if canonical_key(permuted, turn) != key:
            raise AssertionError(
                "color-permuted position canonicalized differently: "
                f"{masks} vs {permuted}"
            )


def alice_wins(g: Graph, k: int, c: int, budget: int | None = None) -> bool:
    """True iff Alice wins the k-clique-relaxed c-coloring game on g
    under perfect play by both sides."""
    return GameSolver(g, k, c, budget=budget).alice_wins()


def brute_force_winner(g: Graph, k: int, c: int) -> bool:
    """Same contract as ``alice_wins`` with no memoization and no
    canonicalization; deliberately capped at n <= 6, c <= 3.

    Exists solely to cross-validate the memoized search.
    """
    if g.n > 6:
        raise ValueError(f"brute force capped at 6 vertices, got {g.n}")
    if c > 3:
        raise ValueError(f"brute force capped at 3 colors, got {c}")
    if k < 1 or c < 1:
        raise ValueError("k and c must be at least 1")
    adj = g.adj
    full = (1 << g.n) - 1
    masks = [0] * c

    def solve(colored: int, alice_to_move: bool) -> bool:
        if colored == full:
            return True
        moves: list[tuple[int, list[int]]] = []
        rest = full ^ colored
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            legal = [a for a in range(c) if not has_clique(g, adj[v] & masks[a], k)]
            if not legal:
                return False
            moves.append((v, legal))
        for v, legal in moves:
            bit = 1 << v
            for a in legal:
                masks[a] |= bit
                child = solve(colored | bit, not alice_to_move)
                masks[a] ^= bit
                if child == alice_to_move:
                    return alice_to_move
        return not alice_to_move

    return solve(0, True)


@dataclass(frozen=True)
class CResult:
    c: int
    alice_wins: bool | None  # None = budget exhausted
    nodes: int

    def to_json(self) -> dict:
        return {
            "c": self.c,
            "alice_wins": "budget" if self.alice_wins is None else self.alice_wins,
            "nodes": self.nodes,
        }


@dataclass
class SolveReport:
    """Per-color-count win/loss vector plus the least winning color count."""

    k: int
    c_max: int
    results: list[CResult] = field(default_factory=list)
    chi_game: int | None = None
    elapsed: float = 0.0

    @property
    def non_monotone(self) -> bool:
        """A definitive win followed by a definitive loss at larger c."""
        wins = [r.c for r in self.results if r.alice_wins is True]
        losses = [r.c for r in self.results if r.alice_wins is False]
        return bool(wins and losses) and min(wins) < max(losses)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "c_max": self.c_max,
            "results": [r.to_json() for r in self.results],
            "chi_game": self.chi_game,
            "non_monotone": self.non_monotone,
        }


def game_chromatic_number(
    g: Graph, k: int, c_max: int | None = None, budget: int | None = None
) -> SolveReport:
    """Solve for every c in 1..c_max and report the full win/loss vector.

    The whole vector is reported (rather than stopping at the first win)
    because win-monotonicity in c is not a given; a non-monotone vector is
    surfaced via the report, never inferred away.  Defaults c_max to n,
    which the solver confirms rather than assumes.
    """
    if c_max is None:
        c_max = max(1, g.n)
    report = SolveReport(k=k, c_max=c_max)
    start = time.perf_counter()
    for c in range(1, c_max + 1):
        solver = GameSolver(g, k, c, budget=budget)
        try:
            won: bool | None = solver.alice_wins()
        except BudgetExceeded:
            won = None
        report.results.append(CResult(c, won, solver.nodes))
        if won is True and report.chi_game is None:
            report.chi_game = c
    report.elapsed = time.perf_counter() - start
    return report
