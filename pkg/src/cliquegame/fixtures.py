"""Fixture boards built around the four-triangle threat pattern.

All boards share nine vertices: a hub (vertex 6) sitting in four otherwise
disjoint triangles whose rims are the pairs (0,1), (2,3), (4,5), (7,8).
Filling each rim pair with its own color empties the hub's palette in the
2-clique-relaxed 4-coloring game, so these boards probe exactly how the
activation strategy keeps the hub colorable.  The ordered variants pin the
hub's back-neighbors to specific rim vertices and differ in which anchors
the far rim vertices hang from.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import GameConfig, GameState
from .graphs import Graph, LinearOrdering

HUB = 6

RIM_PAIRS = ((0, 1), (2, 3), (4, 5), (7, 8))

_HUB_EDGES = [(v, HUB) if v < HUB else (HUB, v) for v in range(9) if v != HUB]

# Hub lowest ordering: 0 < 2 < 6(hub) < 1 < 3 < 4 < 5 < 7 < 8.
_ANCHORED_ORDER = LinearOrdering([0, 2, 6, 1, 3, 4, 5, 7, 8])


@dataclass(frozen=True)
class FixtureBoard:
    name: str
    graph: Graph
    ordering: LinearOrdering | None
    hub: int = HUB


def hub_threat_board() -> FixtureBoard:
    """The bare pattern: hub plus four disjoint rim pairs, no ordering pinned."""
    return FixtureBoard(
        "hub-threat", Graph(9, _HUB_EDGES + list(RIM_PAIRS)), ordering=None
    )


def anchored_board() -> FixtureBoard:
    """Hub with back-neighbors 0 and 2 (one from each of two rims).

    The extra 0-2 edge keeps the hub's closed back-neighborhood a clique
    under the pinned ordering.
    """
    edges = _HUB_EDGES + list(RIM_PAIRS) + [(0, 2)]
    return FixtureBoard("anchored", Graph(9, edges), _ANCHORED_ORDER)


def shared_anchor_board(anchor: int) -> FixtureBoard:
    """Anchored board where far rim vertices 4 and 7 hang from one anchor."""
    if anchor not in (0, 2):
        raise ValueError("anchor must be vertex 0 or 2")
    base = anchored_board()
    extra = [(anchor, 4), (anchor, 7)]
    return FixtureBoard(
        f"shared-anchor-{anchor}", Graph(9, base.graph.edges() + extra), _ANCHORED_ORDER
    )


def split_anchor_board() -> FixtureBoard:
    """Anchored board where 7 hangs from anchor 0 and 4 from anchor 2."""
    base = anchored_board()
    extra = [(0, 7), (2, 4)]
    return FixtureBoard(
        "split-anchors", Graph(9, base.graph.edges() + extra), _ANCHORED_ORDER
    )


def fixture_boards() -> list[FixtureBoard]:
    return [
        hub_threat_board(),
        anchored_board(),
        shared_anchor_board(0),
        shared_anchor_board(2),
        split_anchor_board(),
    ]


def fixture_by_name(name: str) -> FixtureBoard:
    for board in fixture_boards():
        if board.name == name:
            return board
    raise ValueError(f"unknown fixture {name!r}")


def threat_state(turn: str = "alice") -> GameState:
    """The completed threat on the bare board: every rim pair filled with its
    own color, hub uncolored and uncolorable (k=2, c=4)."""
    board = hub_threat_board()
    config = GameConfig(k=2, c=4, play_graph=board.graph)
    coloring = {}
    for color, (u, v) in enumerate(RIM_PAIRS, start=1):
        coloring[u] = color
        coloring[v] = color
    return GameState.from_coloring(config, coloring, turn=turn)


# Adversary scripts that chase the rim-pair pattern from different sides.
# (vertex, color) entries; unplayable entries are skipped by ScriptedBob.
THREAT_SCRIPTS: dict[str, list[tuple[int, int]]] = {
    "high-rims-first": [(1, 1), (3, 2), (5, 3), (8, 4), (0, 1), (2, 2), (4, 3), (7, 4)],
    "far-rims-first": [(5, 3), (8, 4), (3, 2), (1, 1), (4, 3), (7, 4), (2, 2), (0, 1)],
    "low-rims-first": [(0, 1), (2, 2), (4, 3), (7, 4), (1, 1), (3, 2), (5, 3), (8, 4)],
    "pair-by-pair": [(7, 4), (8, 4), (4, 3), (5, 3), (2, 2), (3, 2), (0, 1), (1, 1)],
    "delay-near": [(8, 4), (5, 3), (7, 4), (4, 3), (3, 2), (1, 1), (2, 2), (0, 1)],
}
