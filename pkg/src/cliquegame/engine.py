"""Rules of the k-clique-relaxed coloring game.

A color is legal for a vertex when playing it creates no monochromatic
(k+1)-clique.  Alice wins when every vertex is colored; Bob wins the moment
any uncolored vertex has no legal color left, checked immediately after
every move.  Both players are bound by legality.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Iterable

from .graphs import Graph, bits, find_clique, graph_from_json, graph_to_json, has_clique

ALICE = "alice"
BOB = "bob"

ONGOING = "ongoing"
ALICE_WINS = "alice_wins"
BOB_WINS = "bob_wins"


class RuleViolation(Exception):
    """An illegal move; ``clique`` names the monochromatic clique it completes."""

    def __init__(self, message: str, clique: tuple[int, ...] | None = None):
        super().__init__(message)
        self.clique = clique


class ProtocolError(Exception):
    """A move submitted out of turn."""


@dataclass(frozen=True)
class Move:
    vertex: int
    color: int


@dataclass(frozen=True)
class Status:
    kind: str  # ONGOING | ALICE_WINS | BOB_WINS
    witness: int | None = None

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass(frozen=True)
class GameConfig:
    """Game parameters: relaxation k, color count c, and the board(s).

    When ``strategy_graph`` is present Alice runs her bookkeeping on it while
    legality is always adjudicated on ``play_graph``.
    """

    k: int
    c: int
    play_graph: Graph
    strategy_graph: Graph | None = None

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be at least 1, got {self.k}")
        if self.c < 1:
            raise ValueError(f"c must be at least 1, got {self.c}")
        h = self.strategy_graph
        if h is not None:
            if h.n != self.play_graph.n:
                raise ValueError("strategy graph must share the play graph's vertex set")
            for v in range(h.n):
                if self.play_graph.adj[v] & ~h.adj[v]:
                    raise ValueError(
                        f"strategy graph is missing a play edge at vertex {v}"
                    )

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "c": self.c,
            "play_graph": graph_to_json(self.play_graph),
            "strategy_graph": None
            if self.strategy_graph is None
            else graph_to_json(self.strategy_graph),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "GameConfig":
        sg = obj.get("strategy_graph")
        return cls(
            k=obj["k"],
            c=obj["c"],
            play_graph=graph_from_json(obj["play_graph"]),
            strategy_graph=None if sg is None else graph_from_json(sg),
        )

    def digest(self) -> str:
        blob = json.dumps(self.to_json(), separators=(",", ":"), sort_keys=True)
        return hashlib.sha256(blob.encode()).hexdigest()[:12]


class GameState:
    """A position: partial coloring, active set, and whose turn it is.

    Values are cheap to copy; ``apply_move`` and ``with_activated`` return
    new states and never mutate the receiver.
    """

    __slots__ = ("config", "coloring", "class_masks", "active", "uncolored", "turn")

    def __init__(self, config, coloring, class_masks, active, uncolored, turn):
        self.config = config
        self.coloring = coloring  # tuple, 0 = uncolored, else 1..c
        self.class_masks = class_masks  # tuple of c vertex masks
        self.active = active  # vertex mask
        self.uncolored = uncolored  # vertex mask
        self.turn = turn

    @classmethod
    def initial(cls, config: GameConfig) -> "GameState":
        n = config.play_graph.n
        return cls(
            config,
            (0,) * n,
            (0,) * config.c,
            0,
            (1 << n) - 1,
            ALICE,
        )

    @classmethod
    def from_coloring(
        cls,
        config: GameConfig,
        coloring: dict[int, int],
        turn: str = ALICE,
        active: Iterable[int] = (),
    ) -> "GameState":
        """Build a mid-game position directly, validating the clique bound."""
        g = config.play_graph
        colors = [0] * g.n
        masks = [0] * config.c
        for v, a in coloring.items():
            g.check_vertex(v)
            if not 1 <= a <= config.c:
                raise ValueError(f"color {a} out of range 1..{config.c}")
            colors[v] = a
            masks[a - 1] |= 1 << v
        for a, mask in enumerate(masks, start=1):
            clique = find_clique(g, mask, config.k + 1)
            if clique is not None:
                raise RuleViolation(
                    f"color {a} already carries a monochromatic {config.k + 1}-clique",
                    clique=clique,
                )
        active_mask = 0
        for v in active:
            g.check_vertex(v)
            active_mask |= 1 << v
        colored_mask = sum(masks)
        active_mask |= colored_mask  # colored vertices are always active
        return cls(
            config,
            tuple(colors),
            tuple(masks),
            active_mask,
            (1 << g.n) - 1 ^ colored_mask,
            turn,
        )

    def color_of(self, v: int) -> int | None:
        self.config.play_graph.check_vertex(v)
        return self.coloring[v] or None

    def is_colored(self, v: int) -> bool:
        return self.coloring[v] != 0

    def is_active(self, v: int) -> bool:
        self.config.play_graph.check_vertex(v)
        return bool(self.active >> v & 1)

    def colored_vertices(self) -> list[int]:
        return [v for v in range(len(self.coloring)) if self.coloring[v]]

    def is_color_legal(self, v: int, color: int) -> bool:
        """Would coloring v with ``color`` avoid a monochromatic (k+1)-clique?"""
        g = self.config.play_graph
        return not has_clique(g, g.adj[v] & self.class_masks[color - 1], self.config.k)

    def legal_colors(self, v: int) -> list[int]:
        """Colors playable on the uncolored vertex v, in ascending order."""
        self.config.play_graph.check_vertex(v)
        if self.coloring[v]:
            raise ValueError(f"vertex {v} is already colored")
        return [a for a in range(1, self.config.c + 1) if self.is_color_legal(v, a)]

    def legal_color_map(self) -> dict[int, list[int]]:
        """legal_colors for every uncolored vertex (empty list = stuck)."""
        return {v: self.legal_colors(v) for v in bits(self.uncolored)}

    def legal_moves(self) -> list[Move]:
        return [
            Move(v, a) for v in bits(self.uncolored) for a in self.legal_colors(v)
        ]

    def apply_move(self, move: Move, player: str | None = None) -> "GameState":
        """New state with the move played; the vertex joins the active set."""
        if player is not None and player != self.turn:
            raise ProtocolError(f"it is {self.turn}'s turn, not {player}'s")
        g = self.config.play_graph
        g.check_vertex(move.vertex)
        if self.coloring[move.vertex]:
            raise RuleViolation(f"vertex {move.vertex} is already colored")
        if not 1 <= move.color <= self.config.c:
            raise RuleViolation(f"color {move.color} out of range 1..{self.config.c}")
        neighborhood = g.adj[move.vertex] & self.class_masks[move.color - 1]
        clique = find_clique(g, neighborhood, self.config.k)
        if clique is not None:
            full = tuple(sorted(clique + (move.vertex,)))
            raise RuleViolation(
                f"coloring vertex {move.vertex} with {move.color} completes the "
                f"monochromatic {self.config.k + 1}-clique {full}",
                clique=full,
            )
        bit = 1 << move.vertex
        coloring = list(self.coloring)
        coloring[move.vertex] = move.color
        masks = list(self.class_masks)
        masks[move.color - 1] |= bit
        return GameState(
            self.config,
            tuple(coloring),
            tuple(masks),
            self.active | bit,
            self.uncolored ^ bit,
            BOB if self.turn == ALICE else ALICE,
        )

    def with_activated(self, v: int) -> "GameState":
        self.config.play_graph.check_vertex(v)
        bit = 1 << v
        if self.active & bit:
            return self
        return GameState(
            self.config,
            self.coloring,
            self.class_masks,
            self.active | bit,
            self.uncolored,
            self.turn,
        )

    def status(self) -> Status:
        """Full-board adjudication: scan every uncolored vertex."""
        if not self.uncolored:
            return Status(ALICE_WINS)
        for v in bits(self.uncolored):
            if not self.legal_colors(v):
                return Status(BOB_WINS, witness=v)
        return Status(ONGOING)

    def status_after(self, vertex: int) -> Status:
        """Adjudication right after a move on ``vertex``.

        Only uncolored neighbors of the moved vertex can have lost a color,
        so this is equivalent to ``status()`` whenever the previous position
        was ongoing.
        """
        if not self.uncolored:
            return Status(ALICE_WINS)
        g = self.config.play_graph
        for v in bits(g.adj[vertex] & self.uncolored):
            if not self.legal_colors(v):
                return Status(BOB_WINS, witness=v)
        return Status(ONGOING)


@dataclass(frozen=True)
class ActivationEvent:
    vertex: int

    def to_json(self) -> dict:
        return {"type": "activate", "vertex": self.vertex}


@dataclass(frozen=True)
class MoveEvent:
    player: str
    vertex: int
    color: int

    def to_json(self) -> dict:
        return {
            "type": "move",
            "player": self.player,
            "vertex": self.vertex,
            "color": self.color,
        }


Event = ActivationEvent | MoveEvent


def event_from_json(obj: dict) -> Event:
    if obj.get("type") == "activate":
        return ActivationEvent(obj["vertex"])
    if obj.get("type") == "move":
        return MoveEvent(obj["player"], obj["vertex"], obj["color"])
    raise ValueError(f"unknown event type {obj.get('type')!r}")


@dataclass(frozen=True)
class Outcome:
    winner: str  # ALICE | BOB
    witness: int | None = None
    forfeit_by: str | None = None
    diagnostic: str | None = None

    def to_json(self) -> dict:
        out: dict = {"winner": self.winner}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.forfeit_by is not None:
            out["forfeit_by"] = self.forfeit_by
        if self.diagnostic is not None:
            out["diagnostic"] = self.diagnostic
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "Outcome":
        return cls(
            winner=obj["winner"],
            witness=obj.get("witness"),
            forfeit_by=obj.get("forfeit_by"),
            diagnostic=obj.get("diagnostic"),
        )


@dataclass
class GameTranscript:
    """Replayable record of one game: config, events, outcome."""

    config: GameConfig
    events: list[Event] = field(default_factory=list)
    outcome: Outcome | None = None

    @property
    def moves(self) -> list[MoveEvent]:
        return [e for e in self.events if isinstance(e, MoveEvent)]

    def to_json(self) -> dict:
        return {
            "config": self.config.to_json(),
            "config_digest": self.config.digest(),
            "events": [e.to_json() for e in self.events],
            "outcome": None if self.outcome is None else self.outcome.to_json(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "GameTranscript":
        out = obj.get("outcome")
        return cls(
            config=GameConfig.from_json(obj["config"]),
            events=[event_from_json(e) for e in obj["events"]],
            outcome=None if out is None else Outcome.from_json(out),
        )


class ReplayError(ValueError):
    """Transcript replay diverged from its recorded outcome."""


def replay(transcript: GameTranscript) -> GameState:
    """Re-run a transcript's events, validating legality and the outcome."""
    state = GameState.initial(transcript.config)
    status = state.status()
    last_vertex: int | None = None
    for event in transcript.events:
        if isinstance(event, ActivationEvent):
            state = state.with_activated(event.vertex)
            continue
        if status.kind != ONGOING:
            raise ReplayError(f"move after game end: {event}")
        state = state.apply_move(Move(event.vertex, event.color), player=event.player)
        last_vertex = event.vertex
        status = state.status_after(last_vertex)
    recorded = transcript.outcome
    if recorded is not None and recorded.forfeit_by is None:
        want = ALICE_WINS if recorded.winner == ALICE else BOB_WINS
        if status.kind != want or (
            want == BOB_WINS and status.witness != recorded.witness
        ):
            raise ReplayError(
                f"replay ends {status.kind} (witness {status.witness}), "
                f"transcript says {recorded}"
            )
    return state


class ActivationFailure(Exception):
    """Alice's strategy found no legal color for its chosen vertex."""

    def __init__(self, vertex: int):
        super().__init__(f"no legal color for vertex {vertex}")
        self.vertex = vertex


def play_game(config: GameConfig, alice, bob, seed=0) -> GameTranscript:
    """Run one full game, Alice first, re-validating every strategy move.

    Strategies are duck-typed: Alice exposes ``take_turn(state, bob_move)``
    returning a ``TurnPlan``; Bob exposes ``choose(state)`` returning a
    ``Move``.  Both may define ``reset(config, seed)``.  Illegal strategy
    moves are recorded as forfeits, never silently repaired.
    """
    for agent in (alice, bob):
        reset = getattr(agent, "reset", None)
        if reset is not None:
            reset(config, seed)
    transcript = GameTranscript(config)
    state = GameState.initial(config)
    status = state.status()
    last_bob_move: Move | None = None
    while status.kind == ONGOING:
        if state.turn == ALICE:
            try:
                plan = alice.take_turn(state, last_bob_move)
                for v in plan.activations:
                    state = state.with_activated(v)
                    transcript.events.append(ActivationEvent(v))
                state = state.apply_move(plan.move, player=ALICE)
            except ActivationFailure as exc:
                transcript.outcome = Outcome(
                    BOB, witness=exc.vertex, diagnostic=str(exc)
                )
                return transcript
            except (RuleViolation, ProtocolError) as exc:
                transcript.outcome = Outcome(BOB, forfeit_by=ALICE, diagnostic=str(exc))
                return transcript
            transcript.events.append(MoveEvent(ALICE, plan.move.vertex, plan.move.color))
            moved = plan.move.vertex
        else:
            try:
                move = bob.choose(state)
                state = state.apply_move(move, player=BOB)
            except (RuleViolation, ProtocolError) as exc:
                transcript.outcome = Outcome(ALICE, forfeit_by=BOB, diagnostic=str(exc))
                return transcript
            transcript.events.append(MoveEvent(BOB, move.vertex, move.color))
            last_bob_move = move
            moved = move.vertex
        status = state.status_after(moved)
    if status.kind == ALICE_WINS:
        transcript.outcome = Outcome(ALICE)
    else:
        transcript.outcome = Outcome(BOB, witness=status.witness)
    return transcript
