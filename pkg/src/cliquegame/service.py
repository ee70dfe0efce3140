"""HTTP session service: a human plays Bob against activation-strategy Alice.

All adjudication is server-side.  Alice replies synchronously inside the
move request, so plain request/response suffices; her activation chain for
the turn is surfaced in every view for exploration and debugging.
"""

from __future__ import annotations

import secrets
import threading
import time
from dataclasses import dataclass, field
from typing import Any

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from .engine import (
    ALICE,
    BOB,
    ONGOING,
    ActivationEvent,
    GameConfig,
    GameState,
    GameTranscript,
    Move,
    MoveEvent,
    Outcome,
    RuleViolation,
    Status,
)
from .fixtures import fixture_by_name
from .graphs import (
    GraphFormatError,
    generate_ktree,
    generate_partial_ktree,
    graph_from_json,
    graph_to_json,
)
from .strategies import ActivationAlice, ActivationFailure


@dataclass
class Session:
    id: str
    config: GameConfig
    alice: ActivationAlice
    state: GameState
    events: list = field(default_factory=list)
    outcome: Outcome | None = None
    status: Status = field(default_factory=lambda: Status(ONGOING))
    alice_chain: list[dict] = field(default_factory=list)
    created: float = field(default_factory=time.time)
    last_active: float = field(default_factory=time.time)
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def ply(self) -> int:
        return sum(1 for e in self.events if isinstance(e, MoveEvent))

    def view(self) -> dict:
        g = self.config.play_graph
        return {
            "id": self.id,
            "k": self.config.k,
            "c": self.config.c,
            "graph": graph_to_json(g),
            "strategy_graph": None
            if self.config.strategy_graph is None
            else graph_to_json(self.config.strategy_graph),
            "ordering": list(self.alice.ordered.ordering.order),
            "coloring": list(self.state.coloring),
            "active": [v for v in range(g.n) if self.state.is_active(v)],
            "turn": self.state.turn if self.status.kind == ONGOING else None,
            "status": self.status.to_json(),
            "ply": self.ply,
            "alice_chain": self.alice_chain,
        }

    def transcript(self) -> GameTranscript:
        return GameTranscript(self.config, list(self.events), self.outcome)

    def run_alice_turn(self, bob_move: Move | None) -> None:
        """Compute and apply Alice's reply; records her activation chain."""
        chain: list[dict] = []
        if bob_move is not None:
            # Re-activating Bob's vertex is always a no-op (coloring
            # activates); it is surfaced here but adds no transcript event.
            chain.append({"vertex": bob_move.vertex, "noop": True})
        try:
            plan = self.alice.take_turn(self.state, bob_move)
        except ActivationFailure as exc:
            self.outcome = Outcome(BOB, witness=exc.vertex, diagnostic=str(exc))
            self.status = Status("bob_wins", witness=exc.vertex)
            self.alice_chain = chain
            return
        for v in plan.activations:
            self.state = self.state.with_activated(v)
            self.events.append(ActivationEvent(v))
            chain.append({"vertex": v, "noop": False})
        self.state = self.state.apply_move(plan.move, player=ALICE)
        self.events.append(MoveEvent(ALICE, plan.move.vertex, plan.move.color))
        self.alice_chain = chain
        self._adjudicate(plan.move.vertex)

    def _adjudicate(self, vertex: int) -> None:
        self.status = self.state.status_after(vertex)
        if self.status.kind == "alice_wins":
            self.outcome = Outcome(ALICE)
        elif self.status.kind == "bob_wins":
            self.outcome = Outcome(BOB, witness=self.status.witness)


class SessionStore:
    def __init__(self, idle_timeout: float):
        self.idle_timeout = idle_timeout
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def add(self, session: Session) -> None:
        with self._lock:
            self._sessions[session.id] = session

    def get(self, session_id: str) -> Session:
        now = time.time()
        with self._lock:
            session = self._sessions.get(session_id)
            if session is not None and now - session.last_active > self.idle_timeout:
                del self._sessions[session_id]
                session = None
        if session is None:
            raise HTTPException(status_code=404, detail="no such session")
        return session


class CreateSessionRequest(BaseModel):
    k: int
    c: int
    graph: dict | None = None
    fixture: str | None = None
    generator: dict | None = None


class MoveRequest(BaseModel):
    vertex: int
    color: int
    ply: int


def _build_config(req: CreateSessionRequest) -> tuple[GameConfig, ActivationAlice]:
    sources = [s for s in (req.graph, req.fixture, req.generator) if s is not None]
    if len(sources) != 1:
        raise HTTPException(
            status_code=422,
            detail="provide exactly one of 'graph', 'fixture', 'generator'",
        )
    try:
        if req.graph is not None:
            config = GameConfig(req.k, req.c, graph_from_json(req.graph))
            return config, ActivationAlice()
        if req.fixture is not None:
            board = fixture_by_name(req.fixture)
            config = GameConfig(req.k, req.c, board.graph)
            return config, ActivationAlice(ordering=board.ordering)
        gen: dict[str, Any] = dict(req.generator or {})
        kind = gen.get("kind", "ktree")
        k_tree = gen.get("k", req.k)
        n = gen.get("n", 12)
        seed = gen.get("seed", 0)
        if kind == "ktree":
            g = generate_ktree(k_tree, n, seed)
            config = GameConfig(req.k, req.c, g)
            return config, ActivationAlice()
        if kind == "partial-ktree":
            w = generate_partial_ktree(k_tree, n, gen.get("keep_prob", 0.6), seed)
            config = GameConfig(req.k, req.c, w.g, strategy_graph=w.h)
            return config, ActivationAlice()
        raise ValueError(f"unknown generator kind {kind!r}")
    except (GraphFormatError, ValueError) as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


def create_app(idle_timeout: float = 3600.0, cors: bool = False) -> FastAPI:
    app = FastAPI(title="cliquegame session service")
    if cors:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=["*"],
            allow_methods=["*"],
            allow_headers=["*"],
        )
    store = SessionStore(idle_timeout)
    app.state.store = store

    @app.post("/sessions")
    def create_session(req: CreateSessionRequest) -> dict:
        config, alice = _build_config(req)
        alice.reset(config)
        session = Session(
            id=secrets.token_urlsafe(9),
            config=config,
            alice=alice,
            state=GameState.initial(config),
        )
        with session.lock:
            session.status = session.state.status()
            if session.status.kind == ONGOING:
                session.run_alice_turn(None)
            elif session.status.kind == "alice_wins":
                session.outcome = Outcome(ALICE)
            store.add(session)
            return session.view()

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str) -> dict:
        session = store.get(session_id)
        with session.lock:
            session.last_active = time.time()
            return session.view()

    @app.post("/sessions/{session_id}/moves")
    def submit_move(session_id: str, req: MoveRequest) -> dict:
        session = store.get(session_id)
        with session.lock:
            session.last_active = time.time()
            if session.outcome is not None:
                raise HTTPException(status_code=409, detail="game is over")
            if req.ply != session.ply:
                raise HTTPException(
                    status_code=409,
                    detail=f"stale move: board is at ply {session.ply}, got {req.ply}",
                )
            if session.state.turn != BOB:
                raise HTTPException(status_code=409, detail="not the human's turn")
            move = Move(req.vertex, req.color)
            try:
                session.state = session.state.apply_move(move, player=BOB)
            except RuleViolation as exc:
                raise HTTPException(
                    status_code=422,
                    detail={"message": str(exc), "clique": list(exc.clique or ())},
                ) from exc
            session.events.append(MoveEvent(BOB, move.vertex, move.color))
            session._adjudicate(move.vertex)
            if session.status.kind == ONGOING:
                session.run_alice_turn(move)
            return session.view()

    @app.get("/sessions/{session_id}/hints")
    def hints(session_id: str) -> dict:
        session = store.get(session_id)
        with session.lock:
            session.last_active = time.time()
            return {
                "hints": {
                    str(v): colors
                    for v, colors in sorted(session.state.legal_color_map().items())
                }
            }

    @app.get("/sessions/{session_id}/transcript")
    def transcript(session_id: str) -> dict:
        session = store.get(session_id)
        with session.lock:
            session.last_active = time.time()
            return session.transcript().to_json()

    return app
