"""k-clique-relaxed graph coloring game: engine, strategies, solver, harness."""

from .engine import (
    ALICE,
    BOB,
    GameConfig,
    GameState,
    GameTranscript,
    Move,
    Outcome,
    ProtocolError,
    RuleViolation,
    Status,
    play_game,
    replay,
)
from .graphs import (
    Graph,
    GraphFormatError,
    LinearOrdering,
    OrderedGraph,
    PartialKTreeWitness,
    clique_number,
    generate_ktree,
    generate_partial_ktree,
    graph_from_json,
    graph_to_json,
    is_chordal,
    is_simplicial_ordering,
    simplicial_ordering,
)
from .solver import BudgetExceeded, GameSolver, SolveReport, alice_wins, brute_force_winner, game_chromatic_number
from .strategies import (
    ActivationAlice,
    CliqueThreatBob,
    MinimaxBob,
    RandomBob,
    ScriptedBob,
    mother,
)

__all__ = [name for name in dir() if not name.startswith("_")]
