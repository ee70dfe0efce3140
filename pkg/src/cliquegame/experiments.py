"""Verification suites: seeded instance sweeps with machine-readable reports.

Each suite plays activation-strategy Alice against a bench of Bobs on
generated boards satisfying one guarantee's hypotheses and flags any Alice
loss as a violation.  Reports are byte-reproducible from (spec, seed): rows
are ordered by instance index and carry no timing or host data.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .engine import ALICE, GameConfig, GameTranscript, MoveEvent, play_game
from .graphs import (
    Graph,
    OrderedGraph,
    _ktree,
    generate_partial_ktree,
    simplicial_ordering,
)
from .strategies import ActivationAlice, CliqueThreatBob, MinimaxBob, RandomBob

SUITES = (
    "theorem-k3",
    "theorem-2clique4",
    "theorem-general",
    "corollary-partial",
    "conjecture-3color",
)

BOB_NAMES = ("random", "clique-threat", "minimax")


def bound_formula(k: int, omega: int) -> int:
    """Color budget floor((3*omega - 1)/k) + 1 for chordal boards with
    clique number omega; defined only for omega > k."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if omega <= k:
        raise ValueError(f"requires omega > k, got omega={omega}, k={k}")
    return (3 * omega - 1) // k + 1


def partial_bound_formula(k: int, lam: int) -> int:
    """Color budget floor((3*lam + 2)/k) + 1 for partial lam-tree boards;
    equals bound_formula(k, lam + 1)."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if lam + 1 <= k:
        raise ValueError(f"requires lambda + 1 > k, got lambda={lam}, k={k}")
    return (3 * lam + 2) // k + 1


@dataclass(frozen=True)
class ExperimentSpec:
    """Parameters for one suite run; ``resolve()`` validates and fills
    suite-derived defaults."""

    suite: str
    count: int = 100
    n_min: int = 5
    n_max: int = 30
    k: int = 2
    omega: int | None = None
    lam: int | None = None
    c: int | None = None
    seed: int | str = 0
    bobs: tuple[str, ...] = ("random", "clique-threat")
    keep_prob: float = 0.6
    sparsify: float = 0.25

    def resolve(self) -> "ResolvedSpec":
        if self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}; choose one of {SUITES}")
        if self.count < 1:
            raise ValueError("count must be positive")
        if not self.bobs:
            raise ValueError("at least one bob strategy is required")
        for b in self.bobs:
            if b not in BOB_NAMES:
                raise ValueError(f"unknown bob strategy {b!r}; choose from {BOB_NAMES}")
        if not 0.0 <= self.keep_prob <= 1.0:
            raise ValueError("keep_prob must lie in [0, 1]")
        k, omega, lam, c = self.k, self.omega, self.lam, self.c
        uses_witness = False
        is_theorem = True
        if self.suite == "theorem-k3":
            omega = self._pin("omega", omega, k + 1)
            c = self._pin("c", c, k + 3)
        elif self.suite == "theorem-2clique4":
            if k != 2:
                raise ValueError(f"k is fixed to 2 for this suite, got {k}")
            omega = self._pin("omega", omega, 3)
            c = self._pin("c", c, 4)
        elif self.suite == "theorem-general":
            if omega is None:
                raise ValueError("theorem-general requires an explicit omega")
            if c is None:
                c = bound_formula(k, omega)
            if omega <= k:
                raise ValueError(f"requires omega > k, got omega={omega}, k={k}")
            if c * k - 3 * omega + 1 <= 0:
                raise ValueError(
                    f"hypothesis c*k - 3*omega + 1 > 0 fails for c={c}, k={k}, omega={omega}"
                )
        elif self.suite == "corollary-partial":
            uses_witness = True
            if lam is None:
                lam = k
            if lam + 1 <= k:
                raise ValueError(f"requires lambda + 1 > k, got lambda={lam}, k={k}")
            omega = self._pin("omega", omega, lam + 1)
            if c is None:
                c = partial_bound_formula(k, lam)
        else:  # conjecture-3color
            is_theorem = False
            if k != 2:
                raise ValueError(f"k is fixed to 2 for this suite, got {k}")
            omega = self._pin("omega", omega, 3)
            c = self._pin("c", c, 3)
        if k < 1 or c < 1:
            raise ValueError("k and c must be at least 1")
        if self.n_min < omega:
            raise ValueError(
                f"n_min must be at least omega={omega} to seed the base clique"
            )
        if self.n_max < self.n_min:
            raise ValueError("n_max must be at least n_min")
        return ResolvedSpec(
            suite=self.suite,
            count=self.count,
            n_min=self.n_min,
            n_max=self.n_max,
            k=k,
            omega=omega,
            lam=lam if uses_witness else None,
            c=c,
            seed=self.seed,
            bobs=tuple(self.bobs),
            keep_prob=self.keep_prob,
            sparsify=self.sparsify,
            uses_witness=uses_witness,
            is_theorem=is_theorem,
        )

    @staticmethod
    def _pin(name: str, given, fixed):
        if given is not None and given != fixed:
            raise ValueError(f"{name} is fixed to {fixed} for this suite, got {given}")
        return fixed


@dataclass(frozen=True)
class ResolvedSpec:
    suite: str
    count: int
    n_min: int
    n_max: int
    k: int
    omega: int
    lam: int | None
    c: int
    seed: int | str
    bobs: tuple[str, ...]
    keep_prob: float
    sparsify: float
    uses_witness: bool
    is_theorem: bool

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "count": self.count,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "k": self.k,
            "omega": self.omega,
            "lam": self.lam,
            "c": self.c,
            "seed": self.seed,
            "bobs": list(self.bobs),
            "keep_prob": self.keep_prob,
            "sparsify": self.sparsify,
        }


def sparsified_chordal(
    omega: int, n: int, rng: random.Random, attempt_frac: float = 0.25
) -> Graph:
    """Chordal graph with clique number exactly omega.

    Starts from a random (omega-1)-tree and deletes random edges, keeping a
    deletion only when the result stays chordal with the same clique number.
    """
    g = _ktree(rng, omega - 1, n)
    if attempt_frac <= 0:
        return g
    edges = set(g.edges())
    candidates = sorted(edges)
    rng.shuffle(candidates)
    for e in candidates[: int(len(candidates) * attempt_frac)]:
        trial = Graph(n, edges - {e})
        ordering = simplicial_ordering(trial)
        if ordering is None:
            continue
        if OrderedGraph(trial, ordering).max_parents() + 1 != omega:
            continue
        edges.remove(e)
    return Graph(n, edges)


def alice_action_counts(transcript: GameTranscript) -> list[int]:
    """Alice actions (activations plus her colorings) per vertex."""
    counts = [0] * transcript.config.play_graph.n
    for event in transcript.events:
        if isinstance(event, MoveEvent):
            if event.player == ALICE:
                counts[event.vertex] += 1
        else:
            counts[event.vertex] += 1
    return counts


def _make_bob(name: str):
    if name == "random":
        return RandomBob()
    if name == "clique-threat":
        return CliqueThreatBob()
    return MinimaxBob()


def run_instance(params: dict, index: int) -> dict:
    """One suite row: generate, validate hypotheses, play, audit."""
    instance_seed = f"{params['seed']}:{index}"
    rng = random.Random(instance_seed)
    n = rng.randint(params["n_min"], params["n_max"])
    bob_name = params["bobs"][index % len(params["bobs"])]
    if params["uses_witness"]:
        witness = generate_partial_ktree(
            params["lam"], n, params["keep_prob"], f"{instance_seed}:witness"
        )
        witness.validate()
        _check_clique_number(witness.h, params["omega"])
        config = GameConfig(
            k=params["k"],
            c=params["c"],
            play_graph=witness.g,
            strategy_graph=witness.h,
        )
    else:
        h = sparsified_chordal(params["omega"], n, rng, params["sparsify"])
        _check_clique_number(h, params["omega"])
        config = GameConfig(k=params["k"], c=params["c"], play_graph=h)
    transcript = play_game(
        config, ActivationAlice(), _make_bob(bob_name), seed=instance_seed
    )
    outcome = transcript.outcome
    alice_lost = outcome.winner != ALICE
    audit_ok = max(alice_action_counts(transcript), default=0) <= 2
    return {
        "index": index,
        "n": n,
        "graph": config.digest(),
        "seed": instance_seed,
        "bob": bob_name,
        "outcome": outcome.winner + ("_forfeit" if outcome.forfeit_by else "_wins"),
        "moves": len(transcript.moves),
        "violation": bool(alice_lost and params["is_theorem"]),
        "audit_ok": audit_ok,
    }


def _check_clique_number(h: Graph, omega: int) -> None:
    ordering = simplicial_ordering(h)
    if ordering is None:
        raise AssertionError("generated instance is not chordal")
    got = OrderedGraph(h, ordering).max_parents() + 1
    if got != omega:
        raise AssertionError(f"generated clique number {got}, expected {omega}")


@dataclass
class SuiteReport:
    spec: ResolvedSpec
    rows: list[dict] = field(default_factory=list)

    @property
    def instances(self) -> int:
        return len(self.rows)

    @property
    def alice_losses(self) -> int:
        return sum(1 for r in self.rows if not r["outcome"].startswith("alice"))

    @property
    def violations(self) -> int:
        return sum(1 for r in self.rows if r["violation"])

    @property
    def audit_failures(self) -> int:
        return sum(1 for r in self.rows if not r["audit_ok"])

    @property
    def passed(self) -> bool | None:
        """True/False for theorem suites; None for finding-only suites."""
        if not self.spec.is_theorem:
            return None
        return self.violations == 0

    def to_json(self) -> dict:
        return {
            "suite": self.spec.suite,
            "spec": self.spec.to_json(),
            "rows": self.rows,
            "aggregate": {
                "instances": self.instances,
                "alice_losses": self.alice_losses,
                "violations": self.violations,
                "audit_failures": self.audit_failures,
            },
            "passed": self.passed,
        }

    def to_json_text(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"

    def to_csv_text(self) -> str:
        lines = [f"# suite={self.spec.suite}"]
        spec = self.spec.to_json()
        lines.append("# " + " ".join(f"{k}={spec[k]}" for k in sorted(spec) if k != "suite"))
        cols = ["index", "n", "graph", "seed", "bob", "outcome", "moves", "violation", "audit_ok"]
        lines.append(",".join(cols))
        for r in self.rows:
            lines.append(",".join(str(r[c]) for c in cols))
        lines.append(
            f"# instances={self.instances} alice_losses={self.alice_losses} "
            f"violations={self.violations} audit_failures={self.audit_failures} "
            f"passed={self.passed}"
        )
        return "\n".join(lines) + "\n"


def run_suite(spec: ExperimentSpec | ResolvedSpec, jobs: int = 1) -> SuiteReport:
    resolved = spec if isinstance(spec, ResolvedSpec) else spec.resolve()
    params = {
        "seed": resolved.seed,
        "n_min": resolved.n_min,
        "n_max": resolved.n_max,
        "k": resolved.k,
        "omega": resolved.omega,
        "lam": resolved.lam,
        "c": resolved.c,
        "bobs": list(resolved.bobs),
        "keep_prob": resolved.keep_prob,
        "sparsify": resolved.sparsify,
        "uses_witness": resolved.uses_witness,
        "is_theorem": resolved.is_theorem,
    }
    indices = range(resolved.count)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_pool_worker, ((params, i) for i in indices), chunksize=16))
    else:
        rows = [run_instance(params, i) for i in indices]
    rows.sort(key=lambda r: r["index"])
    return SuiteReport(spec=resolved, rows=rows)


def _pool_worker(job: tuple[dict, int]) -> dict:
    params, index = job
    return run_instance(params, index)
