"""Command-line front end: generators, single games, solver runs, and the
verification suites.

Exit codes: 0 = success / suite passed, 1 = suite violation, 2 = input or
configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys

try:
    import tomllib  # Python 3.11+
except ModuleNotFoundError:  # pragma: no cover - depends on interpreter
    import tomli as tomllib

from .engine import GameConfig, play_game
from .experiments import ExperimentSpec, run_suite, SUITES
from .fixtures import fixture_by_name, fixture_boards
from .graphs import (
    GraphFormatError,
    generate_ktree,
    generate_partial_ktree,
    graph_from_json,
    graph_to_json,
    witness_from_json,
    witness_to_json,
)
from .solver import game_chromatic_number
from .strategies import alice_from_spec, bob_from_spec


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _load_graph(path: str):
    with open(path) as fh:
        obj = json.load(fh)
    if isinstance(obj, dict) and "h_edges" in obj:
        return witness_from_json(obj)
    return graph_from_json(obj)


def _load_config_file(path: str | None) -> dict:
    if path is None:
        return {}
    with open(path, "rb") as fh:
        return tomllib.load(fh)


def _common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", default="0", help="master seed")
    parser.add_argument("--out", default=None, help="output path (default stdout)")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--budget", type=int, default=None, help="solver node limit")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cliquegame", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit a graph or witness as JSON")
    _common_flags(gen)
    gen.add_argument(
        "--kind",
        choices=("ktree", "partial-ktree", "fixture"),
        default="ktree",
    )
    gen.add_argument("--k", type=int, default=2, help="tree parameter")
    gen.add_argument("--n", type=int, default=12)
    gen.add_argument("--keep-prob", type=float, default=0.6)
    gen.add_argument(
        "--name",
        default=None,
        help="fixture name: " + ", ".join(b.name for b in fixture_boards()),
    )

    play = sub.add_parser("play", help="play one game and emit its transcript")
    _common_flags(play)
    play.add_argument("--graph", default=None, help="graph or witness JSON file")
    play.add_argument("--fixture", default=None)
    play.add_argument("--gen-k", type=int, default=2, help="k-tree parameter when generating")
    play.add_argument("--gen-n", type=int, default=12)
    play.add_argument("--k", type=int, default=2)
    play.add_argument("--c", type=int, default=4)
    play.add_argument("--bob", default="random", help="random | clique-threat | minimax")
    play.add_argument("--color-policy", default="least-index")
    play.add_argument("--config", default=None, help="TOML file with [alice]/[bob] tables")

    solve = sub.add_parser("solve", help="exact winner per color count")
    _common_flags(solve)
    solve.add_argument("--graph", required=True)
    solve.add_argument("--k", type=int, default=2)
    solve.add_argument("--c-max", type=int, default=None)

    verify = sub.add_parser("verify", help="run a verification suite")
    _common_flags(verify)
    verify.add_argument("suite", choices=SUITES)
    verify.add_argument("--config", default=None, help="TOML file with spec fields")
    verify.add_argument("--count", type=int, default=None)
    verify.add_argument("--n-min", type=int, default=None)
    verify.add_argument("--n-max", type=int, default=None)
    verify.add_argument("--k", type=int, default=None)
    verify.add_argument("--omega", type=int, default=None)
    verify.add_argument("--lam", type=int, default=None)
    verify.add_argument("--c", type=int, default=None)
    verify.add_argument("--bobs", default=None, help="comma list: random,clique-threat,minimax")
    verify.add_argument("--keep-prob", type=float, default=None)
    verify.add_argument("--sparsify", type=float, default=None)
    verify.add_argument("--jobs", type=int, default=1)

    serve = sub.add_parser("serve", help="start the interactive session service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8023)
    serve.add_argument("--cors", action="store_true", help="permissive CORS for local dev")
    serve.add_argument("--idle-timeout", type=float, default=3600.0)
    return parser


def _seed_value(raw: str):
    try:
        return int(raw)
    except ValueError:
        return raw


def cmd_gen(args) -> int:
    if args.kind == "fixture":
        if args.name is None:
            raise ValueError("--name is required for --kind fixture")
        obj = graph_to_json(fixture_by_name(args.name).graph)
    elif args.kind == "ktree":
        obj = graph_to_json(generate_ktree(args.k, args.n, _seed_value(args.seed)))
    else:
        w = generate_partial_ktree(args.k, args.n, args.keep_prob, _seed_value(args.seed))
        obj = witness_to_json(w)
    _write(json.dumps(obj, indent=2) + "\n", args.out)
    return 0


def cmd_play(args) -> int:
    file_cfg = _load_config_file(args.config)
    if args.graph is not None:
        loaded = _load_graph(args.graph)
        if hasattr(loaded, "h"):
            config = GameConfig(args.k, args.c, loaded.g, strategy_graph=loaded.h)
        else:
            config = GameConfig(args.k, args.c, loaded)
        alice_spec = file_cfg.get("alice", {"type": "activation", "color_policy": args.color_policy})
        alice = alice_from_spec(alice_spec)
    elif args.fixture is not None:
        board = fixture_by_name(args.fixture)
        config = GameConfig(args.k, args.c, board.graph)
        from .strategies import ActivationAlice

        alice = ActivationAlice(color_policy=args.color_policy, ordering=board.ordering)
    else:
        g = generate_ktree(args.gen_k, args.gen_n, _seed_value(args.seed))
        config = GameConfig(args.k, args.c, g)
        alice = alice_from_spec(
            file_cfg.get("alice", {"type": "activation", "color_policy": args.color_policy})
        )
    bob_spec = file_cfg.get("bob", {"type": args.bob, "budget": args.budget})
    bob = bob_from_spec(bob_spec)
    transcript = play_game(config, alice, bob, seed=_seed_value(args.seed))
    _write(json.dumps(transcript.to_json(), indent=2) + "\n", args.out)
    return 0


def cmd_solve(args) -> int:
    loaded = _load_graph(args.graph)
    g = loaded.g if hasattr(loaded, "h") else loaded
    report = game_chromatic_number(g, args.k, c_max=args.c_max, budget=args.budget)
    _write(json.dumps(report.to_json(), indent=2) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    file_cfg = _load_config_file(args.config)
    fields = {}
    for name, flag in (
        ("count", args.count),
        ("n_min", args.n_min),
        ("n_max", args.n_max),
        ("k", args.k),
        ("omega", args.omega),
        ("lam", args.lam),
        ("c", args.c),
        ("keep_prob", args.keep_prob),
        ("sparsify", args.sparsify),
    ):
        if name in file_cfg:
            fields[name] = file_cfg[name]
        if flag is not None:
            fields[name] = flag
    bobs = file_cfg.get("bobs")
    if args.bobs is not None:
        bobs = [b.strip() for b in args.bobs.split(",") if b.strip()]
    if bobs is not None:
        fields["bobs"] = tuple(bobs)
    seed = file_cfg.get("seed", _seed_value(args.seed))
    spec = ExperimentSpec(suite=args.suite, seed=seed, **fields)
    report = run_suite(spec, jobs=args.jobs)
    text = report.to_json_text() if args.format == "json" else report.to_csv_text()
    _write(text, args.out)
    return 1 if report.passed is False else 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(idle_timeout=args.idle_timeout, cors=args.cors)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "gen": cmd_gen,
        "play": cmd_play,
        "solve": cmd_solve,
        "verify": cmd_verify,
        "serve": cmd_serve,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, GraphFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
