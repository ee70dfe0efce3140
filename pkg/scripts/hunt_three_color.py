#!/usr/bin/env python3
"""Hunt for Alice losses in the 3-color game on clique-number-3 chordal
boards (k=2).  A loss here would be a genuine research finding; any hit is
dumped as a replayable transcript.

Usage: python scripts/hunt_three_color.py [--rounds 20] [--count 500]
                                          [--seed 0] [--minimax-max-n 8]
"""

import argparse
import json
import pathlib
import sys

from cliquegame.engine import GameConfig, play_game
from cliquegame.experiments import ExperimentSpec, run_suite, sparsified_chordal
from cliquegame.solver import alice_wins
from cliquegame.strategies import ActivationAlice, MinimaxBob

import random


def sampled_hunt(args) -> int:
    found = 0
    for round_no in range(args.rounds):
        seed = f"{args.seed}:round{round_no}"
        report = run_suite(
            ExperimentSpec(
                suite="conjecture-3color",
                count=args.count,
                n_min=5,
                n_max=10 + 2 * round_no,
                seed=seed,
            )
        )
        losses = [r for r in report.rows if not r["outcome"].startswith("alice")]
        print(
            f"round {round_no:2d} (n <= {10 + 2 * round_no}): "
            f"{report.instances} games, {len(losses)} Alice losses"
        )
        for row in losses:
            found += 1
            path = pathlib.Path(f"three-color-loss-{row['seed'].replace(':', '_')}.json")
            path.write_text(json.dumps(row, indent=2) + "\n")
            print(f"  finding saved to {path}")
    return found


def perfect_play_hunt(args) -> int:
    """Small boards against the exact solver: is 3 even enough in principle?"""
    found = 0
    rng = random.Random(args.seed)
    for trial in range(200):
        n = rng.randint(4, args.minimax_max_n)
        g = sparsified_chordal(3, n, random.Random(f"{args.seed}:pp{trial}"), 0.4)
        if not alice_wins(g, 2, 3):
            found += 1
            print(f"  solver: Alice cannot win with 3 colors on n={n}: {g.edges()}")
            t = play_game(GameConfig(2, 3, g), ActivationAlice(), MinimaxBob())
            print(f"    activation strategy outcome vs perfect Bob: {t.outcome}")
    return found


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rounds", type=int, default=20)
    parser.add_argument("--count", type=int, default=500)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--minimax-max-n", type=int, default=8)
    args = parser.parse_args()

    print("== sampled adversaries ==")
    sampled = sampled_hunt(args)
    print("== perfect play on small boards ==")
    exact = perfect_play_hunt(args)
    total = sampled + exact
    print(f"total findings: {total}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
