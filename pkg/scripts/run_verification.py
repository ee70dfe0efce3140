#!/usr/bin/env python3
"""Run every verification suite at full scale and write reports.

Usage: python scripts/run_verification.py [--out-dir reports] [--seed N]
                                           [--jobs N] [--count N]
"""

import argparse
import pathlib
import sys
import time

from cliquegame.experiments import ExperimentSpec, run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="reports")
    parser.add_argument("--seed", type=int, default=20240817)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--count", type=int, default=None, help="override per-suite instance count")
    args = parser.parse_args()

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    runs: list[tuple[str, ExperimentSpec]] = []
    for k in (1, 2, 3):
        runs.append(
            (f"theorem-k3-k{k}", ExperimentSpec(suite="theorem-k3", count=1000, k=k, seed=args.seed))
        )
    runs.append(("theorem-2clique4", ExperimentSpec(suite="theorem-2clique4", count=1000, seed=args.seed)))
    for k, omega, c in ((2, 3, 5), (3, 4, 4), (2, 4, 6)):
        runs.append(
            (
                f"theorem-general-k{k}w{omega}c{c}",
                ExperimentSpec(
                    suite="theorem-general", count=500, k=k, omega=omega, c=c,
                    n_min=max(5, omega), seed=args.seed,
                ),
            )
        )
    for k, lam, c in ((2, 3, 6), (3, 4, 5), (1, 1, 4), (2, 2, 4), (3, 3, 4)):
        runs.append(
            (
                f"corollary-partial-k{k}l{lam}c{c}",
                ExperimentSpec(
                    suite="corollary-partial", count=500, k=k, lam=lam, c=c,
                    n_min=max(5, lam + 1), seed=args.seed,
                ),
            )
        )
    runs.append(("conjecture-3color", ExperimentSpec(suite="conjecture-3color", count=500, seed=args.seed)))

    failed = False
    for name, spec in runs:
        if args.count is not None:
            spec = ExperimentSpec(**{**spec.__dict__, "count": args.count})
        t0 = time.perf_counter()
        report = run_suite(spec, jobs=args.jobs)
        dt = time.perf_counter() - t0
        (out_dir / f"{name}.json").write_text(report.to_json_text())
        (out_dir / f"{name}.csv").write_text(report.to_csv_text())
        verdict = {True: "pass", False: "FAIL", None: "findings-only"}[report.passed]
        print(
            f"{name:32s} {report.instances:5d} games  losses={report.alice_losses:3d}  "
            f"violations={report.violations:3d}  [{verdict}]  {dt:.1f}s"
        )
        if report.passed is False:
            failed = True
        if report.passed is None and report.alice_losses:
            print(f"  !! research finding: Alice lost {report.alice_losses} games; see {name}.json")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
