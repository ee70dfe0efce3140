import random

import pytest

from cliquegame.experiments import (
    ExperimentSpec,
    bound_formula,
    partial_bound_formula,
    run_instance,
    run_suite,
    sparsified_chordal,
)
from cliquegame.graphs import OrderedGraph, simplicial_ordering


class TestBoundFormula:
    @pytest.mark.parametrize("k,omega,expected", [(3, 4, 4), (2, 3, 5), (1, 2, 6)])
    def test_values(self, k, omega, expected):
        assert bound_formula(k, omega) == expected

    def test_rejects_omega_at_most_k(self):
        with pytest.raises(ValueError, match="omega > k"):
            bound_formula(3, 3)
        with pytest.raises(ValueError):
            bound_formula(0, 1)


class TestPartialBoundFormula:
    @pytest.mark.parametrize("k,lam,expected", [(3, 3, 4), (5, 5, 4), (2, 4, 8)])
    def test_values(self, k, lam, expected):
        assert partial_bound_formula(k, lam) == expected

    def test_rejects_hypothesis_violation(self):
        with pytest.raises(ValueError, match="lambda"):
            partial_bound_formula(3, 1)

    def test_identity_with_bound_formula(self):
        rng = random.Random(0)
        for _ in range(1000):
            k = rng.randint(1, 40)
            lam = rng.randint(k, 60)
            assert partial_bound_formula(k, lam) == bound_formula(k, lam + 1)

    def test_k_at_least_3_partial_ktree_needs_4(self):
        for k in range(3, 20):
            assert partial_bound_formula(k, k) == 4


class TestSpecValidation:
    def test_unknown_suite(self):
        with pytest.raises(ValueError, match="unknown suite"):
            ExperimentSpec(suite="theorem-42").resolve()

    def test_theorem_k3_defaults(self):
        spec = ExperimentSpec(suite="theorem-k3", k=2).resolve()
        assert spec.omega == 3 and spec.c == 5

    def test_theorem_k3_rejects_conflicting_c(self):
        with pytest.raises(ValueError, match="fixed"):
            ExperimentSpec(suite="theorem-k3", k=2, c=7).resolve()

    def test_theorem_general_requires_hypothesis(self):
        with pytest.raises(ValueError, match="explicit omega"):
            ExperimentSpec(suite="theorem-general", k=2).resolve()
        with pytest.raises(ValueError, match="omega > k"):
            ExperimentSpec(suite="theorem-general", k=3, omega=3).resolve()
        # c*k - 3*omega + 1 = 0 must be rejected at parse time
        with pytest.raises(ValueError, match="hypothesis"):
            ExperimentSpec(suite="theorem-general", k=2, omega=3, c=4).resolve()

    def test_theorem_general_default_c_satisfies_hypothesis(self):
        for k in range(1, 6):
            for omega in range(k + 1, 8):
                spec = ExperimentSpec(
                    suite="theorem-general", k=k, omega=omega, n_min=omega
                ).resolve()
                assert spec.c * k - 3 * omega + 1 > 0

    def test_corollary_defaults_lambda_to_k(self):
        spec = ExperimentSpec(suite="corollary-partial", k=2).resolve()
        assert spec.lam == 2 and spec.omega == 3 and spec.c == partial_bound_formula(2, 2)

    def test_corollary_rejects_small_lambda(self):
        with pytest.raises(ValueError, match="lambda"):
            ExperimentSpec(suite="corollary-partial", k=3, lam=1).resolve()

    def test_conjecture_fixed_parameters(self):
        spec = ExperimentSpec(suite="conjecture-3color").resolve()
        assert (spec.k, spec.omega, spec.c) == (2, 3, 3)
        assert not spec.is_theorem

    def test_bad_bob_name(self):
        with pytest.raises(ValueError, match="unknown bob"):
            ExperimentSpec(suite="theorem-k3", bobs=("psychic",)).resolve()

    def test_n_min_must_fit_base_clique(self):
        with pytest.raises(ValueError, match="n_min"):
            ExperimentSpec(suite="theorem-general", k=2, omega=6, n_min=4).resolve()


class TestSparsifiedChordal:
    def test_preserves_chordality_and_clique_number(self):
        rng = random.Random(5)
        for omega in (2, 3, 4):
            for seed in range(15):
                g = sparsified_chordal(omega, rng.randint(omega, 20), random.Random(seed), 0.5)
                ordering = simplicial_ordering(g)
                assert ordering is not None
                assert OrderedGraph(g, ordering).max_parents() + 1 == omega

    def test_actually_deletes_edges_sometimes(self):
        from cliquegame.graphs import generate_ktree

        deleted = 0
        for seed in range(20):
            rng = random.Random(seed)
            n = 15
            g = sparsified_chordal(3, n, random.Random(seed), 0.5)
            full = generate_ktree(2, n, seed)
            deleted += full.num_edges - g.num_edges
        assert deleted > 0


class TestRunSuite:
    def test_theorem_k3_small(self):
        report = run_suite(ExperimentSpec(suite="theorem-k3", count=24, k=2, seed=1))
        assert report.instances == 24
        assert report.violations == 0
        assert report.audit_failures == 0
        assert report.passed is True
        bobs = {r["bob"] for r in report.rows}
        assert bobs == {"random", "clique-threat"}

    def test_corollary_partial_small(self):
        report = run_suite(
            ExperimentSpec(suite="corollary-partial", count=16, k=2, lam=3, seed=2)
        )
        assert report.passed is True

    def test_conjecture_reports_findings_without_failing(self):
        report = run_suite(
            ExperimentSpec(suite="conjecture-3color", count=30, n_min=5, n_max=12, seed=3)
        )
        assert report.passed is None
        assert report.violations == 0  # losses are findings, not violations
        assert report.alice_losses >= 0

    def test_rows_ordered_by_index(self):
        report = run_suite(ExperimentSpec(suite="theorem-k3", count=10, k=1, seed=4))
        assert [r["index"] for r in report.rows] == list(range(10))

    def test_parallel_run_matches_serial(self):
        spec = ExperimentSpec(suite="theorem-k3", count=8, k=1, seed=4)
        serial = run_suite(spec, jobs=1)
        parallel = run_suite(spec, jobs=2)
        assert parallel.to_json_text() == serial.to_json_text()

    def test_reproducible_byte_for_byte(self):
        spec = ExperimentSpec(suite="theorem-2clique4", count=12, seed=9)
        a, b = run_suite(spec), run_suite(spec)
        assert a.to_json_text() == b.to_json_text()
        assert a.to_csv_text() == b.to_csv_text()

    def test_json_and_csv_carry_identical_rows(self):
        report = run_suite(ExperimentSpec(suite="theorem-k3", count=6, k=1, seed=5))
        csv_lines = [
            line
            for line in report.to_csv_text().splitlines()
            if line and not line.startswith("#")
        ]
        header = csv_lines[0].split(",")
        for row, line in zip(report.rows, csv_lines[1:]):
            values = line.split(",")
            assert values == [str(row[h]) for h in header]

    def test_instance_hypotheses_hold(self):
        spec = ExperimentSpec(suite="theorem-general", k=2, omega=4, c=6, seed=6).resolve()
        params = {
            "seed": spec.seed,
            "n_min": spec.n_min,
            "n_max": spec.n_max,
            "k": spec.k,
            "omega": spec.omega,
            "lam": spec.lam,
            "c": spec.c,
            "bobs": list(spec.bobs),
            "keep_prob": spec.keep_prob,
            "sparsify": spec.sparsify,
            "uses_witness": spec.uses_witness,
            "is_theorem": spec.is_theorem,
        }
        row = run_instance(params, 0)
        assert row["violation"] is False
        assert row["moves"] == row["n"]
