import json

from cliquegame.cli import main
from cliquegame.engine import GameTranscript, replay
from cliquegame.graphs import graph_from_json, witness_from_json


def run(args):
    return main(args)


class TestGen:
    def test_ktree(self, tmp_path, capsys):
        out = tmp_path / "g.json"
        assert run(["gen", "--kind", "ktree", "--k", "2", "--n", "8", "--seed", "3", "--out", str(out)]) == 0
        g = graph_from_json(json.loads(out.read_text()))
        assert g.n == 8

    def test_partial_ktree(self, tmp_path):
        out = tmp_path / "w.json"
        assert run(["gen", "--kind", "partial-ktree", "--k", "2", "--n", "8", "--keep-prob", "0.5", "--seed", "3", "--out", str(out)]) == 0
        w = witness_from_json(json.loads(out.read_text()))
        assert w.k == 2

    def test_fixture(self, tmp_path):
        out = tmp_path / "f.json"
        assert run(["gen", "--kind", "fixture", "--name", "hub-threat", "--out", str(out)]) == 0
        g = graph_from_json(json.loads(out.read_text()))
        assert g.n == 9

    def test_fixture_requires_name(self, capsys):
        assert run(["gen", "--kind", "fixture"]) == 2
        assert "name" in capsys.readouterr().err

    def test_bad_params_exit_2(self, capsys):
        assert run(["gen", "--kind", "ktree", "--k", "5", "--n", "3"]) == 2


class TestPlay:
    def test_play_on_generated_board(self, tmp_path):
        out = tmp_path / "t.json"
        assert run(["play", "--gen-k", "2", "--gen-n", "10", "--k", "2", "--c", "4",
                    "--bob", "random", "--seed", "11", "--out", str(out)]) == 0
        t = GameTranscript.from_json(json.loads(out.read_text()))
        replay(t)

    def test_play_deterministic(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        args = ["play", "--gen-k", "2", "--gen-n", "10", "--k", "2", "--c", "4",
                "--bob", "clique-threat", "--seed", "11"]
        assert run(args + ["--out", str(a)]) == 0
        assert run(args + ["--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_play_on_graph_file(self, tmp_path):
        gfile = tmp_path / "g.json"
        run(["gen", "--kind", "ktree", "--k", "1", "--n", "6", "--seed", "0", "--out", str(gfile)])
        out = tmp_path / "t.json"
        assert run(["play", "--graph", str(gfile), "--k", "1", "--c", "4", "--out", str(out)]) == 0
        t = GameTranscript.from_json(json.loads(out.read_text()))
        assert t.outcome.winner == "alice"

    def test_play_witness_file_uses_supergraph(self, tmp_path):
        wfile = tmp_path / "w.json"
        run(["gen", "--kind", "partial-ktree", "--k", "2", "--n", "9", "--seed", "5", "--out", str(wfile)])
        out = tmp_path / "t.json"
        assert run(["play", "--graph", str(wfile), "--k", "2", "--c", "4", "--out", str(out)]) == 0
        t = GameTranscript.from_json(json.loads(out.read_text()))
        assert t.config.strategy_graph is not None

    def test_play_fixture_with_bob_config(self, tmp_path):
        cfg = tmp_path / "players.toml"
        cfg.write_text('[alice]\ntype = "activation"\ncolor_policy = "least-index"\n'
                       '[bob]\ntype = "scripted"\nscript = [[1, 1], [3, 2]]\n')
        out = tmp_path / "t.json"
        assert run(["play", "--fixture", "anchored", "--k", "2", "--c", "4",
                    "--config", str(cfg), "--out", str(out)]) == 0
        t = GameTranscript.from_json(json.loads(out.read_text()))
        assert t.outcome.winner == "alice"


class TestSolve:
    def test_solve_report(self, tmp_path):
        gfile = tmp_path / "g.json"
        gfile.write_text(json.dumps({"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]}))
        out = tmp_path / "r.json"
        assert run(["solve", "--graph", str(gfile), "--k", "1", "--c-max", "4", "--out", str(out)]) == 0
        report = json.loads(out.read_text())
        assert report["chi_game"] == 3

    def test_budget_marker(self, tmp_path):
        gfile = tmp_path / "g.json"
        run(["gen", "--kind", "ktree", "--k", "2", "--n", "9", "--seed", "0", "--out", str(gfile)])
        out = tmp_path / "r.json"
        assert run(["solve", "--graph", str(gfile), "--k", "2", "--c-max", "2",
                    "--budget", "20", "--out", str(out)]) == 0
        report = json.loads(out.read_text())
        assert report["results"][0]["alice_wins"] == "budget"


class TestVerify:
    def test_suite_pass_exit_0(self, tmp_path):
        out = tmp_path / "r.json"
        assert run(["verify", "theorem-k3", "--k", "1", "--count", "10", "--seed", "2", "--out", str(out)]) == 0
        report = json.loads(out.read_text())
        assert report["passed"] is True
        assert report["aggregate"]["violations"] == 0

    def test_csv_format(self, tmp_path):
        out = tmp_path / "r.csv"
        assert run(["verify", "theorem-k3", "--k", "1", "--count", "5", "--seed", "2",
                    "--format", "csv", "--out", str(out)]) == 0
        text = out.read_text()
        assert text.startswith("# suite=theorem-k3")
        assert "index,n,graph,seed,bob,outcome,moves,violation,audit_ok" in text

    def test_invalid_spec_exit_2(self, capsys):
        assert run(["verify", "theorem-general", "--k", "2", "--omega", "3", "--c", "4"]) == 2
        assert "hypothesis" in capsys.readouterr().err

    def test_config_file(self, tmp_path):
        cfg = tmp_path / "spec.toml"
        cfg.write_text('count = 6\nk = 1\nseed = 7\nbobs = ["random"]\n')
        out = tmp_path / "r.json"
        assert run(["verify", "theorem-k3", "--config", str(cfg), "--out", str(out)]) == 0
        report = json.loads(out.read_text())
        assert report["spec"]["count"] == 6
        assert report["spec"]["bobs"] == ["random"]
        assert report["spec"]["seed"] == 7

    def test_flags_override_config(self, tmp_path):
        cfg = tmp_path / "spec.toml"
        cfg.write_text("count = 6\nk = 1\n")
        out = tmp_path / "r.json"
        assert run(["verify", "theorem-k3", "--config", str(cfg), "--count", "3", "--out", str(out)]) == 0
        assert json.loads(out.read_text())["spec"]["count"] == 3

    def test_conjecture_exit_0_regardless(self, tmp_path):
        out = tmp_path / "r.json"
        assert run(["verify", "conjecture-3color", "--count", "8", "--seed", "1", "--out", str(out)]) == 0
        assert json.loads(out.read_text())["passed"] is None
