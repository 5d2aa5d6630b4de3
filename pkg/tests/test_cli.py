import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from fairshare.cli import main

GAME_PATH = str(Path(__file__).parent.parent / "games" / "backup-sites.json")


@pytest.fixture
def runner():
    return CliRunner()


def write_game(tmp_path, mapping):
    path = tmp_path / "game.json"
    path.write_text(json.dumps(mapping))
    return str(path)


class TestSolve:
    def test_demo_values_on_stdout(self, runner):
        result = runner.invoke(main, ["solve", GAME_PATH])
        assert result.exit_code == 0
        assert "5/2 (2.5)" in result.output
        assert "15/2 (7.5)" in result.output
        assert "17/2 (8.5)" in result.output

    def test_table_flag_prints_all_orders(self, runner):
        result = runner.invoke(main, ["solve", GAME_PATH, "--table"])
        assert result.exit_code == 0
        for order in ("ABC", "ACB", "BAC", "BCA", "CAB", "CBA"):
            assert order in result.output
        assert "15/6" in result.output

    def test_output_byte_stable(self, runner):
        flags = ["solve", GAME_PATH, "--table", "--axioms", "--core"]
        first = runner.invoke(main, flags)
        second = runner.invoke(main, flags)
        assert first.exit_code == second.exit_code == 0
        assert first.output == second.output

    def test_json_format_parses(self, runner):
        result = runner.invoke(main, ["--format", "json", "solve", GAME_PATH])
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc["shapley"]["A"] == {"exact": "5/2", "decimal": "2.5"}
        assert doc["cost_shares"]["B"] == {"exact": "8", "decimal": "8"}

    def test_permutation_method(self, runner):
        result = runner.invoke(
            main, ["--format", "json", "solve", GAME_PATH, "--method", "permutation"]
        )
        doc = json.loads(result.output)
        assert doc["method"] == "exact-permutation"
        assert doc["shapley"]["C"]["exact"] == "3/2"

    def test_table_cap_exceeded_is_nonzero_exit(self, runner, tmp_path):
        labels = [f"P{i}" for i in range(12)]
        game = {
            "players": labels,
            "costs": {x: "1" for x in labels},
            "completion": "additive",
        }
        path = write_game(tmp_path, game)
        ok = runner.invoke(main, ["solve", path])
        assert ok.exit_code == 0
        capped = runner.invoke(main, ["solve", path, "--table"])
        assert capped.exit_code != 0
        assert "error" in capped.output or "error" in (capped.stderr or "")

    def test_missing_file(self, runner):
        result = runner.invoke(main, ["solve", "no-such-file.json"])
        assert result.exit_code != 0

    def test_parse_error_diagnostic(self, runner, tmp_path):
        path = write_game(tmp_path, {"players": ["A", "B"], "costs": {"A": "1", "B": "1"}})
        result = runner.invoke(main, ["solve", path])
        assert result.exit_code != 0
        assert "A,B" in result.output

    def test_budgets_flag_needs_budget_section(self, runner, tmp_path):
        result = runner.invoke(main, ["solve", GAME_PATH, "--budgets"])
        assert result.exit_code != 0
        with_budgets = write_game(
            tmp_path,
            {
                "players": ["A", "B", "C"],
                "costs": {
                    "A": "10", "B": "10", "C": "10",
                    "A,B": "16", "A,C": "17", "B,C": "18", "A,B,C": "24",
                },
                "budgets": {"A": "8", "B": "8", "C": "8"},
            },
        )
        result = runner.invoke(main, ["solve", with_budgets, "--budgets"])
        assert result.exit_code == 0
        assert "corrective action for: C" in result.output


class TestSimulate:
    def test_demo_trace(self, runner):
        result = runner.invoke(main, ["simulate", GAME_PATH])
        assert result.exit_code == 0
        assert "enrollment {A,B,C}" in result.output
        assert "Final shares: A=7.5  B=8  C=8.5" in result.output

    def test_additive_game_stable_immediately(self, runner, tmp_path):
        path = write_game(
            tmp_path,
            {
                "players": ["A", "B"],
                "costs": {"A": "3", "B": "5"},
                "completion": "additive",
            },
        )
        result = runner.invoke(main, ["simulate", path])
        assert result.exit_code == 0
        assert "Stable at round 0." in result.output
        assert "{A}  {B}" in result.output

    def test_random_policy_deterministic_per_seed(self, runner):
        args = ["simulate", GAME_PATH, "--policy", "random", "--seed", "7"]
        first = runner.invoke(main, args)
        second = runner.invoke(main, args)
        assert first.output == second.output


class TestAxioms:
    def test_demo_axiom_suite(self, runner):
        result = runner.invoke(main, ["axioms", GAME_PATH])
        assert result.exit_code == 0
        assert "Efficiency: pass" in result.output
        assert "Symmetry A~B" in result.output
        assert "Dummy C" in result.output
        assert "Additivity" in result.output

    def test_json_output(self, runner):
        result = runner.invoke(main, ["--format", "json", "axioms", GAME_PATH])
        doc = json.loads(result.output)
        assert doc["efficiency"] is True
        assert doc["additivity_with_self"] is True
