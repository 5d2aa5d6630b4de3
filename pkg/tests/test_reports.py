import math
from fractions import Fraction

from fairshare.games import savings_transform
from fairshare.network import simulate_formation
from fairshare.reports import render_marginal_table, render_solution, render_trace
from fairshare.shapley import marginal_table
from fairshare.solve import build_solution, marginal_table_document, trace_document

EXPECTED_TABLE = """\
Entry order       A     B    C
ABC               0     4    2
ACB               0     3    3
BAC               4     0    2
BCA               4     0    2
CAB               3     3    0
CBA               4     2    0
Total            15    12    9
Shapley value  15/6  12/6  9/6"""


class TestMarginalTableRendering:
    def test_demo_layout_frozen(self, demo_savings):
        doc = marginal_table_document(marginal_table(demo_savings))
        assert render_marginal_table(doc) == EXPECTED_TABLE

    def test_four_player_totals_consistent(self, four_player_game):
        savings = savings_transform(four_player_game)
        table = marginal_table(savings)
        doc = marginal_table_document(table)
        assert len(doc["rows"]) == math.factorial(4)
        for total, shapley in zip(table.column_totals, table.shapley_row):
            assert total / math.factorial(4) == shapley
        text = render_marginal_table(doc)
        assert text.splitlines()[0].startswith("Entry order")
        assert len(text.splitlines()) == 24 + 3

    def test_fractional_totals_fall_back_to_reduced_value(self, demo_game):
        # halve every cost: totals become fractions, the table still renders
        from fairshare.games import CostGame

        halved = CostGame(
            demo_game.players, tuple(c / 2 for c in demo_game.costs)
        )
        doc = marginal_table_document(marginal_table(savings_transform(halved)))
        text = render_marginal_table(doc)
        assert "Shapley value" in text


class TestSolutionRendering:
    def test_demo_solution_text(self, demo_game):
        doc = build_solution(demo_game, include_table=True, include_core=True)
        text = render_solution(doc)
        assert "Players: A, B, C" in text
        assert "5/2 (2.5)" in text
        assert "15/2 (7.5)" in text
        assert EXPECTED_TABLE in text
        assert "Efficiency: pass" in text
        assert "in the core" in text

    def test_budget_section_flags(self, demo_game):
        doc = build_solution(
            demo_game,
            budgets={"A": Fraction(8), "B": Fraction(8), "C": Fraction(8)},
            include_budgets=True,
        )
        text = render_solution(doc)
        assert "OVER BUDGET" in text
        assert "Initiate corrective action for: C" in text

    def test_rendering_is_deterministic(self, demo_game):
        doc = build_solution(demo_game, include_table=True, include_axioms=True)
        assert render_solution(doc) == render_solution(doc)


class TestTraceRendering:
    def test_demo_trace_text(self, demo_game):
        result = simulate_formation(demo_game)
        text = render_trace(trace_document(result, "greedy-merge", 0, 100))
        assert "Round 1: enrollment {A,B}" in text
        assert "Round 2: enrollment {A,B,C}" in text
        assert "Stable at round 2." in text
        assert "Final shares: A=7.5  B=8  C=8.5" in text

    def test_empty_trace_renders_header_only(self):
        doc = {
            "policy": "greedy-merge",
            "seed": 0,
            "max_rounds": 5,
            "rounds": 0,
            "stable": True,
            "events": [],
            "final_structure": [["A"]],
            "final_shares": {"A": {"exact": "10", "decimal": "10"}},
            "stages": {"A": "problematization"},
        }
        text = render_trace(doc)
        lines = text.splitlines()
        assert lines[0].startswith("Policy:")
        assert not any(line.startswith("Round") for line in lines)
        assert "Stable at round 0." in text
