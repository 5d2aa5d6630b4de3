from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import support
from fairshare.games import (
    CharacteristicGame,
    Coalition,
    PlayerCapError,
    build_cost_game,
    savings_transform,
)
from fairshare.shapley import (
    METHOD_SUBSET,
    Allocation,
    check_additivity,
    check_dummy,
    check_efficiency,
    check_symmetry,
    cost_shares,
    marginal_table,
    shapley_monte_carlo,
    shapley_permutation,
    shapley_subset,
    sum_games,
)


def zero_game(n: int) -> CharacteristicGame:
    base = support.random_cost_game(0, n)
    return CharacteristicGame(base.players, (Fraction(0),) * (1 << n))


def symmetric_pair_game() -> CharacteristicGame:
    game = build_cost_game(
        ["A", "B"],
        {frozenset("A"): 10, frozenset("B"): 10, frozenset("AB"): 16},
    )
    return savings_transform(game)  # v(1)=v(2)=0, v(12)=4


class TestExactShapley:
    def test_demo_game_subset(self, demo_savings):
        alloc = shapley_subset(demo_savings)
        assert alloc.values == (Fraction(5, 2), Fraction(2), Fraction(3, 2))
        assert alloc.method == "exact-subset"

    def test_demo_game_permutation(self, demo_savings):
        alloc = shapley_permutation(demo_savings)
        assert alloc.values == (Fraction(5, 2), Fraction(2), Fraction(3, 2))
        assert alloc.method == "exact-permutation"

    def test_one_player_game(self):
        v = CharacteristicGame(
            support.random_cost_game(1, 1).players, (Fraction(0), Fraction(7))
        )
        assert shapley_subset(v).values == (Fraction(7),)
        assert shapley_permutation(v).values == (Fraction(7),)

    def test_symmetric_two_player_split(self):
        alloc = shapley_permutation(symmetric_pair_game())
        assert alloc.values == (Fraction(2), Fraction(2))

    def test_four_player_game_matches_label_oracle(self, four_player_game):
        v = savings_transform(four_player_game)
        expected = support.oracle_shapley(v.labels(), support.label_values(v))
        for alloc in (shapley_subset(v), shapley_permutation(v)):
            for i, label in enumerate(v.labels()):
                assert alloc.values[i] == expected[label]

    @given(st.integers(0, 10**9), st.integers(2, 6))
    @settings(max_examples=30, deadline=None)
    def test_methods_agree_exactly(self, seed, n):
        v = support.random_characteristic_game(seed, n)
        assert shapley_subset(v).values == shapley_permutation(v).values

    @given(st.integers(0, 10**9), st.integers(2, 5))
    @settings(max_examples=30, deadline=None)
    def test_efficiency_holds_exactly(self, seed, n):
        v = support.random_characteristic_game(seed, n)
        alloc = shapley_subset(v)
        assert alloc.total == v.values[-1]

    def test_permutation_cap(self):
        labels = [f"P{i}" for i in range(11)]
        v = CharacteristicGame(
            build_cost_game(
                labels, {frozenset([x]): 1 for x in labels}, completion="additive"
            ).players,
            (Fraction(0),) * (1 << 11),
        )
        with pytest.raises(PlayerCapError):
            shapley_permutation(v)
        with pytest.raises(PlayerCapError):
            marginal_table(v)


class TestMarginalTable:
    def test_demo_game_rows(self, demo_savings):
        table = marginal_table(demo_savings)
        rows = {table.order_label(r): table.cells[r] for r in range(6)}
        assert rows["ABC"] == (Fraction(0), Fraction(4), Fraction(2))
        assert rows["ACB"] == (Fraction(0), Fraction(3), Fraction(3))
        assert rows["BAC"] == (Fraction(4), Fraction(0), Fraction(2))
        assert rows["BCA"] == (Fraction(4), Fraction(0), Fraction(2))
        assert rows["CAB"] == (Fraction(3), Fraction(3), Fraction(0))
        assert rows["CBA"] == (Fraction(4), Fraction(2), Fraction(0))

    def test_demo_game_totals_and_shapley_row(self, demo_savings):
        table = marginal_table(demo_savings)
        assert table.column_totals == (Fraction(15), Fraction(12), Fraction(9))
        assert table.shapley_row == shapley_subset(demo_savings).values

    def test_row_order_is_lexicographic(self, demo_savings):
        table = marginal_table(demo_savings)
        labels = [table.order_label(r) for r in range(6)]
        assert labels == ["ABC", "ACB", "BAC", "BCA", "CAB", "CBA"]

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_zero_game_all_cells_zero(self, n):
        table = marginal_table(zero_game(n))
        assert all(cell == 0 for row in table.cells for cell in row)

    @given(st.integers(0, 10**9), st.integers(2, 4))
    @settings(max_examples=25, deadline=None)
    def test_rows_telescope_to_grand_value(self, seed, n):
        v = support.random_characteristic_game(seed, n)
        table = marginal_table(v)
        for row in table.cells:
            assert sum(row) == v.values[-1]


class TestCostShares:
    def test_demo_game_shares(self, demo_game, demo_savings):
        shares = cost_shares(demo_game, shapley_subset(demo_savings))
        assert shares.shares == (Fraction(15, 2), Fraction(8), Fraction(17, 2))
        assert shares.total == 24

    def test_additive_game_pays_standalone(self):
        game = build_cost_game(
            ["A", "B", "C"],
            {frozenset("A"): 2, frozenset("B"): 7, frozenset("C"): 1},
            completion="additive",
        )
        shares = cost_shares(game, shapley_subset(savings_transform(game)))
        assert shares.shares == (Fraction(2), Fraction(7), Fraction(1))

    def test_four_player_budget_balance(self, four_player_game):
        alloc = shapley_subset(savings_transform(four_player_game))
        shares = cost_shares(four_player_game, alloc)
        for i in range(4):
            assert shares.shares[i] == four_player_game.singleton_cost(i) - alloc.values[i]
        assert shares.total == four_player_game.cost(Coalition.grand(4))

    def test_rejects_allocation_from_other_game(self, demo_game, four_player_game):
        alien = shapley_subset(savings_transform(four_player_game))
        with pytest.raises(ValueError):
            cost_shares(demo_game, alien)

    def test_rejects_inexact_method(self, demo_game, demo_savings):
        fake = Allocation(
            values=(Fraction(5, 2), Fraction(2), Fraction(3, 2)),
            game_hash=demo_savings.digest,
            method="monte-carlo",
        )
        with pytest.raises(ValueError):
            cost_shares(demo_game, fake)

    @given(st.integers(0, 10**9), st.integers(2, 5))
    @settings(max_examples=25, deadline=None)
    def test_budget_balance_on_random_games(self, seed, n):
        game = support.random_cost_game(seed, n)
        shares = cost_shares(game, shapley_subset(savings_transform(game)))
        assert shares.total == game.costs[-1]


class TestMonteCarlo:
    def test_demo_game_close_to_exact(self, demo_savings):
        est = shapley_monte_carlo(demo_savings, samples=100_000, seed=42)
        exact = (2.5, 2.0, 1.5)
        for got, want in zip(est.values, exact):
            assert abs(got - want) < 0.05

    def test_zero_game_exactly_zero(self):
        est = shapley_monte_carlo(zero_game(4), samples=500, seed=9)
        assert est.values == (0.0, 0.0, 0.0, 0.0)

    def test_same_seed_bit_identical(self, demo_savings):
        a = shapley_monte_carlo(demo_savings, samples=2_000, seed=7)
        b = shapley_monte_carlo(demo_savings, samples=2_000, seed=7)
        assert a == b

    def test_different_seeds_differ(self, demo_savings):
        a = shapley_monte_carlo(demo_savings, samples=2_000, seed=7)
        b = shapley_monte_carlo(demo_savings, samples=2_000, seed=8)
        assert a.values != b.values

    def test_zero_samples_rejected(self, demo_savings):
        with pytest.raises(ValueError):
            shapley_monte_carlo(demo_savings, samples=0, seed=1)

    def test_error_shrinks_with_more_samples(self, demo_savings):
        exact = (2.5, 2.0, 1.5)

        def worst_error(samples):
            est = shapley_monte_carlo(demo_savings, samples=samples, seed=123)
            return max(abs(g - w) for g, w in zip(est.values, exact))

        assert worst_error(100_000) < worst_error(1_000)

    def test_stderr_reported_per_player(self, demo_savings):
        est = shapley_monte_carlo(demo_savings, samples=5_000, seed=3)
        assert len(est.stderr) == 3
        assert all(s > 0 for s in est.stderr)


class TestAxiomChecks:
    def test_efficiency_demo_variants(self, demo_savings):
        digest = demo_savings.digest
        shapley = Allocation((Fraction(5, 2), Fraction(2), Fraction(3, 2)), digest, METHOD_SUBSET)
        equal_split = Allocation((Fraction(2),) * 3, digest, METHOD_SUBSET)
        too_little = Allocation((Fraction(1),) * 3, digest, METHOD_SUBSET)
        assert check_efficiency(demo_savings, shapley)
        assert check_efficiency(demo_savings, equal_split)  # sums to 6, still not Shapley
        assert not check_efficiency(demo_savings, too_little)

    def test_symmetry_fully_symmetric_game(self):
        v = symmetric_pair_game()
        alloc = shapley_subset(v)
        assert check_symmetry(v, 0, 1, alloc) == (True, True)

    def test_symmetry_demo_asymmetric_pairs(self, demo_savings):
        alloc = shapley_subset(demo_savings)
        assert check_symmetry(demo_savings, 0, 2, alloc) == (False, False)
        assert check_symmetry(demo_savings, 0, 1, alloc) == (False, False)

    def test_dummy_injected_player(self):
        # D adds nothing: every coalition containing D is worth the same without it.
        base = support.random_characteristic_game(5, 3)
        labels = list(base.labels()) + ["D"]
        values = [Fraction(0)] * 16
        for mask in range(8):
            values[mask] = base.values[mask]
            values[mask | 8] = base.values[mask]
        players = build_cost_game(
            labels, {frozenset([x]): 1 for x in labels}, completion="additive"
        ).players
        v = CharacteristicGame(players, tuple(values))
        alloc = shapley_subset(v)
        assert check_dummy(v, 3, alloc) == (True, True)
        assert alloc.values[3] == 0

    def test_dummy_demo_contributor(self, demo_savings):
        alloc = shapley_subset(demo_savings)
        assert check_dummy(demo_savings, 0, alloc) == (False, False)

    def test_dummy_zero_game(self):
        v = zero_game(3)
        alloc = shapley_subset(v)
        for i in range(3):
            assert check_dummy(v, i, alloc) == (True, True)

    def test_additivity_with_zero_game(self, demo_savings):
        assert check_additivity(demo_savings, zero_game(3))

    def test_additivity_doubles_with_self(self, demo_savings):
        assert check_additivity(demo_savings, demo_savings)
        doubled = shapley_subset(sum_games(demo_savings, demo_savings))
        assert doubled.values == (Fraction(5), Fraction(4), Fraction(3))

    @given(st.integers(0, 10**9), st.integers(0, 10**9))
    @settings(max_examples=25, deadline=None)
    def test_additivity_random_four_player_pairs(self, seed_v, seed_w):
        v = support.random_characteristic_game(seed_v, 4)
        w = support.random_characteristic_game(seed_w, 4)
        w = CharacteristicGame(v.players, w.values)  # align player sets
        assert check_additivity(v, w)

    def test_additivity_requires_same_players(self, demo_savings):
        with pytest.raises(ValueError):
            sum_games(demo_savings, zero_game(2))
