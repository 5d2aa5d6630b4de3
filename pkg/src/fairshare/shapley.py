"""Exact and sampled Shapley allocations, marginal tables, and axiom checks.

Two exact routes are provided: the subset-weighted sum and full
permutation enumeration.  They must agree, and that agreement is used as
a cross-check throughout the test suite.  A seeded Monte Carlo sampler
covers games too large to enumerate.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from .games import (
    CharacteristicGame,
    CostGame,
    PlayerCapError,
    savings_transform,
)

#: Permutation-based routes materialize n! orders; capped well below the subset cap.
MAX_PERMUTATION_PLAYERS = 10
MAX_SUBSET_PLAYERS = 20

METHOD_SUBSET = "exact-subset"
METHOD_PERMUTATION = "exact-permutation"
METHOD_MONTE_CARLO = "monte-carlo"


@dataclass(frozen=True)
class Allocation:
    """Per-player savings values for one game, tagged with how they were computed."""

    values: tuple[Fraction, ...]
    game_hash: str
    method: str

    def value_of(self, index: int) -> Fraction:
        return self.values[index]

    @property
    def total(self) -> Fraction:
        return sum(self.values, start=Fraction(0))


@dataclass(frozen=True)
class MarginalTable:
    """Marginal contributions per arrival order, one row per permutation.

    Rows are in lexicographic order of the underlying index permutations.
    ``cells[r][i]`` is player ``i``'s marginal contribution in order
    ``orders[r]``; the final allocation is the column totals divided by n!.
    """

    player_labels: tuple[str, ...]
    orders: tuple[tuple[int, ...], ...]
    cells: tuple[tuple[Fraction, ...], ...]
    column_totals: tuple[Fraction, ...]
    shapley_row: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.player_labels)

    def order_label(self, row: int) -> str:
        return "".join(self.player_labels[i] for i in self.orders[row])


@dataclass(frozen=True)
class CostShares:
    """What each player actually pays: standalone cost minus allocated savings."""

    labels: tuple[str, ...]
    shares: tuple[Fraction, ...]
    total: Fraction
    game_hash: str

    def share_of(self, index: int) -> Fraction:
        return self.shares[index]


@dataclass(frozen=True)
class MonteCarloEstimate:
    """Sampled allocation: per-player means and standard errors over random orders."""

    values: tuple[float, ...]
    samples: int
    seed: int
    stderr: tuple[float, ...]


def _check_subset_cap(n: int) -> None:
    if n > MAX_SUBSET_PLAYERS:
        raise PlayerCapError(
            f"subset enumeration supports at most {MAX_SUBSET_PLAYERS} players, got {n}"
        )


def _check_permutation_cap(n: int) -> None:
    if n > MAX_PERMUTATION_PLAYERS:
        raise PlayerCapError(
            f"permutation enumeration supports at most {MAX_PERMUTATION_PLAYERS} players, got {n}"
        )


def shapley_subset(game: CharacteristicGame) -> Allocation:
    """Exact Shapley value via the subset-weighted marginal sum.

    Each player's value is the sum over coalitions containing them of
    (|S|-1)!(n-|S|)!/n! times their marginal contribution to S.
    """
    n = game.n
    _check_subset_cap(n)
    values = game.values
    fact = [math.factorial(k) for k in range(n + 1)]
    weight = [Fraction(0)] + [
        Fraction(fact[s - 1] * fact[n - s], fact[n]) for s in range(1, n + 1)
    ]
    acc = [Fraction(0)] * n
    for mask in range(1, 1 << n):
        size = mask.bit_count()
        w = weight[size]
        v_s = values[mask]
        remaining = mask
        while remaining:
            bit = remaining & -remaining
            i = bit.bit_length() - 1
            acc[i] += w * (v_s - values[mask ^ bit])
            remaining ^= bit
    return Allocation(tuple(acc), game.digest, METHOD_SUBSET)


def shapley_permutation(game: CharacteristicGame) -> Allocation:
    """Exact Shapley value by averaging marginal contributions over all n! orders."""
    n = game.n
    _check_permutation_cap(n)
    values = game.values
    acc = [Fraction(0)] * n
    for order in itertools.permutations(range(n)):
        mask = 0
        for i in order:
            grown = mask | 1 << i
            acc[i] += values[grown] - values[mask]
            mask = grown
    n_fact = math.factorial(n)
    return Allocation(
        tuple(total / n_fact for total in acc), game.digest, METHOD_PERMUTATION
    )


def marginal_table(game: CharacteristicGame) -> MarginalTable:
    """The full per-permutation marginal contribution table for a game."""
    n = game.n
    _check_permutation_cap(n)
    values = game.values
    orders = []
    rows = []
    totals = [Fraction(0)] * n
    for order in itertools.permutations(range(n)):
        mask = 0
        row = [Fraction(0)] * n
        for i in order:
            grown = mask | 1 << i
            row[i] = values[grown] - values[mask]
            totals[i] += row[i]
            mask = grown
        orders.append(order)
        rows.append(tuple(row))
    n_fact = math.factorial(n)
    return MarginalTable(
        player_labels=game.labels(),
        orders=tuple(orders),
        cells=tuple(rows),
        column_totals=tuple(totals),
        shapley_row=tuple(t / n_fact for t in totals),
    )


def cost_shares(cost_game: CostGame, allocation: Allocation) -> CostShares:
    """Payable shares: each player's standalone cost minus their allocated savings.

    The allocation must be an exact solution of this game's savings game;
    shares then balance the grand coalition's cost exactly.
    """
    if allocation.method not in (METHOD_SUBSET, METHOD_PERMUTATION):
        raise ValueError(f"cost shares need an exact allocation, got {allocation.method!r}")
    savings = savings_transform(cost_game)
    if allocation.game_hash != savings.digest:
        raise ValueError("allocation was not produced from this cost game")
    shares = tuple(
        cost_game.singleton_cost(i) - allocation.values[i] for i in range(cost_game.n)
    )
    return CostShares(
        labels=cost_game.labels(),
        shares=shares,
        total=sum(shares, start=Fraction(0)),
        game_hash=cost_game.digest,
    )


def shapley_monte_carlo(
    game: CharacteristicGame, samples: int, seed: int
) -> MonteCarloEstimate:
    """Estimate the Shapley value by sampling uniformly random arrival orders.

    Fully deterministic for a fixed (game, samples, seed) triple.  Values
    are scaled to a common integer denominator so the accumulation is
    exact; only the final mean and standard error are floats.
    """
    n = game.n
    _check_subset_cap(n)
    if samples < 1:
        raise ValueError("at least one sample is required")
    denom = math.lcm(*(v.denominator for v in game.values))
    scaled = [int(v * denom) for v in game.values]
    sums = [0] * n
    sq_sums = [0] * n
    players = list(range(n))
    rng = random.Random(seed)
    for _ in range(samples):
        rng.shuffle(players)
        mask = 0
        for i in players:
            grown = mask | 1 << i
            marginal = scaled[grown] - scaled[mask]
            sums[i] += marginal
            sq_sums[i] += marginal * marginal
            mask = grown
    means = [Fraction(s, samples * denom) for s in sums]
    stderr = []
    for i in range(n):
        if samples < 2:
            stderr.append(0.0)
            continue
        mean_sq = float(sq_sums[i]) / (denom * denom * samples)
        variance = (mean_sq - float(means[i]) ** 2) * samples / (samples - 1)
        stderr.append(math.sqrt(max(variance, 0.0) / samples))
    return MonteCarloEstimate(
        values=tuple(float(m) for m in means),
        samples=samples,
        seed=seed,
        stderr=tuple(stderr),
    )


def check_efficiency(game: CharacteristicGame, allocation: Allocation) -> bool:
    """True iff the allocation distributes exactly the grand coalition's worth."""
    if len(allocation.values) != game.n:
        raise ValueError("allocation and game have different player counts")
    return allocation.total == game.values[-1]


def check_symmetry(
    game: CharacteristicGame, i: int, j: int, allocation: Allocation
) -> tuple[bool, bool]:
    """Whether players i and j contribute identically, and whether their values match.

    For an exact Shapley allocation the first implies the second.
    """
    if i == j:
        raise ValueError("symmetry check needs two distinct players")
    n = game.n
    values = game.values
    bit_i, bit_j = 1 << i, 1 << j
    others = [k for k in range(n) if k != i and k != j]
    symmetric = True
    for sub in range(1 << len(others)):
        mask = 0
        for pos, k in enumerate(others):
            if sub >> pos & 1:
                mask |= 1 << k
        if values[mask | bit_i] != values[mask | bit_j]:
            symmetric = False
            break
    equal_value = allocation.values[i] == allocation.values[j]
    return symmetric, equal_value


def check_dummy(
    game: CharacteristicGame, i: int, allocation: Allocation
) -> tuple[bool, bool]:
    """Whether player i adds nothing to any coalition, and whether their value is zero."""
    n = game.n
    values = game.values
    bit = 1 << i
    dummy = True
    for mask in range(1 << n):
        if mask & bit:
            continue
        if values[mask | bit] != values[mask]:
            dummy = False
            break
    return dummy, allocation.values[i] == 0


def sum_games(v: CharacteristicGame, w: CharacteristicGame) -> CharacteristicGame:
    """The coalition-wise sum of two games over the same player set."""
    if v.labels() != w.labels():
        raise ValueError("games must share the same player set")
    return CharacteristicGame(
        v.players, tuple(a + b for a, b in zip(v.values, w.values))
    )


def check_additivity(v: CharacteristicGame, w: CharacteristicGame) -> bool:
    """True iff the Shapley value of the sum game is the sum of the Shapley values."""
    combined = shapley_subset(sum_games(v, w))
    phi_v = shapley_subset(v)
    phi_w = shapley_subset(w)
    return all(
        combined.values[i] == phi_v.values[i] + phi_w.values[i] for i in range(v.n)
    )
