"""Stability diagnostics: who has an incentive to join, and can anyone block.

Individual rationality compares each player's assigned share with their
standalone cost; core membership sweeps every coalition for one that
could do better on its own; the budget report compares shares with
caller-supplied budgets and flags where corrective action is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from .games import CharacteristicGame, Coalition, CostGame, PlayerCapError
from .shapley import Allocation, CostShares, check_efficiency

MAX_CORE_PLAYERS = 20


@dataclass(frozen=True)
class PlayerRationality:
    label: str
    standalone_cost: Fraction
    share: Fraction
    savings: Fraction
    rational: bool


@dataclass(frozen=True)
class RationalityReport:
    """Per-player incentive check: a share is rational when it does not exceed going alone."""

    players: tuple[PlayerRationality, ...]
    all_rational: bool


@dataclass(frozen=True)
class CoreReport:
    """Core membership verdict with the strongest objection when there is one."""

    in_core: bool
    blocking_coalition: Optional[Coalition] = None
    blocking_excess: Optional[Fraction] = None


@dataclass(frozen=True)
class PlayerBudget:
    label: str
    budget: Fraction
    share: Fraction
    variance: Fraction
    over_budget: bool


@dataclass(frozen=True)
class BudgetReport:
    """Share-vs-budget comparison; flagged players need corrective action."""

    players: tuple[PlayerBudget, ...]
    corrective_flags: tuple[str, ...]


def individual_rationality(
    cost_game: CostGame, shares: CostShares
) -> RationalityReport:
    """Check every player pays no more than their standalone cost (weak inequality)."""
    if shares.game_hash != cost_game.digest:
        raise ValueError("shares were not derived from this cost game")
    rows = []
    all_rational = True
    for player in cost_game.players:
        standalone = cost_game.singleton_cost(player.index)
        share = shares.shares[player.index]
        rational = share <= standalone
        all_rational = all_rational and rational
        rows.append(
            PlayerRationality(
                label=player.label,
                standalone_cost=standalone,
                share=share,
                savings=standalone - share,
                rational=rational,
            )
        )
    return RationalityReport(players=tuple(rows), all_rational=all_rational)


def core_membership(game: CharacteristicGame, allocation: Allocation) -> CoreReport:
    """Sweep all coalitions for one whose worth exceeds what its members receive.

    Requires an efficient allocation.  On failure reports the coalition
    with the largest excess, ties broken by smallest mask.
    """
    if game.n > MAX_CORE_PLAYERS:
        raise PlayerCapError(
            f"core sweep supports at most {MAX_CORE_PLAYERS} players, got {game.n}"
        )
    if not check_efficiency(game, allocation):
        raise ValueError("core membership is only defined for efficient allocations")
    values = game.values
    n = game.n
    worst_excess = Fraction(0)
    worst_mask: Optional[int] = None
    payoff = [Fraction(0)] * (1 << n)
    for mask in range(1, 1 << n):
        low_bit = mask & -mask
        payoff[mask] = payoff[mask ^ low_bit] + allocation.values[low_bit.bit_length() - 1]
        excess = values[mask] - payoff[mask]
        if excess > worst_excess:
            worst_excess = excess
            worst_mask = mask
    if worst_mask is None:
        return CoreReport(in_core=True)
    return CoreReport(
        in_core=False,
        blocking_coalition=Coalition(worst_mask),
        blocking_excess=worst_excess,
    )


def budget_report(
    shares: CostShares, budgets: Mapping[str, Fraction | int | str]
) -> BudgetReport:
    """Compare each player's share against their budget and flag overruns."""
    rows = []
    flags = []
    for idx, label in enumerate(shares.labels):
        if label not in budgets:
            raise ValueError(f"missing budget entry for player {label!r}")
        budget = Fraction(budgets[label])
        if budget < 0:
            raise ValueError(f"budget for {label!r} must be nonnegative")
        share = shares.shares[idx]
        over = share > budget
        if over:
            flags.append(label)
        rows.append(
            PlayerBudget(
                label=label,
                budget=budget,
                share=share,
                variance=share - budget,
                over_budget=over,
            )
        )
    return BudgetReport(players=tuple(rows), corrective_flags=tuple(flags))
