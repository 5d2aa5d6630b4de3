"""Builders for the solution, axiom, incentive, and trace documents.

Everything here returns plain JSON-ready dicts; the CLI renders them as
text or emits them verbatim, and the HTTP service returns them as
response bodies.  Keeping both on this one code path is what guarantees
the layers never drift apart.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Any, Mapping, Optional

from .documents import value_entry
from .games import CharacteristicGame, CostGame, savings_transform
from .network import (
    IncentiveReport,
    SimulationEvent,
    SimulationResult,
    block_shares,
)
from .shapley import (
    METHOD_PERMUTATION,
    METHOD_SUBSET,
    Allocation,
    MarginalTable,
    check_dummy,
    check_efficiency,
    check_symmetry,
    cost_shares,
    marginal_table,
    shapley_permutation,
    shapley_subset,
    sum_games,
)
from .stability import budget_report, core_membership, individual_rationality

_METHOD_ALIASES = {
    "subset": METHOD_SUBSET,
    "permutation": METHOD_PERMUTATION,
    METHOD_SUBSET: METHOD_SUBSET,
    METHOD_PERMUTATION: METHOD_PERMUTATION,
}


def normalize_method(method: str) -> str:
    try:
        return _METHOD_ALIASES[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}") from None


def solve_allocation(savings: CharacteristicGame, method: str) -> Allocation:
    if normalize_method(method) == METHOD_PERMUTATION:
        return shapley_permutation(savings)
    return shapley_subset(savings)


def marginal_table_document(table: MarginalTable) -> dict[str, Any]:
    return {
        "players": list(table.player_labels),
        "rows": [
            {
                "order": table.order_label(r),
                "cells": [value_entry(c) for c in table.cells[r]],
            }
            for r in range(len(table.orders))
        ],
        "totals": [value_entry(t) for t in table.column_totals],
        "shapley": [value_entry(s) for s in table.shapley_row],
    }


def axiom_document(savings: CharacteristicGame, allocation: Allocation) -> dict[str, Any]:
    """The full four-axiom checker output for one game.

    Additivity needs a second game, so it is exercised against the game
    itself: the value of the doubled game must be the doubled value.
    """
    symmetry = []
    labels = savings.labels()
    for i, j in itertools.combinations(range(savings.n), 2):
        symmetric, equal_value = check_symmetry(savings, i, j, allocation)
        symmetry.append(
            {
                "players": [labels[i], labels[j]],
                "symmetric": symmetric,
                "equal_value": equal_value,
            }
        )
    dummies = []
    for i in range(savings.n):
        dummy, zero_value = check_dummy(savings, i, allocation)
        dummies.append({"player": labels[i], "dummy": dummy, "zero_value": zero_value})
    doubled = solve_allocation(sum_games(savings, savings), METHOD_SUBSET)
    additive = all(
        doubled.values[i] == 2 * allocation.values[i] for i in range(savings.n)
    )
    return {
        "efficiency": check_efficiency(savings, allocation),
        "symmetry": symmetry,
        "dummy": dummies,
        "additivity_with_self": additive,
    }


def build_solution(
    cost_game: CostGame,
    budgets: Optional[Mapping[str, Fraction]] = None,
    method: str = "subset",
    include_table: bool = False,
    include_axioms: bool = False,
    include_core: bool = False,
    include_budgets: bool = False,
) -> dict[str, Any]:
    """Solve a cost game and assemble the full solution document."""
    savings = savings_transform(cost_game)
    allocation = solve_allocation(savings, method)
    shares = cost_shares(cost_game, allocation)
    rationality = individual_rationality(cost_game, shares)
    labels = cost_game.labels()

    doc: dict[str, Any] = {
        "players": list(labels),
        "method": allocation.method,
        "shapley": {
            label: value_entry(allocation.values[i]) for i, label in enumerate(labels)
        },
        "cost_shares": {
            label: value_entry(shares.shares[i]) for i, label in enumerate(labels)
        },
        "total_cost": value_entry(shares.total),
        "axioms": {"efficiency": check_efficiency(savings, allocation)},
        "rationality": {
            row.label: row.rational for row in rationality.players
        },
        "all_rational": rationality.all_rational,
    }
    if cost_game.process_tag:
        doc["process_tag"] = cost_game.process_tag
    if include_table:
        doc["marginal_table"] = marginal_table_document(marginal_table(savings))
    if include_axioms:
        doc["axioms"] = axiom_document(savings, allocation)
    if include_core:
        core = core_membership(savings, allocation)
        doc["core"] = {"in_core": core.in_core}
        if core.blocking_coalition is not None:
            doc["core"]["blocking_coalition"] = list(
                savings.coalition_labels(core.blocking_coalition)
            )
            doc["core"]["blocking_excess"] = value_entry(core.blocking_excess)
    if include_budgets:
        if budgets is None:
            raise ValueError("no budgets available: the game file has no budgets section")
        report = budget_report(shares, budgets)
        doc["budgets"] = {
            "players": {
                row.label: {
                    "budget": value_entry(row.budget),
                    "share": value_entry(row.share),
                    "variance": value_entry(row.variance),
                    "over_budget": row.over_budget,
                }
                for row in report.players
            },
            "corrective_flags": list(report.corrective_flags),
        }
    return doc


def incentive_document(report: IncentiveReport) -> dict[str, Any]:
    return {
        "coalition": list(report.member_labels()),
        "members": [
            {
                "label": m.label,
                "standalone_cost": value_entry(m.standalone_cost),
                "share": value_entry(m.share),
                "accept": m.accept,
            }
            for m in report.members
        ],
        "viable": report.viable,
        "total": value_entry(report.total),
        "structure_version": report.structure_version,
    }


def event_document(event: SimulationEvent) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "seq": event.seq,
        "round": event.round,
        "kind": event.kind,
        "coalition": list(event.coalition_labels),
    }
    if event.shares is not None:
        doc["shares"] = [value_entry(s) for s in event.shares]
    if event.stable is not None:
        doc["stable"] = event.stable
    return doc


def trace_document(
    result: SimulationResult,
    policy: str,
    seed: int,
    max_rounds: int,
) -> dict[str, Any]:
    """The full trace of a finished or in-flight simulation."""
    network = result.network
    game = network.cost_game
    shares = block_shares(network)
    return {
        "policy": policy,
        "seed": seed,
        "max_rounds": max_rounds,
        "rounds": result.rounds,
        "stable": result.stable,
        "events": [event_document(e) for e in result.events],
        "final_structure": [
            list(game.coalition_labels(block)) for block in network.blocks()
        ],
        "final_shares": {
            game.players[i].label: value_entry(shares[i]) for i in sorted(shares)
        },
        "stages": {a.label: a.stage.name.lower() for a in network.actors},
    }
