"""Shapley-value cost allocation and incentive-driven coalition formation.

The library solves cost-sharing games exactly (rational arithmetic
throughout), judges the stability of the result, and simulates how a
network of actors merges into coalitions when fair cost savings are the
incentive.  A JSON file format, a CLI, and an HTTP service wrap it.
"""

from .documents import DocumentError, GameDocument, parse_game
from .games import (
    CharacteristicGame,
    Coalition,
    CostGame,
    GameBuildError,
    Player,
    PlayerCapError,
    build_cost_game,
    enumerate_coalitions,
    is_superadditive,
    restrict_cost_game,
    savings_transform,
)
from .network import (
    Actor,
    ActorKind,
    ActorNetwork,
    FormationSimulation,
    IncentiveReport,
    ProposalError,
    SimulationEvent,
    SimulationResult,
    StaleReportError,
    TranslationStage,
    enroll,
    evaluate_proposal,
    inject_defection,
    mobilize,
    new_network,
    propose_interessement,
    simulate_formation,
)
from .shapley import (
    Allocation,
    CostShares,
    MarginalTable,
    MonteCarloEstimate,
    check_additivity,
    check_dummy,
    check_efficiency,
    check_symmetry,
    cost_shares,
    marginal_table,
    shapley_monte_carlo,
    shapley_permutation,
    shapley_subset,
)
from .stability import (
    BudgetReport,
    CoreReport,
    RationalityReport,
    budget_report,
    core_membership,
    individual_rationality,
)

__version__ = "0.1.0"

__all__ = [
    "Actor",
    "ActorKind",
    "ActorNetwork",
    "Allocation",
    "BudgetReport",
    "CharacteristicGame",
    "Coalition",
    "CoreReport",
    "CostGame",
    "CostShares",
    "DocumentError",
    "FormationSimulation",
    "GameBuildError",
    "GameDocument",
    "IncentiveReport",
    "MarginalTable",
    "MonteCarloEstimate",
    "Player",
    "PlayerCapError",
    "ProposalError",
    "RationalityReport",
    "SimulationEvent",
    "SimulationResult",
    "StaleReportError",
    "TranslationStage",
    "build_cost_game",
    "budget_report",
    "check_additivity",
    "check_dummy",
    "check_efficiency",
    "check_symmetry",
    "core_membership",
    "cost_shares",
    "enroll",
    "enumerate_coalitions",
    "evaluate_proposal",
    "individual_rationality",
    "inject_defection",
    "is_superadditive",
    "marginal_table",
    "mobilize",
    "new_network",
    "parse_game",
    "propose_interessement",
    "restrict_cost_game",
    "savings_transform",
    "shapley_monte_carlo",
    "shapley_permutation",
    "shapley_subset",
    "simulate_formation",
]
