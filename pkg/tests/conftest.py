import itertools
from pathlib import Path

import pytest

from fairshare.games import build_cost_game, savings_transform

GAME_FILE = Path(__file__).parent.parent / "games" / "backup-sites.json"

DEMO_COSTS = {
    frozenset("A"): 10,
    frozenset("B"): 10,
    frozenset("C"): 10,
    frozenset("AB"): 16,
    frozenset("AC"): 17,
    frozenset("BC"): 18,
    frozenset("ABC"): 24,
}

# Four symmetric players: any pair contracts for 16, any triple for 22.
FOUR_PLAYER_COSTS = {
    frozenset(combo): cost
    for size, cost in ((1, 10), (2, 16), (3, 22))
    for combo in itertools.combinations("ABCD", size)
}
FOUR_PLAYER_COSTS[frozenset("ABCD")] = 27


@pytest.fixture(scope="session")
def demo_text() -> str:
    return GAME_FILE.read_text()


@pytest.fixture
def demo_game():
    return build_cost_game(["A", "B", "C"], DEMO_COSTS)


@pytest.fixture
def demo_savings(demo_game):
    return savings_transform(demo_game)


@pytest.fixture
def four_player_game():
    return build_cost_game(list("ABCD"), FOUR_PLAYER_COSTS)
