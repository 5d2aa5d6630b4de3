"""Independent brute-force oracles and random game builders used across tests.

Everything here deliberately works on label sets and permutations of
labels, not on bit masks, so it shares no code path with the library it
is checking.
"""

import itertools
import math
import random
from fractions import Fraction

from fairshare.games import CharacteristicGame, CostGame, build_cost_game


def label_values(game) -> dict[frozenset, Fraction]:
    """Re-key a game's table by frozensets of labels."""
    table = game.costs if isinstance(game, CostGame) else game.values
    labels = game.labels()
    out = {}
    for mask, value in enumerate(table):
        members = frozenset(labels[i] for i in range(game.n) if mask >> i & 1)
        out[members] = value
    return out


def oracle_shapley(labels, values: dict[frozenset, Fraction]) -> dict[str, Fraction]:
    """Permutation-average Shapley value over label sets."""
    acc = {x: Fraction(0) for x in labels}
    for perm in itertools.permutations(labels):
        seen = frozenset()
        for x in perm:
            grown = seen | {x}
            acc[x] += values[grown] - values[seen]
            seen = grown
    n_fact = math.factorial(len(labels))
    return {x: total / n_fact for x, total in acc.items()}


def oracle_in_core(labels, values: dict[frozenset, Fraction], payoff: dict[str, Fraction]) -> bool:
    for size in range(1, len(labels) + 1):
        for combo in itertools.combinations(labels, size):
            if sum(payoff[x] for x in combo) < values[frozenset(combo)]:
                return False
    return True


def oracle_superadditive(labels, values: dict[frozenset, Fraction]) -> bool:
    subsets = [frozenset(c) for r in range(1, len(labels) + 1)
               for c in itertools.combinations(labels, r)]
    for s in subsets:
        for t in subsets:
            if s & t:
                continue
            if values[s | t] < values[s] + values[t]:
                return False
    return True


def random_cost_game(seed: int, n: int) -> CostGame:
    rng = random.Random(seed)
    labels = [chr(ord("A") + i) for i in range(n)]
    entries = {}
    for size in range(1, n + 1):
        for combo in itertools.combinations(labels, size):
            entries[frozenset(combo)] = Fraction(rng.randint(0, 120), rng.randint(1, 4))
    return build_cost_game(labels, entries)


def random_characteristic_game(seed: int, n: int) -> CharacteristicGame:
    """A random savings game; coalition values may be negative."""
    rng = random.Random(seed)
    labels = [chr(ord("A") + i) for i in range(n)]
    base = random_cost_game(rng.randint(0, 2**30), n)
    values = [Fraction(0)]
    for _ in range(1, 1 << n):
        values.append(Fraction(rng.randint(-60, 120), rng.randint(1, 4)))
    return CharacteristicGame(base.players, tuple(values))


def subadditive_cost_game(seed: int, n: int) -> CostGame:
    """Subadditive by construction: C(S) = max of member weights + c per head."""
    rng = random.Random(seed)
    labels = [chr(ord("A") + i) for i in range(n)]
    weights = {x: Fraction(rng.randint(1, 40), rng.randint(1, 3)) for x in labels}
    per_head = Fraction(rng.randint(0, 10), rng.randint(1, 3))
    entries = {}
    for size in range(1, n + 1):
        for combo in itertools.combinations(labels, size):
            entries[frozenset(combo)] = max(weights[x] for x in combo) + per_head * size
    return build_cost_game(labels, entries)


def strictly_subadditive_cost_game(seed: int, n: int) -> CostGame:
    """Every disjoint merge strictly saves: C(S) = c|S| - d*|S|(|S|-1)/2 with d > 0."""
    rng = random.Random(seed)
    labels = [chr(ord("A") + i) for i in range(n)]
    d = Fraction(rng.randint(1, 3), rng.randint(1, 2))
    c = d * n + rng.randint(5, 20)  # keeps every cost positive
    entries = {}
    for size in range(1, n + 1):
        for combo in itertools.combinations(labels, size):
            entries[frozenset(combo)] = c * size - d * size * (size - 1) / 2
    return build_cost_game(labels, entries)
