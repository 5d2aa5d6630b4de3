"""Players, coalitions, cost games and savings games.

A cost game assigns every nonempty coalition of players the price of
serving it jointly; the savings game derived from it measures how much a
coalition saves compared to its members contracting alone.  All values
are exact rationals so that downstream allocations can be checked with
exact equality.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Optional, Sequence

#: Largest player count for which full-subset enumeration is allowed (2^n entries).
MAX_ENUM_PLAYERS = 20

Rational = Fraction


class GameBuildError(ValueError):
    """A game definition is malformed; ``key`` names the offending label or coalition."""

    def __init__(self, message: str, key: str | None = None):
        super().__init__(message)
        self.key = key


class PlayerCapError(ValueError):
    """An operation was asked to enumerate beyond its supported player count."""


@dataclass(frozen=True)
class Player:
    """A participant in a game: a contiguous index plus a unique display label."""

    index: int
    label: str


@dataclass(frozen=True, order=True)
class Coalition:
    """A subset of the player ground set, encoded as a bit mask over player indices.

    Equality and ordering are mask-based, so two coalitions with the same
    members compare equal regardless of how they were constructed.
    """

    mask: int

    @classmethod
    def empty(cls) -> "Coalition":
        return cls(0)

    @classmethod
    def of(cls, *indices: int) -> "Coalition":
        return cls.from_indices(indices)

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "Coalition":
        mask = 0
        for i in indices:
            if i < 0:
                raise ValueError(f"player index must be nonnegative, got {i}")
            mask |= 1 << i
        return cls(mask)

    @classmethod
    def grand(cls, n: int) -> "Coalition":
        return cls((1 << n) - 1)

    def __contains__(self, index: int) -> bool:
        return bool(self.mask >> index & 1)

    def __iter__(self) -> Iterator[int]:
        mask = self.mask
        index = 0
        while mask:
            if mask & 1:
                yield index
            mask >>= 1
            index += 1

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __or__(self, other: "Coalition") -> "Coalition":
        return Coalition(self.mask | other.mask)

    def __and__(self, other: "Coalition") -> "Coalition":
        return Coalition(self.mask & other.mask)

    def with_player(self, index: int) -> "Coalition":
        return Coalition(self.mask | 1 << index)

    def without_player(self, index: int) -> "Coalition":
        return Coalition(self.mask & ~(1 << index))

    def issubset(self, other: "Coalition") -> bool:
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other: "Coalition") -> bool:
        return self.mask & other.mask == 0


def _player_tuple(labels: Sequence[str]) -> tuple[Player, ...]:
    if not labels:
        raise GameBuildError("a game needs at least one player")
    seen: set[str] = set()
    for label in labels:
        if not label:
            raise GameBuildError("player labels must be nonempty", key=label)
        if label in seen:
            raise GameBuildError(f"duplicate player label {label!r}", key=label)
        seen.add(label)
    return tuple(Player(i, label) for i, label in enumerate(labels))


def _digest(kind: str, players: tuple[Player, ...], table: tuple[Fraction, ...]) -> str:
    h = hashlib.sha256()
    h.update(kind.encode())
    for p in players:
        h.update(b"\x00" + p.label.encode())
    for value in table:
        h.update(f"|{value.numerator}/{value.denominator}".encode())
    return h.hexdigest()


class _GameBase:
    """Shared lookup helpers for games stored as dense mask-indexed tables."""

    players: tuple[Player, ...]
    _table: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.players)

    @property
    def grand_coalition(self) -> Coalition:
        return Coalition.grand(self.n)

    def player_by_label(self, label: str) -> Player:
        for p in self.players:
            if p.label == label:
                return p
        raise KeyError(label)

    def labels(self) -> tuple[str, ...]:
        return tuple(p.label for p in self.players)

    def coalition_of_labels(self, labels: Iterable[str]) -> Coalition:
        return Coalition.from_indices(self.player_by_label(x).index for x in labels)

    def coalition_labels(self, coalition: Coalition) -> tuple[str, ...]:
        return tuple(self.players[i].label for i in coalition)

    def _check_member(self, coalition: Coalition) -> None:
        if not coalition.issubset(self.grand_coalition):
            raise ValueError(
                f"coalition mask {coalition.mask:#x} is not a subset of the {self.n}-player ground set"
            )


@dataclass(frozen=True)
class CostGame(_GameBase):
    """Total map from coalitions to the nonnegative cost of serving them jointly.

    ``costs[mask]`` holds the cost of the coalition with that bit mask;
    the empty coalition costs zero.  Values are in whatever currency unit
    the caller uses throughout (the shipped example uses millions).
    """

    players: tuple[Player, ...]
    costs: tuple[Fraction, ...]
    process_tag: Optional[str] = None

    def __post_init__(self):
        if len(self.costs) != 1 << self.n:
            raise GameBuildError(
                f"cost table has {len(self.costs)} entries, expected {1 << self.n}"
            )
        if self.costs[0] != 0:
            raise GameBuildError("the empty coalition must cost 0")
        for mask, value in enumerate(self.costs):
            if value < 0:
                raise GameBuildError("costs must be nonnegative", key=self._key(mask))

    def _key(self, mask: int) -> str:
        return ",".join(self.players[i].label for i in Coalition(mask))

    @property
    def _table(self) -> tuple[Fraction, ...]:
        return self.costs

    def cost(self, coalition: Coalition) -> Fraction:
        self._check_member(coalition)
        return self.costs[coalition.mask]

    def singleton_cost(self, index: int) -> Fraction:
        return self.costs[1 << index]

    @cached_property
    def digest(self) -> str:
        return _digest("cost", self.players, self.costs)


@dataclass(frozen=True)
class CharacteristicGame(_GameBase):
    """Savings function over coalitions: worth of cooperating, zero for the empty set."""

    players: tuple[Player, ...]
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != 1 << self.n:
            raise GameBuildError(
                f"value table has {len(self.values)} entries, expected {1 << self.n}"
            )
        if self.values[0] != 0:
            raise GameBuildError("the empty coalition must have value 0")

    @property
    def _table(self) -> tuple[Fraction, ...]:
        return self.values

    def value(self, coalition: Coalition) -> Fraction:
        self._check_member(coalition)
        return self.values[coalition.mask]

    @cached_property
    def digest(self) -> str:
        return _digest("savings", self.players, self.values)


def build_cost_game(
    labels: Sequence[str],
    cost_entries: Mapping[frozenset[str], Fraction | int | str],
    completion: str = "strict",
    process_tag: Optional[str] = None,
) -> CostGame:
    """Assemble a :class:`CostGame` from per-coalition cost entries.

    ``cost_entries`` maps label sets to costs.  Every singleton must be
    priced.  Under the default ``strict`` policy every other nonempty
    coalition must be priced too; under ``additive`` a missing coalition
    is priced as the sum of its members' standalone costs.
    """
    if completion not in ("strict", "additive"):
        raise GameBuildError(f"unknown completion policy {completion!r}")
    players = _player_tuple(labels)
    n = len(players)
    if n > MAX_ENUM_PLAYERS:
        raise PlayerCapError(f"at most {MAX_ENUM_PLAYERS} players supported, got {n}")
    index_of = {p.label: p.index for p in players}

    by_mask: dict[int, Fraction] = {}
    for label_set, raw in cost_entries.items():
        mask = 0
        for label in label_set:
            if label not in index_of:
                raise GameBuildError(
                    f"unknown label {label!r} in coalition key", key=",".join(sorted(label_set))
                )
            mask |= 1 << index_of[label]
        if mask == 0:
            raise GameBuildError("the empty coalition cannot be priced", key="")
        value = Fraction(raw)
        if value < 0:
            raise GameBuildError(
                f"negative cost {value} for coalition", key=",".join(sorted(label_set))
            )
        by_mask[mask] = value

    for p in players:
        if 1 << p.index not in by_mask:
            raise GameBuildError(f"missing singleton cost for {p.label!r}", key=p.label)

    costs = [Fraction(0)] * (1 << n)
    for mask in range(1, 1 << n):
        if mask in by_mask:
            costs[mask] = by_mask[mask]
        elif completion == "additive":
            costs[mask] = sum(
                (by_mask[1 << i] for i in Coalition(mask)), start=Fraction(0)
            )
        else:
            key = ",".join(players[i].label for i in Coalition(mask))
            raise GameBuildError(
                f"missing cost for coalition {{{key}}} under strict completion", key=key
            )
    return CostGame(players, tuple(costs), process_tag=process_tag)


def savings_transform(game: CostGame) -> CharacteristicGame:
    """Turn a cost game into its savings game: what each coalition saves jointly.

    The savings of a coalition are the sum of its members' standalone
    costs minus its joint cost; singletons and the empty set save nothing.
    """
    n = game.n
    values = [Fraction(0)] * (1 << n)
    standalone = [game.costs[1 << i] for i in range(n)]
    for mask in range(1, 1 << n):
        total = sum((standalone[i] for i in Coalition(mask)), start=Fraction(0))
        values[mask] = total - game.costs[mask]
    return CharacteristicGame(game.players, tuple(values))


def is_superadditive(
    game: CharacteristicGame,
) -> tuple[bool, Optional[tuple[Coalition, Coalition]]]:
    """Check v(S∪T) >= v(S)+v(T) for all disjoint S, T; return a violating pair if any.

    Runs over all disjoint pairs (3^n of them), so keep n small.
    """
    n = game.n
    full = (1 << n) - 1
    values = game.values
    for s in range(1, full + 1):
        complement = full & ~s
        t = complement
        while t:
            if values[s | t] < values[s] + values[t]:
                return False, (Coalition(s), Coalition(t))
            t = (t - 1) & complement
    return True, None


def enumerate_coalitions(
    n: int, must_contain: Optional[int] = None
) -> Iterator[Coalition]:
    """Yield every subset of an ``n``-player ground set in ascending mask order.

    With ``must_contain`` set, only subsets containing that player are
    yielded.  Lazily generated, so n=20 streams without building a list.
    """
    if n <= 0:
        raise ValueError(f"player count must be positive, got {n}")
    if n > MAX_ENUM_PLAYERS:
        raise PlayerCapError(f"at most {MAX_ENUM_PLAYERS} players supported, got {n}")
    if must_contain is not None and not 0 <= must_contain < n:
        raise ValueError(f"filter player {must_contain} out of range [0, {n})")
    if must_contain is None:
        for mask in range(1 << n):
            yield Coalition(mask)
    else:
        bit = 1 << must_contain
        for mask in range(1 << n):
            if mask & bit:
                yield Coalition(mask)


def restrict_cost_game(game: CostGame, coalition: Coalition) -> CostGame:
    """The subgame on ``coalition``: its members re-indexed, costs read from ``game``.

    Every cost of a sub-coalition comes straight from the parent game's
    table; nothing is re-estimated.
    """
    game._check_member(coalition)
    if not coalition:
        raise ValueError("cannot restrict to the empty coalition")
    members = list(coalition)
    sub_players = _player_tuple([game.players[i].label for i in members])
    k = len(members)
    costs = [Fraction(0)] * (1 << k)
    for sub_mask in range(1, 1 << k):
        parent = Coalition.from_indices(
            members[j] for j in range(k) if sub_mask >> j & 1
        )
        costs[sub_mask] = game.costs[parent.mask]
    return CostGame(sub_players, tuple(costs), process_tag=game.process_tag)
