"""The game file format and the JSON document shapes shared by CLI and service.

A game document is a JSON object with an ordered ``players`` list, a
``costs`` map keyed by comma-joined label sets, optional ``budgets`` and
``process_tag``, and a ``completion`` policy.  Values are exact rational
strings ("24", "5/2") or finite decimals ("2.5"); parsing canonicalizes
keys and values so that parse -> serialize -> parse is the identity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping, Optional

from .games import Coalition, CostGame, GameBuildError, build_cost_game


class DocumentError(ValueError):
    """A document is malformed; ``field`` points at the offending entry."""

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


def parse_value(text: Any, field: str) -> Fraction:
    """Parse a rational ("p/q"), integer, or finite-decimal value exactly."""
    if isinstance(text, bool):
        raise DocumentError(f"value for {field!r} must be a number string", field=field)
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        text = repr(text)
    if not isinstance(text, str):
        raise DocumentError(f"value for {field!r} must be a number string", field=field)
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise DocumentError(
            f"cannot parse {text!r} for {field!r} as a rational or decimal", field=field
        ) from None


def format_exact(value: Fraction) -> str:
    """Canonical exact rendering: an integer or a reduced "p/q"."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value: Fraction) -> str:
    """Human-friendly decimal: exact when the expansion is finite, else shortest float."""
    den = value.denominator
    twos = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    fives = 0
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return repr(float(value))
    digits = max(twos, fives)
    if digits == 0:
        return str(value.numerator)
    scaled = abs(value.numerator) * 10**digits // value.denominator
    text = str(scaled).rjust(digits + 1, "0")
    sign = "-" if value < 0 else ""
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


def value_entry(value: Fraction) -> dict[str, str]:
    """The wire form of one rational: exact string plus decimal rendering."""
    return {"exact": format_exact(value), "decimal": format_decimal(value)}


def _canonical_key(labels: tuple[str, ...], order: Mapping[str, int]) -> str:
    return ",".join(sorted(labels, key=lambda x: order[x]))


@dataclass(frozen=True)
class GameDocument:
    """A parsed, canonicalized game file."""

    players: tuple[str, ...]
    costs: dict[str, str]
    budgets: Optional[dict[str, str]] = None
    process_tag: Optional[str] = None
    completion: str = "strict"

    @classmethod
    def parse(cls, text: str) -> "GameDocument":
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from None
        if not isinstance(raw, dict):
            raise DocumentError("document must be a JSON object")
        return cls.from_mapping(raw)

    @classmethod
    def from_mapping(cls, raw: Mapping[str, Any]) -> "GameDocument":
        for required in ("players", "costs"):
            if required not in raw:
                raise DocumentError(f"missing {required!r} section", field=required)
        players = raw["players"]
        if (
            not isinstance(players, (list, tuple))
            or not players
            or not all(isinstance(x, str) for x in players)
        ):
            raise DocumentError("'players' must be a nonempty list of labels", field="players")
        for label in players:
            if not label or label != label.strip():
                raise DocumentError(
                    f"bad player label {label!r}", field="players"
                )
            if "," in label:
                raise DocumentError(
                    f"player label {label!r} may not contain a comma", field="players"
                )
        if len(set(players)) != len(players):
            raise DocumentError("duplicate player label", field="players")
        order = {label: i for i, label in enumerate(players)}

        costs_raw = raw["costs"]
        if not isinstance(costs_raw, dict):
            raise DocumentError("'costs' must be a map", field="costs")
        costs: dict[str, str] = {}
        for key, value in costs_raw.items():
            labels = tuple(part.strip() for part in str(key).split(","))
            for label in labels:
                if label not in order:
                    raise DocumentError(
                        f"unknown label {label!r} in coalition key {key!r}", field=str(key)
                    )
            if len(set(labels)) != len(labels):
                raise DocumentError(
                    f"repeated label in coalition key {key!r}", field=str(key)
                )
            canonical = _canonical_key(labels, order)
            if canonical in costs:
                raise DocumentError(
                    f"coalition {canonical!r} priced more than once", field=str(key)
                )
            costs[canonical] = format_exact(parse_value(value, f"costs[{key}]"))

        budgets: Optional[dict[str, str]] = None
        if raw.get("budgets") is not None:
            budgets_raw = raw["budgets"]
            if not isinstance(budgets_raw, dict):
                raise DocumentError("'budgets' must be a map", field="budgets")
            budgets = {}
            for label, value in budgets_raw.items():
                if label not in order:
                    raise DocumentError(
                        f"unknown label {label!r} in budgets", field=f"budgets[{label}]"
                    )
                budgets[label] = format_exact(parse_value(value, f"budgets[{label}]"))

        process_tag = raw.get("process_tag")
        if process_tag is not None and not isinstance(process_tag, str):
            raise DocumentError("'process_tag' must be text", field="process_tag")

        completion = raw.get("completion", "strict")
        if completion not in ("strict", "additive"):
            raise DocumentError(
                f"completion must be 'strict' or 'additive', got {completion!r}",
                field="completion",
            )
        return cls(
            players=tuple(players),
            costs=costs,
            budgets=budgets,
            process_tag=process_tag,
            completion=completion,
        )

    def to_mapping(self) -> dict[str, Any]:
        order = {label: i for i, label in enumerate(self.players)}

        def key_rank(key: str) -> tuple[int, tuple[int, ...]]:
            indices = tuple(order[x] for x in key.split(","))
            return len(indices), indices

        out: dict[str, Any] = {
            "players": list(self.players),
            "costs": {k: self.costs[k] for k in sorted(self.costs, key=key_rank)},
        }
        if self.budgets is not None:
            out["budgets"] = {
                label: self.budgets[label]
                for label in self.players
                if label in self.budgets
            }
        if self.process_tag is not None:
            out["process_tag"] = self.process_tag
        out["completion"] = self.completion
        return out

    def serialize(self) -> str:
        return json.dumps(self.to_mapping(), indent=2) + "\n"

    def to_cost_game(self) -> CostGame:
        entries = {
            frozenset(key.split(",")): Fraction(value)
            for key, value in self.costs.items()
        }
        try:
            return build_cost_game(
                list(self.players),
                entries,
                completion=self.completion,
                process_tag=self.process_tag,
            )
        except GameBuildError as exc:
            raise DocumentError(str(exc), field=exc.key) from None

    def budget_map(self) -> Optional[dict[str, Fraction]]:
        if self.budgets is None:
            return None
        return {label: Fraction(value) for label, value in self.budgets.items()}

    @classmethod
    def from_game(
        cls, game: CostGame, budgets: Optional[Mapping[str, Fraction]] = None
    ) -> "GameDocument":
        labels = game.labels()
        costs = {}
        for mask in range(1, 1 << game.n):
            key = ",".join(labels[i] for i in Coalition(mask))
            costs[key] = format_exact(game.costs[mask])
        return cls(
            players=labels,
            costs=costs,
            budgets=(
                {label: format_exact(Fraction(v)) for label, v in budgets.items()}
                if budgets is not None
                else None
            ),
            process_tag=game.process_tag,
            completion="strict",
        )


def parse_game(text: str) -> tuple[CostGame, Optional[dict[str, Fraction]]]:
    """Parse a game file into a cost game plus any budgets it carries."""
    document = GameDocument.parse(text)
    return document.to_cost_game(), document.budget_map()
