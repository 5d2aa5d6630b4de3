"""In-memory store for games and running simulations.

Games are immutable once created.  Each simulation is a single-writer
resource guarded by its own lock, so concurrent step requests serialize.
The game store can optionally be snapshotted to a JSON file on shutdown
and reloaded on start; simulations are ephemeral and never persisted.
"""

from __future__ import annotations

import json
import secrets
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from ..documents import GameDocument
from ..games import CostGame
from ..network import FormationSimulation


@dataclass(frozen=True)
class StoredGame:
    id: str
    document: GameDocument
    game: CostGame
    budgets: Optional[dict[str, Fraction]]


@dataclass
class SimulationSession:
    id: str
    game_id: str
    simulation: FormationSimulation
    lock: threading.Lock = field(default_factory=threading.Lock)


class NotFoundError(KeyError):
    pass


def _new_id() -> str:
    return secrets.token_hex(8)


class Store:
    def __init__(self):
        self._lock = threading.Lock()
        self._games: dict[str, StoredGame] = {}
        self._simulations: dict[str, SimulationSession] = {}

    def add_game(self, document: GameDocument) -> StoredGame:
        game = document.to_cost_game()
        stored = StoredGame(
            id=_new_id(),
            document=document,
            game=game,
            budgets=document.budget_map(),
        )
        with self._lock:
            self._games[stored.id] = stored
        return stored

    def get_game(self, game_id: str) -> StoredGame:
        try:
            return self._games[game_id]
        except KeyError:
            raise NotFoundError(f"no game with id {game_id!r}") from None

    def add_simulation(
        self, game_id: str, policy: str, seed: int, max_rounds: int
    ) -> SimulationSession:
        stored = self.get_game(game_id)
        session = SimulationSession(
            id=_new_id(),
            game_id=stored.id,
            simulation=FormationSimulation(
                stored.game, policy=policy, max_rounds=max_rounds, seed=seed
            ),
        )
        with self._lock:
            self._simulations[session.id] = session
        return session

    def get_simulation(self, sim_id: str) -> SimulationSession:
        try:
            return self._simulations[sim_id]
        except KeyError:
            raise NotFoundError(f"no simulation with id {sim_id!r}") from None

    def snapshot(self, path: str | Path) -> None:
        payload = {
            "games": {
                stored.id: stored.document.to_mapping()
                for stored in self._games.values()
            }
        }
        Path(path).write_text(json.dumps(payload, indent=2) + "\n")

    def load_snapshot(self, path: str | Path) -> int:
        path = Path(path)
        if not path.exists():
            return 0
        payload = json.loads(path.read_text())
        count = 0
        for game_id, mapping in payload.get("games", {}).items():
            document = GameDocument.from_mapping(mapping)
            stored = StoredGame(
                id=game_id,
                document=document,
                game=document.to_cost_game(),
                budgets=document.budget_map(),
            )
            with self._lock:
                self._games[stored.id] = stored
            count += 1
        return count
