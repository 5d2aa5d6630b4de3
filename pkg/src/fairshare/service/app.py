"""FastAPI application: games, solutions, what-if proposals, stepped simulations.

The service is the only stateful layer; every computation is delegated
to the pure library modules so that a stored game's solution is exactly
the library's answer for the same document.
"""

from __future__ import annotations

import os
from contextlib import asynccontextmanager
from pathlib import Path
from typing import Any, Optional

from fastapi import FastAPI, HTTPException, Query
from fastapi.responses import HTMLResponse, JSONResponse
from fastapi.staticfiles import StaticFiles

from ..documents import DocumentError, GameDocument
from ..games import PlayerCapError
from ..network import (
    ProposalError,
    SimulationResult,
    StaleReportError,
    evaluate_proposal,
    new_network,
)
from ..solve import build_solution, incentive_document, trace_document
from .schemas import (
    GameCreated,
    GameIn,
    IncentiveOut,
    SimulationCreated,
    SimulationIn,
    SolutionOut,
    StepOut,
    TraceOut,
    WhatIfIn,
)
from .store import NotFoundError, SimulationSession, Store

_PLACEHOLDER = """<!doctype html>
<html><head><title>fairshare</title></head>
<body><h1>fairshare service</h1>
<p>The web UI is not built. The API is live; see <a href="/docs">/docs</a>.</p>
</body></html>
"""


def _default_static_dir() -> Optional[Path]:
    env = os.environ.get("FAIRSHARE_STATIC")
    if env:
        return Path(env)
    candidate = Path("frontend") / "dist"
    return candidate if candidate.is_dir() else None


def _session_trace(session: SimulationSession) -> dict[str, Any]:
    sim = session.simulation
    result = SimulationResult(
        network=sim.network, stable=sim.network.stable, rounds=sim.network.round
    )
    doc = trace_document(result, sim.policy, sim.seed, sim.max_rounds)
    doc["done"] = sim.done
    doc["structure_version"] = sim.network.structure_version
    return doc


def create_app(
    store: Optional[Store] = None,
    static_dir: Optional[str | Path] = None,
    snapshot_path: Optional[str | Path] = None,
) -> FastAPI:
    store = store if store is not None else Store()
    snapshot_path = snapshot_path or os.environ.get("FAIRSHARE_SNAPSHOT")

    if snapshot_path:
        store.load_snapshot(snapshot_path)

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        yield
        if snapshot_path:
            store.snapshot(snapshot_path)

    app = FastAPI(title="fairshare", version="0.1.0", lifespan=lifespan)
    app.state.store = store

    @app.exception_handler(DocumentError)
    async def _document_error(request, exc: DocumentError):
        return JSONResponse(
            status_code=400, content={"detail": str(exc), "field": exc.field}
        )

    @app.exception_handler(PlayerCapError)
    async def _cap_error(request, exc: PlayerCapError):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.exception_handler(NotFoundError)
    async def _not_found(request, exc: NotFoundError):
        return JSONResponse(status_code=404, content={"detail": exc.args[0]})

    @app.exception_handler(StaleReportError)
    async def _stale(request, exc: StaleReportError):
        return JSONResponse(status_code=409, content={"detail": str(exc)})

    @app.post("/games", response_model=GameCreated, status_code=201)
    def create_game(body: GameIn) -> GameCreated:
        document = GameDocument.from_mapping(body.model_dump())
        document.to_cost_game()  # reject invalid games at the door
        stored = store.add_game(document)
        return GameCreated(id=stored.id)

    @app.get("/games/{game_id}")
    def read_game(game_id: str) -> dict[str, Any]:
        return store.get_game(game_id).document.to_mapping()

    @app.get(
        "/games/{game_id}/solution",
        response_model=SolutionOut,
        response_model_exclude_none=True,
    )
    def solve_game(
        game_id: str,
        method: str = Query(default="subset"),
        table: bool = Query(default=False),
        axioms: bool = Query(default=False),
        core: bool = Query(default=False),
        budgets: bool = Query(default=False),
    ):
        stored = store.get_game(game_id)
        try:
            doc = build_solution(
                stored.game,
                budgets=stored.budgets,
                method=method,
                include_table=table,
                include_axioms=axioms,
                include_core=core,
                include_budgets=budgets,
            )
        except ValueError as exc:
            if isinstance(exc, PlayerCapError):
                raise
            raise HTTPException(status_code=400, detail=str(exc)) from None
        return doc

    @app.post(
        "/games/{game_id}/whatif",
        response_model=IncentiveOut,
    )
    def what_if(game_id: str, body: WhatIfIn):
        stored = store.get_game(game_id)
        if body.sim_id is not None:
            session = store.get_simulation(body.sim_id)
            if session.game_id != game_id:
                raise HTTPException(
                    status_code=409,
                    detail="simulation belongs to a different game",
                )
            network = session.simulation.network
            if (
                body.structure_version is not None
                and body.structure_version != network.structure_version
            ):
                raise StaleReportError(
                    "simulation structure changed since this what-if was prepared"
                )
        else:
            network = new_network(stored.game)
        try:
            coalition = stored.game.coalition_of_labels(body.coalition)
        except KeyError as exc:
            raise HTTPException(
                status_code=400, detail=f"unknown player label {exc.args[0]!r}"
            ) from None
        try:
            report = evaluate_proposal(network, coalition)
        except ProposalError as exc:
            status = 409 if body.sim_id is not None else 400
            raise HTTPException(status_code=status, detail=str(exc)) from None
        return incentive_document(report)

    @app.post(
        "/games/{game_id}/simulations", response_model=SimulationCreated, status_code=201
    )
    def create_simulation(game_id: str, body: SimulationIn):
        session = store.add_simulation(
            game_id, policy=body.policy, seed=body.seed, max_rounds=body.max_rounds
        )
        return SimulationCreated(sim_id=session.id)

    @app.get(
        "/simulations/{sim_id}/trace",
        response_model=TraceOut,
        response_model_exclude_none=True,
    )
    def read_trace(sim_id: str):
        session = store.get_simulation(sim_id)
        with session.lock:
            return _session_trace(session)

    @app.post(
        "/simulations/{sim_id}/step",
        response_model=StepOut,
        response_model_exclude_none=True,
    )
    def step_simulation(sim_id: str):
        session = store.get_simulation(sim_id)
        with session.lock:
            progressed = session.simulation.step()
            doc = _session_trace(session)
        doc["progressed"] = progressed
        return doc

    static = Path(static_dir) if static_dir is not None else _default_static_dir()
    if static is not None and static.is_dir():
        app.mount("/", StaticFiles(directory=static, html=True), name="ui")
    else:

        @app.get("/", response_class=HTMLResponse, include_in_schema=False)
        def placeholder() -> str:
            return _PLACEHOLDER

    return app
