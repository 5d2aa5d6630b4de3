"""Request and response models for the HTTP API."""

from __future__ import annotations

from typing import Any, Literal, Optional, Union

from pydantic import BaseModel, Field

Number = Union[str, int, float]


class GameIn(BaseModel):
    players: list[str]
    costs: dict[str, Number]
    budgets: Optional[dict[str, Number]] = None
    process_tag: Optional[str] = None
    completion: Literal["strict", "additive"] = "strict"


class GameCreated(BaseModel):
    id: str


class ValueOut(BaseModel):
    exact: str
    decimal: str


class WhatIfIn(BaseModel):
    coalition: list[str] = Field(min_length=1)
    sim_id: Optional[str] = None
    structure_version: Optional[int] = None


class MemberOut(BaseModel):
    label: str
    standalone_cost: ValueOut
    share: ValueOut
    accept: bool


class IncentiveOut(BaseModel):
    coalition: list[str]
    members: list[MemberOut]
    viable: bool
    total: ValueOut
    structure_version: int


class TableRowOut(BaseModel):
    order: str
    cells: list[ValueOut]


class TableOut(BaseModel):
    players: list[str]
    rows: list[TableRowOut]
    totals: list[ValueOut]
    shapley: list[ValueOut]


class CoreOut(BaseModel):
    in_core: bool
    blocking_coalition: Optional[list[str]] = None
    blocking_excess: Optional[ValueOut] = None


class BudgetPlayerOut(BaseModel):
    budget: ValueOut
    share: ValueOut
    variance: ValueOut
    over_budget: bool


class BudgetsOut(BaseModel):
    players: dict[str, BudgetPlayerOut]
    corrective_flags: list[str]


class SolutionOut(BaseModel):
    players: list[str]
    method: str
    process_tag: Optional[str] = None
    shapley: dict[str, ValueOut]
    cost_shares: dict[str, ValueOut]
    total_cost: ValueOut
    axioms: dict[str, Any]
    rationality: dict[str, bool]
    all_rational: bool
    marginal_table: Optional[TableOut] = None
    core: Optional[CoreOut] = None
    budgets: Optional[BudgetsOut] = None


class SimulationIn(BaseModel):
    policy: Literal["greedy-merge", "random"] = "greedy-merge"
    seed: int = 0
    max_rounds: int = Field(default=100, ge=1)


class SimulationCreated(BaseModel):
    sim_id: str


class EventOut(BaseModel):
    seq: int
    round: int
    kind: str
    coalition: list[str]
    shares: Optional[list[ValueOut]] = None
    stable: Optional[bool] = None


class TraceOut(BaseModel):
    policy: str
    seed: int
    max_rounds: int
    rounds: int
    stable: bool
    done: bool
    structure_version: int
    events: list[EventOut]
    final_structure: list[list[str]]
    final_shares: dict[str, ValueOut]
    stages: dict[str, str]


class StepOut(TraceOut):
    progressed: bool
