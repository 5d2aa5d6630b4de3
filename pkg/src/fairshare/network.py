"""Actor-network coalition building driven by cost-saving incentives.

Actors start alone, are drawn into proposals by the shares a joint
contract would give them, commit by merging their blocks, and the
network stabilizes when no merge of existing blocks can make anyone
strictly better off.  Each actor carries a translation stage that only
moves forward: problematization on creation, interessement when a viable
proposal touches it, enrollment when its block commits, mobilization on
the closing sweep.  Defection is the one explicit reset.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .games import Coalition, CostGame, restrict_cost_game, savings_transform
from .shapley import cost_shares, shapley_subset


class TranslationStage(enum.IntEnum):
    PROBLEMATIZATION = 0
    INTERESSEMENT = 1
    ENROLLMENT = 2
    MOBILIZATION = 3


class ActorKind(enum.Enum):
    HUMAN = "human"
    NON_HUMAN = "non-human"


class StaleReportError(RuntimeError):
    """The network structure changed after this report was computed."""


class ProposalError(ValueError):
    """A proposal violates the structure policy or names unknown players."""


@dataclass
class Actor:
    """A network participant; the kind is fixed, the stage evolves."""

    index: int
    label: str
    kind: ActorKind
    stage: TranslationStage = TranslationStage.PROBLEMATIZATION

    def advance(self, stage: TranslationStage) -> None:
        if stage > self.stage:
            self.stage = stage


@dataclass(frozen=True)
class MemberIncentive:
    label: str
    standalone_cost: Fraction
    share: Fraction
    accept: bool


@dataclass(frozen=True)
class IncentiveReport:
    """What a proposed coalition would cost each member, and who would sign.

    A member accepts when its share does not exceed going alone; the
    proposal is viable when everyone accepts.  Shares always sum to the
    proposed coalition's joint cost.
    """

    proposed: Coalition
    members: tuple[MemberIncentive, ...]
    viable: bool
    structure_version: int
    recorded: bool = False

    @property
    def total(self) -> Fraction:
        return sum((m.share for m in self.members), start=Fraction(0))

    def member_labels(self) -> tuple[str, ...]:
        return tuple(m.label for m in self.members)


@dataclass(frozen=True)
class SimulationEvent:
    """One entry of the append-only network history."""

    seq: int
    round: int
    kind: str  # proposal | acceptance | rejection | enrollment | mobilization | defection
    coalition_labels: tuple[str, ...]
    shares: Optional[tuple[Fraction, ...]] = None
    stable: Optional[bool] = None


class ActorNetwork:
    """Mutable single-writer state: actors, the current partition, and its history."""

    def __init__(self, cost_game: CostGame, actors: list[Actor]):
        self.cost_game = cost_game
        self.actors = actors
        self.structure: list[Coalition] = [
            Coalition.of(a.index) for a in actors
        ]
        self.history: list[SimulationEvent] = []
        self.round = 0
        self.structure_version = 0
        self.stable = False
        self._seq = 0

    @property
    def n(self) -> int:
        return len(self.actors)

    def blocks(self) -> tuple[Coalition, ...]:
        return tuple(self.structure)

    def block_of(self, index: int) -> Coalition:
        for block in self.structure:
            if index in block:
                return block
        raise KeyError(index)

    def actor_by_label(self, label: str) -> Actor:
        for actor in self.actors:
            if actor.label == label:
                return actor
        raise KeyError(label)

    def record(self, kind: str, coalition: Coalition,
               shares: Optional[tuple[Fraction, ...]] = None,
               stable: Optional[bool] = None) -> SimulationEvent:
        event = SimulationEvent(
            seq=self._seq,
            round=self.round,
            kind=kind,
            coalition_labels=self.cost_game.coalition_labels(coalition),
            shares=shares,
            stable=stable,
        )
        self._seq += 1
        self.history.append(event)
        return event

    def _replace_blocks(self, merged: Coalition) -> None:
        self.structure = sorted(
            [b for b in self.structure if b.isdisjoint(merged)] + [merged]
        )
        self.structure_version += 1


def new_network(
    cost_game: CostGame, kinds: Optional[dict[str, ActorKind]] = None
) -> ActorNetwork:
    """A fresh network on a cost game: every actor alone and problematizing."""
    kinds = kinds or {}
    actors = [
        Actor(p.index, p.label, kinds.get(p.label, ActorKind.HUMAN))
        for p in cost_game.players
    ]
    return ActorNetwork(cost_game, actors)


def block_shares(network: ActorNetwork) -> dict[int, Fraction]:
    """Each actor's current payable share within its own block's subgame."""
    shares: dict[int, Fraction] = {}
    for block in network.structure:
        members = list(block)
        if len(members) == 1:
            shares[members[0]] = network.cost_game.singleton_cost(members[0])
            continue
        sub = restrict_cost_game(network.cost_game, block)
        alloc = shapley_subset(savings_transform(sub))
        paid = cost_shares(sub, alloc)
        for local, global_index in enumerate(members):
            shares[global_index] = paid.shares[local]
    return shares


def evaluate_proposal(network: ActorNetwork, coalition: Coalition) -> IncentiveReport:
    """Price a candidate coalition without touching the network.

    The subgame on the coalition is solved exactly; each member's share
    is compared with its standalone cost.  The coalition must be a union
    of whole current blocks.
    """
    if not coalition:
        raise ProposalError("cannot propose the empty coalition")
    if not coalition.issubset(network.cost_game.grand_coalition):
        raise ProposalError("proposal names players outside the game")
    covered = Coalition.empty()
    for block in network.structure:
        if block.issubset(coalition):
            covered = covered | block
        elif not block.isdisjoint(coalition):
            raise ProposalError(
                "proposal must be a union of whole current blocks; "
                f"it splits block {{{','.join(network.cost_game.coalition_labels(block))}}}"
            )
    assert covered == coalition
    sub = restrict_cost_game(network.cost_game, coalition)
    alloc = shapley_subset(savings_transform(sub))
    paid = cost_shares(sub, alloc)
    members = []
    for local, player in enumerate(sub.players):
        standalone = sub.singleton_cost(local)
        share = paid.shares[local]
        members.append(
            MemberIncentive(
                label=player.label,
                standalone_cost=standalone,
                share=share,
                accept=share <= standalone,
            )
        )
    return IncentiveReport(
        proposed=coalition,
        members=tuple(members),
        viable=all(m.accept for m in members),
        structure_version=network.structure_version,
    )


def propose_interessement(
    network: ActorNetwork, coalition: Coalition
) -> IncentiveReport:
    """Announce a proposal: record it, and draw members of a viable one forward."""
    report = evaluate_proposal(network, coalition)
    shares = tuple(m.share for m in report.members)
    network.record("proposal", coalition, shares=shares)
    if report.viable:
        network.record("acceptance", coalition, shares=shares)
        for index in coalition:
            network.actors[index].advance(TranslationStage.INTERESSEMENT)
    else:
        network.record("rejection", coalition, shares=shares)
    return IncentiveReport(
        proposed=report.proposed,
        members=report.members,
        viable=report.viable,
        structure_version=report.structure_version,
        recorded=True,
    )


def enroll(network: ActorNetwork, report: IncentiveReport) -> ActorNetwork:
    """Commit a viable proposal: merge its blocks and enroll its members."""
    if not report.recorded:
        raise ProposalError("enroll requires a report announced via propose_interessement")
    if not report.viable:
        raise ProposalError("cannot enroll a non-viable proposal")
    if report.structure_version != network.structure_version:
        raise StaleReportError(
            "network structure changed since this proposal was computed"
        )
    network._replace_blocks(report.proposed)
    for index in report.proposed:
        network.actors[index].advance(TranslationStage.ENROLLMENT)
    network.record(
        "enrollment", report.proposed, shares=tuple(m.share for m in report.members)
    )
    return network


def destabilizing_merges(
    network: ActorNetwork,
) -> list[tuple[Fraction, Coalition, IncentiveReport]]:
    """All pairwise block merges that are viable and strictly improve someone.

    Returned as (savings gain, merged coalition, report), ordered by
    descending gain then ascending mask, so the head is the greedy pick.
    """
    current = block_shares(network)
    cost = network.cost_game
    candidates = []
    blocks = network.structure
    for a in range(len(blocks)):
        for b in range(a + 1, len(blocks)):
            merged = blocks[a] | blocks[b]
            report = evaluate_proposal(network, merged)
            if not report.viable:
                continue
            member_indices = list(merged)
            improves = any(
                m.share < current[i]
                for m, i in zip(report.members, member_indices)
            )
            if not improves:
                continue
            joint = cost.cost(blocks[a]) + cost.cost(blocks[b]) - cost.cost(merged)
            candidates.append((joint, merged, report))
    candidates.sort(key=lambda item: (-item[0], item[1].mask))
    return candidates


def mobilize(network: ActorNetwork) -> ActorNetwork:
    """Gather enrolled actors and test whether the structure has settled."""
    enrolled = [
        a for a in network.actors if a.stage >= TranslationStage.ENROLLMENT
    ]
    if not enrolled:
        raise ProposalError("nothing is enrolled yet")
    for actor in enrolled:
        actor.advance(TranslationStage.MOBILIZATION)
    network.stable = not destabilizing_merges(network)
    mobilized = Coalition.from_indices(a.index for a in enrolled)
    network.record("mobilization", mobilized, stable=network.stable)
    return network


def inject_defection(network: ActorNetwork, label: str) -> ActorNetwork:
    """Externally injected abandon: the actor's block dissolves into singletons."""
    actor = network.actor_by_label(label)
    block = network.block_of(actor.index)
    network.structure = sorted(
        [b for b in network.structure if b != block]
        + [Coalition.of(i) for i in block]
    )
    network.structure_version += 1
    actor.stage = TranslationStage.PROBLEMATIZATION
    network.stable = False
    network.record("defection", Coalition.of(actor.index))
    return network


@dataclass
class SimulationResult:
    """Outcome of a formation run; ``stable`` is False when rounds ran out first."""

    network: ActorNetwork
    stable: bool
    rounds: int

    @property
    def events(self) -> tuple[SimulationEvent, ...]:
        return tuple(self.network.history)


class FormationSimulation:
    """Round-by-round driver: propose the chosen merge, enroll it, mobilize.

    The same instance backs both one-shot runs and externally stepped
    runs, so stepping to the end reproduces a full run exactly.
    """

    POLICIES = ("greedy-merge", "random")

    def __init__(
        self,
        cost_game: CostGame,
        policy: str = "greedy-merge",
        max_rounds: int = 100,
        seed: int = 0,
        kinds: Optional[dict[str, ActorKind]] = None,
    ):
        if policy not in self.POLICIES:
            raise ValueError(f"unknown policy {policy!r}")
        if max_rounds < 1:
            raise ValueError("max_rounds must be at least 1")
        self.policy = policy
        self.max_rounds = max_rounds
        self.seed = seed
        self.network = new_network(cost_game, kinds=kinds)
        self._rng = random.Random(seed)

    @property
    def done(self) -> bool:
        return self.network.stable or self.network.round >= self.max_rounds

    def step(self) -> bool:
        """Run one negotiation round; returns False once the network is settled."""
        if self.done:
            return False
        candidates = destabilizing_merges(self.network)
        if not candidates:
            self.network.stable = True
            return False
        if self.policy == "greedy-merge":
            _, merged, _ = candidates[0]
        else:
            by_mask = sorted(candidates, key=lambda item: item[1].mask)
            _, merged, _ = self._rng.choice(by_mask)
        self.network.round += 1
        report = propose_interessement(self.network, merged)
        enroll(self.network, report)
        mobilize(self.network)
        return True

    def run(self) -> SimulationResult:
        while self.step():
            pass
        return SimulationResult(
            network=self.network,
            stable=self.network.stable,
            rounds=self.network.round,
        )


def simulate_formation(
    cost_game: CostGame,
    policy: str = "greedy-merge",
    max_rounds: int = 100,
    seed: int = 0,
) -> SimulationResult:
    """Run coalition formation to stability or until rounds are exhausted."""
    return FormationSimulation(cost_game, policy=policy, max_rounds=max_rounds, seed=seed).run()
