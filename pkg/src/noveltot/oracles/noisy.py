"""Seeded noisy wrappers around an oracle set, for error-cascade studies.

Each sub-task answer is corrupted with its configured probability: action
proposals swap to a random inadmissible action, successor states gain or
lose one random atom, verifier and novelty verdicts flip. All corruption is
driven by one seeded generator, so runs are reproducible; a rate-0 model is
behaviorally identical to the wrapped set.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core import State
from ..util import seeded_rng
from .base import CONTINUE, GOAL, NO, YES, OracleReply, OracleSet


@dataclass(frozen=True)
class ErrorModel:
    invalid_action_rate: float = 0.0
    wrong_successor_rate: float = 0.0
    verifier_flip_rate: float = 0.0
    novelty_flip_rate: float = 0.0
    seed: int = 0

    def __post_init__(self):
        rates = (
            self.invalid_action_rate,
            self.wrong_successor_rate,
            self.verifier_flip_rate,
            self.novelty_flip_rate,
        )
        if any(not 0.0 <= r <= 1.0 for r in rates):
            raise ValueError("error rates must be in [0, 1]")

    @classmethod
    def uniform(cls, rate: float, seed: int = 0) -> "ErrorModel":
        return cls(rate, rate, rate, rate, seed)


class _NoisyBase:
    def __init__(self, inner, space, rng, rate):
        self.inner = inner
        self.space = space
        self.rng = rng
        self.rate = rate

    def _corrupt(self) -> bool:
        return self.rng.random() < self.rate


class NoisyActionOracle(_NoisyBase):
    def sample(self, node, i: int) -> OracleReply:
        reply = self.inner.sample(node, i)
        if reply.failed or not self._corrupt():
            return reply
        state = node.structured_state
        problem = self.space.problem
        inadmissible = [
            a for a in problem.actions if not a.preconditions <= state.atoms
        ]
        pool = inadmissible or list(problem.actions)
        bad = pool[self.rng.randrange(len(pool))]
        return OracleReply(text=self.space.render_action(bad), action=bad)


class NoisySuccessorOracle(_NoisyBase):
    def map(self, node, action_reply: OracleReply) -> OracleReply:
        reply = self.inner.map(node, action_reply)
        if reply.failed or reply.structured is None or not self._corrupt():
            return reply
        atoms = set(reply.structured.atoms)
        vocabulary = sorted(self._vocabulary() - atoms)
        drop = self.rng.random() < 0.5
        if drop and atoms:
            atoms.discard(sorted(atoms)[self.rng.randrange(len(atoms))])
        elif vocabulary:
            atoms.add(vocabulary[self.rng.randrange(len(vocabulary))])
        corrupted = State.of(atoms)
        return OracleReply(
            text=self.space.render_state(corrupted),
            structured=corrupted,
            action=reply.action,
        )

    def _vocabulary(self) -> set:
        problem = self.space.problem
        vocab = set(problem.initial.atoms) | set(problem.goal)
        for a in problem.actions:
            vocab |= a.preconditions | a.add_effects | a.del_effects
        return vocab


class NoisyVerifierOracle(_NoisyBase):
    def check(self, node, task=None) -> OracleReply:
        reply = self.inner.check(node, task)
        if reply.failed or not self._corrupt():
            return reply
        flipped = CONTINUE if reply.verdict == GOAL else GOAL
        return OracleReply(text=YES if flipped == GOAL else NO, verdict=flipped)


class NoisyNoveltyOracle(_NoisyBase):
    def judge(self, node, history) -> OracleReply:
        reply = self.inner.judge(node, history)
        if reply.failed or not self._corrupt():
            return reply
        flipped = NO if reply.verdict == YES else YES
        return OracleReply(text=flipped, verdict=flipped)


class NoisyDirectOracle(_NoisyBase):
    """Direct mode reuses the successor-style atom corruption on the fused reply."""

    def sample(self, node, i: int) -> OracleReply:
        reply = self.inner.sample(node, i)
        if reply.failed or reply.structured is None or not self._corrupt():
            return reply
        atoms = set(reply.structured.atoms)
        if atoms and self.rng.random() < 0.5:
            atoms.discard(sorted(atoms)[self.rng.randrange(len(atoms))])
        corrupted = State.of(atoms)
        return OracleReply(
            text=self.space.render_state(corrupted),
            structured=corrupted,
            action=reply.action,
        )


def noisy(inner: OracleSet, model: ErrorModel) -> OracleSet:
    """Wrap each sub-task oracle of ``inner`` with seeded corruption.

    Requires a STRIPS-backed oracle set (corruptions are atom-level). The
    wrapped set owns one RNG and must be confined to a single search.
    """
    space = inner.space
    if space is None or not hasattr(space, "problem"):
        raise ValueError("noisy oracles need a ground-problem-backed oracle set")
    rng = seeded_rng("noisy", model.seed)
    return OracleSet(
        name=f"noisy({inner.name})",
        action=NoisyActionOracle(inner.action, space, rng, model.invalid_action_rate),
        successor=NoisySuccessorOracle(
            inner.successor, space, rng, model.wrong_successor_rate
        ),
        direct=NoisyDirectOracle(inner.direct, space, rng, model.wrong_successor_rate),
        verifier=NoisyVerifierOracle(inner.verifier, space, rng, model.verifier_flip_rate),
        novelty=NoisyNoveltyOracle(inner.novelty, space, rng, model.novelty_flip_rate),
        space=space,
    )
