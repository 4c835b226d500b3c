"""Ground-truth oracles backed by the exact simulator of a search space.

The action oracle samples round-robin over the canonical applicable-action
list, the successor oracle applies the transition function, the verifier
checks goal satisfaction, and the novelty oracle answers from duplicate
detection (default) or an exact novelty table at a configurable bound.
"""

from __future__ import annotations

from ..core import PreconditionViolation
from ..iw.novelty import ABOVE_K, NoveltyTable, novelty, register
from ..pddl import NoMatch, normalize_text
from .base import CONTINUE, GOAL, NO, YES, OracleReply, OracleSet


class ExactActionOracle:
    def __init__(self, space):
        self.space = space

    def sample_count(self, node) -> int:
        """Samples needed to enumerate the whole answer space."""
        state = node.structured_state
        if state is None:
            return 0
        return len(self.space.successors(state))

    def sample(self, node, i: int) -> OracleReply:
        state = node.structured_state
        if state is None:
            return OracleReply(error="exact action oracle needs a structured state")
        actions = [a for a, _ in self.space.successors(state)]
        if not actions:
            return OracleReply(error="no applicable actions")
        action = actions[i % len(actions)]
        return OracleReply(text=self.space.render_action(action), action=action)


class ExactSuccessorOracle:
    def __init__(self, space):
        self.space = space

    def map(self, node, action_reply: OracleReply) -> OracleReply:
        state = node.structured_state
        if state is None:
            return OracleReply(error="exact successor oracle needs a structured state")
        action = action_reply.action
        if action is None:
            try:
                action = self.space.parse_action(action_reply.text)
            except NoMatch:
                return OracleReply(error=f"unparseable action: {action_reply.text!r}")
        try:
            succ = self.space.apply(state, action)
        except PreconditionViolation as exc:
            return OracleReply(error=str(exc))
        return OracleReply(
            text=self.space.render_state(succ), structured=succ, action=action
        )


class ExactDirectOracle:
    """Action generation and successor mapping fused into one exact step."""

    def __init__(self, space):
        self.space = space

    def sample_count(self, node) -> int:
        state = node.structured_state
        if state is None:
            return 0
        return len(self.space.successors(state))

    def sample(self, node, i: int) -> OracleReply:
        state = node.structured_state
        if state is None:
            return OracleReply(error="exact direct oracle needs a structured state")
        steps = self.space.successors(state)
        if not steps:
            return OracleReply(error="no applicable actions")
        action, succ = steps[i % len(steps)]
        return OracleReply(
            text=self.space.render_state(succ),
            structured=succ,
            action=action,
            meta={"action_text": self.space.render_action(action)},
        )


class ExactVerifierOracle:
    def __init__(self, space):
        self.space = space

    def check(self, node, task=None) -> OracleReply:
        state = node.structured_state
        if state is None:
            try:
                state = self.space.parse_state(node.content)
            except NoMatch:
                return OracleReply(verdict=CONTINUE, error="unparseable state")
        verdict = GOAL if self.space.is_goal(state) else CONTINUE
        return OracleReply(text=YES if verdict == GOAL else NO, verdict=verdict)


class ExactNoveltyOracle:
    """Novelty judge over the kept-state history.

    With ``k=None`` it is plain duplicate detection: a state already in the
    history is not novel. With an integer ``k`` it rebuilds a novelty table
    from the history's feature sets and answers from exact novelty.
    """

    def __init__(self, space, k: int | None = None):
        self.space = space
        self.k = k

    def judge(self, node, history) -> OracleReply:
        if self.k is None:
            seen = {normalize_text(h.content) for h in history}
            fresh = normalize_text(node.content) not in seen
            return OracleReply(text=YES if fresh else NO, verdict=YES if fresh else NO)
        state = node.structured_state
        if state is None:
            return OracleReply(error="exact novelty oracle needs a structured state")
        table = NoveltyTable(self.k)
        have_any = False
        for h in history:
            if h.structured_state is None:
                continue
            register(self.space.features(h.structured_state), table)
            have_any = True
        if not have_any:
            return OracleReply(text=YES, verdict=YES)  # everything is novel vs nothing
        value = novelty(self.space.features(state), table)
        fresh = value is not ABOVE_K
        return OracleReply(text=YES if fresh else NO, verdict=YES if fresh else NO)


def exact_oracles(space, novelty_k: int | None = None) -> OracleSet:
    """The full ground-truth oracle bundle for a simulator-backed space."""
    return OracleSet(
        name="exact",
        action=ExactActionOracle(space),
        successor=ExactSuccessorOracle(space),
        direct=ExactDirectOracle(space),
        verifier=ExactVerifierOracle(space),
        novelty=ExactNoveltyOracle(space, novelty_k),
        space=space,
    )
