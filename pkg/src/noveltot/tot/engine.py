"""Thought-tree search over pluggable oracles.

The engine interprets each thought as a state, with the task's initial state
at the root. Expansion either asks for the next state directly (Direct) or
samples candidate actions and maps each to a successor (ESA). Every generated
child is goal-verified first, then optionally submitted to the novelty oracle
against the kept-state history and pruned on a negative verdict. The same
engine runs with exact, noisy or LLM oracles; it is single-threaded per
search so seeded runs are bit-reproducible.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from time import perf_counter

from ..oracles.base import (
    CONTINUE,
    GOAL,
    NO,
    UNPARSEABLE,
    YES,
    OracleReply,
    OracleSet,
    OracleUnavailable,
    TokenUsage,
    ZERO_USAGE,
)
from ..pddl import normalize_text

logger = logging.getLogger(__name__)

BFS = "bfs"
DFS = "dfs"
DIRECT = "direct"
ESA = "esa"

KEPT = "kept"
PRUNED = "pruned"
GOAL_STATUS = "goal"
FAILED = "failed"

SOLVED = "solved"
DEPTH_EXHAUSTED = "depth_exhausted"
FRONTIER_EXHAUSTED = "frontier_exhausted"
ORACLE_ERROR = "oracle_error"

SUBTASKS = ("action", "successor", "direct", "verify", "novelty")


@dataclass(frozen=True)
class ToTConfig:
    """Search parameters.

    ``samples`` (m) is the number of oracle draws per expansion. When None it
    defaults to ``branch_factor``, except that oracles which can enumerate
    their answer space (the exact simulator oracles expose ``sample_count``)
    are sampled exhaustively. Direct mode keeps at most ``branch_factor``
    deduplicated children; ESA keeps every deduplicated sampled action.
    """

    traversal: str = DFS
    max_depth: int = 8
    branch_factor: int = 2
    mode: str = ESA
    novelty_pruning: bool = False
    history_window: int = 30
    samples: int | None = None
    temperatures: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.traversal not in (BFS, DFS):
            raise ValueError(f"traversal must be '{BFS}' or '{DFS}'")
        if self.mode not in (DIRECT, ESA):
            raise ValueError(f"mode must be '{DIRECT}' or '{ESA}'")
        if self.max_depth < 1 or self.branch_factor < 1:
            raise ValueError("max_depth and branch_factor must be >= 1")
        if self.samples is not None and self.samples < 1:
            raise ValueError("samples must be >= 1")

    def m_for(self, oracle, node) -> int:
        if self.samples is not None:
            return self.samples
        counter = getattr(oracle, "sample_count", None)
        if counter is not None:
            return max(self.branch_factor, counter(node))
        return self.branch_factor


@dataclass(frozen=True)
class ToTTask:
    """Root thought plus goal description; structured state when simulator-backed."""

    root_text: str
    goal_text: str = ""
    root_state: object | None = None
    name: str = "task"


@dataclass
class ThoughtNode:
    id: int
    parent_id: int | None
    depth: int
    content: str
    structured_state: object | None = None
    producing_action: str | None = None
    token_cost: TokenUsage = ZERO_USAGE
    status: str = KEPT

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "parent_id": self.parent_id,
            "depth": self.depth,
            "content": self.content,
            "producing_action": self.producing_action,
            "status": self.status,
            "token_cost": self.token_cost.to_dict(),
        }


@dataclass(frozen=True)
class ToTStats:
    generated: int  # nodes created, root included
    expanded: int
    pruned: int
    failed: int
    total_usage: TokenUsage
    usage_by_subtask: dict
    queries: int
    wall_ms: float


@dataclass(frozen=True)
class ToTOutcome:
    status: str  # solved | failed
    reason: str | None  # None | depth_exhausted | frontier_exhausted | oracle_error
    answer: str | None  # plan text (one action per line) or final-thought chain
    path: tuple[ThoughtNode, ...]
    stats: ToTStats
    nodes: tuple[ThoughtNode, ...]

    @property
    def solved(self) -> bool:
        return self.status == SOLVED


class _Accounting:
    def __init__(self, transcript):
        self.transcript = transcript
        self.total = ZERO_USAGE
        self.by_subtask = {name: ZERO_USAGE for name in SUBTASKS}
        self.queries = 0

    def add(self, subtask: str, reply: OracleReply, node_id: int | None = None) -> None:
        self.total = self.total + reply.usage
        self.by_subtask[subtask] = self.by_subtask[subtask] + reply.usage
        self.queries += 1
        if self.transcript is not None:
            self.transcript.record(
                "oracle_query",
                subtask=subtask,
                node_id=node_id,
                prompt=reply.prompt,
                system=reply.system,
                response=reply.text,
                verdict=reply.verdict,
                error=reply.error,
                usage=reply.usage.to_dict(),
                **reply.meta,
            )


def tot_search(
    task: ToTTask, config: ToTConfig, oracles: OracleSet, transcript=None
) -> ToTOutcome:
    """Run one thought-tree search; never raises for oracle failures."""
    start = perf_counter()
    acct = _Accounting(transcript)
    nodes: list[ThoughtNode] = []
    kept_history: list[ThoughtNode] = []
    depth_capped = False

    def new_node(parent, content, structured, action_text, usage) -> ThoughtNode:
        node = ThoughtNode(
            id=len(nodes),
            parent_id=parent.id if parent is not None else None,
            depth=parent.depth + 1 if parent is not None else 0,
            content=content,
            structured_state=structured,
            producing_action=action_text,
            token_cost=usage,
        )
        nodes.append(node)
        return node

    def finish(status, reason, goal_node=None) -> ToTOutcome:
        wall = (perf_counter() - start) * 1000.0
        path: tuple[ThoughtNode, ...] = ()
        answer = None
        if goal_node is not None:
            chain = []
            cur = goal_node
            while cur is not None:
                chain.append(cur)
                cur = nodes[cur.parent_id] if cur.parent_id is not None else None
            path = tuple(reversed(chain))
            steps = [n.producing_action for n in path[1:]]
            if all(s is not None for s in steps):
                answer = "\n".join(steps)
            else:
                answer = "\n".join(n.content for n in path[1:]) or path[0].content
        stats = ToTStats(
            generated=len(nodes),
            expanded=expanded,
            pruned=sum(1 for n in nodes if n.status == PRUNED),
            failed=sum(1 for n in nodes if n.status == FAILED),
            total_usage=acct.total,
            usage_by_subtask={k: v.to_dict() for k, v in acct.by_subtask.items()},
            queries=acct.queries,
            wall_ms=wall,
        )
        if transcript is not None:
            for n in nodes:
                transcript.record("node", **n.to_dict())
            transcript.record(
                "outcome", task=task.name, status=status, reason=reason, answer=answer,
                generated=stats.generated, expanded=stats.expanded, pruned=stats.pruned,
                total_tokens=stats.total_usage.total, queries=stats.queries,
            )
        return ToTOutcome(status, reason, answer, path, stats, tuple(nodes))

    expanded = 0
    try:
        root = new_node(None, task.root_text, task.root_state, None, ZERO_USAGE)
        verdict_reply = oracles.verifier.check(root, task)
        acct.add("verify", verdict_reply, root.id)
        if verdict_reply.verdict == GOAL:
            root.status = GOAL_STATUS
            return finish(SOLVED, None, root)
        kept_history.append(root)

        frontier: deque[ThoughtNode] = deque([root])
        pop = frontier.popleft if config.traversal == BFS else frontier.pop

        while frontier:
            node = pop()
            if node.depth >= config.max_depth:
                depth_capped = True
                continue
            expanded += 1
            children = _expand(node, task, config, oracles, acct, new_node)
            kept_children = []
            for child in children:
                if child.status == FAILED:
                    continue
                verdict_reply = oracles.verifier.check(child, task)
                acct.add("verify", verdict_reply, child.id)
                if verdict_reply.verdict == GOAL:
                    child.status = GOAL_STATUS
                    return finish(SOLVED, None, child)
                if config.novelty_pruning:
                    history = kept_history[-config.history_window:]
                    novelty_reply = oracles.novelty.judge(child, history)
                    acct.add("novelty", novelty_reply, child.id)
                    verdict = novelty_reply.verdict
                    if verdict == NO:
                        child.status = PRUNED
                        continue
                    if verdict not in (YES, NO):
                        logger.warning(
                            "unparseable novelty verdict for node %d; keeping (fail-open)",
                            child.id,
                        )
                kept_history.append(child)
                kept_children.append(child)
            if config.traversal == BFS:
                frontier.extend(kept_children)
            else:
                frontier.extend(reversed(kept_children))
    except OracleUnavailable as exc:
        logger.error("oracle transport failure: %s", exc)
        if transcript is not None:
            transcript.record("oracle_failure", error=str(exc))
        return finish(FAILED, ORACLE_ERROR)

    reason = DEPTH_EXHAUSTED if depth_capped else FRONTIER_EXHAUSTED
    return finish(FAILED, reason)


def _expand(node, task, config, oracles, acct, new_node) -> list[ThoughtNode]:
    if config.mode == DIRECT:
        m = config.m_for(oracles.direct, node)
        children = expand_direct(node, oracles.direct, m, config.branch_factor,
                                 acct, new_node)
    else:
        m = config.m_for(oracles.action, node)
        children = expand_esa(node, oracles.action, oracles.successor, m,
                              acct, new_node)
    if not children:
        node.status = FAILED
    return children


def expand_direct(node, direct_oracle, m, branch_factor, acct, new_node):
    """m independent next-thought samples, deduplicated by normalized text.

    At most ``branch_factor`` deduplicated survivors become children, in
    sample order.
    """
    seen: set[str] = set()
    children = []
    for i in range(m):
        reply = direct_oracle.sample(node, i)
        acct.add("direct", reply, node.id)
        if reply.failed or not reply.text:
            continue
        key = normalize_text(reply.text)
        if key in seen:
            continue
        seen.add(key)
        if len(children) >= branch_factor:
            continue
        action_text = reply.meta.get("action_text")
        children.append(
            new_node(node, reply.text, reply.structured, action_text, reply.usage)
        )
    return children


def expand_esa(node, action_oracle, successor_oracle, m, acct, new_node):
    """Sample m candidate actions, dedup, then map each survivor to its successor.

    Every deduplicated action yields a child; per-action successor failures
    mark that child failed without aborting its siblings.
    """
    seen: set[str] = set()
    action_replies = []
    for i in range(m):
        reply = action_oracle.sample(node, i)
        acct.add("action", reply, node.id)
        if reply.failed or not reply.text:
            continue
        key = normalize_text(reply.text)
        if key in seen:
            continue
        seen.add(key)
        action_replies.append(reply)
    children = []
    for action_reply in action_replies:
        succ_reply = successor_oracle.map(node, action_reply)
        acct.add("successor", succ_reply, node.id)
        child = new_node(
            node,
            succ_reply.text,
            succ_reply.structured,
            action_reply.text,
            action_reply.usage + succ_reply.usage,
        )
        if succ_reply.failed:
            child.status = FAILED
        children.append(child)
    return children


def prune_decision(node, kept_history, novelty_oracle) -> str:
    """Forward the novelty oracle's verdict; unparseable fails open to 'keep'."""
    reply = novelty_oracle.judge(node, kept_history)
    if reply.verdict == NO:
        return "prune"
    if reply.verdict not in (YES, NO):
        logger.warning("unparseable novelty verdict; keeping (fail-open)")
    return "keep"


def verify(node, verifier_oracle, task=None) -> str:
    """Goal-check one node; unparseable fails closed to 'continue'."""
    reply = verifier_oracle.check(node, task)
    if reply.verdict == GOAL:
        return GOAL
    if reply.verdict == UNPARSEABLE:
        logger.warning("unparseable verifier output; continuing (fail-closed)")
    return CONTINUE
