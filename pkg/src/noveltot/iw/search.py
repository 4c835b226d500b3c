"""Width-bounded breadth-first search and the exact optimal-plan oracle.

IW(k) is plain BFS with FIFO tie-breaking that prunes any generated state
whose novelty exceeds k. Duplicates are pruned by the same mechanism (a
repeat state has no unseen feature subset); there is no separate closed
list. Registration happens only when a state is kept, so pruned states do
not count as visited.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from time import perf_counter

from ..core import GroundProblem, Plan
from .novelty import ABOVE_K, NoveltyTable, novelty_and_register, register

DEFAULT_BUDGET = 1_000_000
DEFAULT_K_MAX = 3


class BudgetExceeded(RuntimeError):
    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"search exceeded the state budget of {budget}")


@dataclass(frozen=True)
class SearchStats:
    """generated = expanded + pruned + frontier remainder (root included).

    ``dead_ends`` counts expanded non-goal states with no successors; they are
    kept by the novelty test but can never advance the search.
    """

    generated: int
    expanded: int
    pruned: int
    duplicate_pruned: int
    dead_ends: int
    max_depth: int
    wall_ms: float


@dataclass(frozen=True)
class SearchOutcome:
    """``plan`` is the action sequence to the first goal state, or None if
    the (pruned) space was exhausted."""

    plan: tuple | None
    stats: SearchStats

    @property
    def solved(self) -> bool:
        return self.plan is not None


def _space_of(problem):
    if isinstance(problem, GroundProblem):
        from ..spaces import GroundSpace

        return GroundSpace(problem)
    return problem


def iw_search(
    problem,
    k: int,
    feature_fn=None,
    budget: int = DEFAULT_BUDGET,
    stop_at_goal: bool = True,
    trace: list | None = None,
) -> SearchOutcome:
    """Breadth-first search pruning states of novelty above k.

    The initial state is registered (and goal-tested) first; each generated
    successor is pruned if its novelty is ABOVE_K and otherwise registered,
    goal-tested and enqueued. Returns the plan to the first goal state found,
    which is the shortest among non-pruned paths.

    With ``stop_at_goal=False`` the search explores the whole novelty-pruned
    space (goal states still end their own path); the first goal plan found
    is returned and the stats describe the complete run.

    ``trace``, when given, receives one dict per generated successor
    ({state, kept_before, verdict, duplicate}) in generation order; the
    evaluation harness uses it to reconstruct partial searches.
    """
    space = _space_of(problem)
    features = feature_fn if feature_fn is not None else space.features
    start = perf_counter()

    def outcome(plan, generated, expanded, pruned, dup, dead, max_depth):
        wall = (perf_counter() - start) * 1000.0
        return SearchOutcome(
            plan, SearchStats(generated, expanded, pruned, dup, dead, max_depth, wall)
        )

    init = space.initial
    generated = 1
    if space.is_goal(init):
        return outcome((), generated, 0, 0, 0, 0, 0)

    table = NoveltyTable(k)
    init_features = frozenset(features(init))
    register(init_features, table)
    kept_features = {init_features}
    kept_count = 1

    # nodes: (state, parent index, producing action, depth)
    nodes = [(init, -1, None, 0)]
    queue = deque([0])
    expanded = pruned = dup_pruned = dead_ends = 0
    max_depth = 0
    first_plan = None

    while queue:
        idx = queue.popleft()
        state, _, _, depth = nodes[idx]
        expanded += 1
        children = 0
        for action, succ in space.successors(state):
            children += 1
            generated += 1
            if generated > budget:
                raise BudgetExceeded(budget)
            succ_features = frozenset(features(succ))
            value = novelty_and_register(succ_features, table)
            if value is ABOVE_K:
                pruned += 1
                duplicate = succ_features in kept_features
                if duplicate:
                    dup_pruned += 1
                if trace is not None:
                    trace.append(
                        {"state": succ, "kept_before": kept_count,
                         "verdict": "pruned", "duplicate": duplicate}
                    )
                continue
            if trace is not None:
                trace.append(
                    {"state": succ, "kept_before": kept_count,
                     "verdict": "kept", "duplicate": False}
                )
            kept_count += 1
            kept_features.add(succ_features)
            nodes.append((succ, idx, action, depth + 1))
            max_depth = max(max_depth, depth + 1)
            if space.is_goal(succ):
                plan = _extract_plan(nodes, len(nodes) - 1)
                if stop_at_goal:
                    return outcome(
                        plan, generated, expanded, pruned, dup_pruned, dead_ends, max_depth
                    )
                if first_plan is None:
                    first_plan = plan
                continue  # goal paths end here even in exhaustive mode
            queue.append(len(nodes) - 1)
        if children == 0 and not space.is_goal(state):
            dead_ends += 1

    return outcome(first_plan, generated, expanded, pruned, dup_pruned, dead_ends, max_depth)


def _extract_plan(nodes, idx: int) -> tuple:
    steps = []
    while idx >= 0:
        _, parent, action, _ = nodes[idx]
        if action is not None:
            steps.append(action)
        idx = parent
    return tuple(reversed(steps))


def effective_width(
    problem, feature_fn=None, k_max: int = DEFAULT_K_MAX, budget: int = DEFAULT_BUDGET
) -> int | None:
    """Smallest k <= k_max at which IW(k) reaches a goal; None if unsolved.

    A problem whose initial state already satisfies the goal has width 0 by
    convention.
    """
    width, _ = effective_width_outcome(problem, feature_fn, k_max, budget)
    return width


def effective_width_outcome(
    problem, feature_fn=None, k_max: int = DEFAULT_K_MAX, budget: int = DEFAULT_BUDGET
) -> tuple[int | None, SearchOutcome | None]:
    """Like effective_width, also returning the successful search outcome."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    space = _space_of(problem)
    if space.is_goal(space.initial):
        stats = SearchStats(1, 0, 0, 0, 0, 0, 0.0)
        return 0, SearchOutcome((), stats)
    for k in range(1, k_max + 1):
        result = iw_search(space, k, feature_fn, budget)
        if result.solved:
            return k, result
    return None, None


@dataclass(frozen=True)
class WidthReport:
    """Per-instance width analysis row (effective width and pruneability).

    ``pruneable_pct`` is the share of generated states the search discards:
    novelty-pruned states plus kept dead ends that cannot be expanded.
    ``novelty_pruned_pct`` is the novelty-pruned share alone.
    """

    width: int | None
    generated: int
    expanded: int
    pruned: int
    dead_ends: int
    pruneable_pct: float | None
    novelty_pruned_pct: float | None
    plan_length: int | None
    wall_ms: float

    @property
    def solved(self) -> bool:
        return self.width is not None


def pruneability_stats(
    problem, feature_fn=None, k_max: int = DEFAULT_K_MAX, budget: int = DEFAULT_BUDGET
) -> WidthReport:
    """Width plus pruneable-state percentage at the effective width.

    The statistics come from a complete (non-stopping) IW run at the
    effective width, so they describe the whole pruned search space rather
    than the prefix up to the first goal.
    """
    start = perf_counter()
    width, _ = effective_width_outcome(problem, feature_fn, k_max, budget)
    if width is None:
        wall = (perf_counter() - start) * 1000.0
        return WidthReport(None, 0, 0, 0, 0, None, None, None, wall)
    if width == 0:
        wall = (perf_counter() - start) * 1000.0
        return WidthReport(0, 1, 0, 0, 0, 0.0, 0.0, 0, wall)
    result = iw_search(problem, width, feature_fn, budget, stop_at_goal=False)
    wall = (perf_counter() - start) * 1000.0
    stats = result.stats
    discarded = stats.pruned + stats.dead_ends
    pct = 100.0 * discarded / stats.generated if stats.generated else 0.0
    raw = 100.0 * stats.pruned / stats.generated if stats.generated else 0.0
    return WidthReport(
        width,
        stats.generated,
        stats.expanded,
        stats.pruned,
        stats.dead_ends,
        pct,
        raw,
        len(result.plan) if result.plan is not None else None,
        wall,
    )


def optimal_plan_bfs(problem, budget: int = DEFAULT_BUDGET):
    """Shortest plan by exhaustive breadth-first search with duplicate detection.

    Ties are broken by canonical action order via FIFO expansion. Returns a
    ``Plan`` for ground STRIPS problems (a plain action tuple for other
    spaces), or None when the whole space is exhausted without a goal.
    """
    wrap = isinstance(problem, GroundProblem)
    space = _space_of(problem)

    init = space.initial
    if space.is_goal(init):
        return Plan(()) if wrap else ()

    nodes = [(init, -1, None)]
    queue = deque([0])
    closed = {init}
    generated = 1

    while queue:
        idx = queue.popleft()
        state, _, _ = nodes[idx]
        for action, succ in space.successors(state):
            if succ in closed:
                continue
            generated += 1
            if generated > budget:
                raise BudgetExceeded(budget)
            closed.add(succ)
            nodes.append((succ, idx, action))
            if space.is_goal(succ):
                steps = _extract_plan(
                    [(s, p, a, 0) for s, p, a in nodes], len(nodes) - 1
                )
                return Plan(steps) if wrap else steps
            queue.append(len(nodes) - 1)

    return None
