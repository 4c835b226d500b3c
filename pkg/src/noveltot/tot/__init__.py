"""Thought-tree search engine with optional novelty pruning."""

from .engine import (
    BFS,
    DEPTH_EXHAUSTED,
    DFS,
    DIRECT,
    ESA,
    FAILED,
    FRONTIER_EXHAUSTED,
    GOAL_STATUS,
    KEPT,
    ORACLE_ERROR,
    PRUNED,
    SOLVED,
    ThoughtNode,
    ToTConfig,
    ToTOutcome,
    ToTStats,
    ToTTask,
    expand_direct,
    expand_esa,
    prune_decision,
    tot_search,
    verify,
)

__all__ = [
    "BFS",
    "DEPTH_EXHAUSTED",
    "DFS",
    "DIRECT",
    "ESA",
    "FAILED",
    "FRONTIER_EXHAUSTED",
    "GOAL_STATUS",
    "KEPT",
    "ORACLE_ERROR",
    "PRUNED",
    "SOLVED",
    "ThoughtNode",
    "ToTConfig",
    "ToTOutcome",
    "ToTStats",
    "ToTTask",
    "expand_direct",
    "expand_esa",
    "prune_decision",
    "tot_search",
    "verify",
]
