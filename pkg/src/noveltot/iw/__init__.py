"""Width-based search: novelty tables, IW(k), effective width, plan oracle."""

from .novelty import ABOVE_K, EmptyFeatureSet, NoveltyTable, novelty, register
from .search import (
    DEFAULT_BUDGET,
    DEFAULT_K_MAX,
    BudgetExceeded,
    SearchOutcome,
    SearchStats,
    WidthReport,
    effective_width,
    effective_width_outcome,
    iw_search,
    optimal_plan_bfs,
    pruneability_stats,
)

__all__ = [
    "ABOVE_K",
    "BudgetExceeded",
    "DEFAULT_BUDGET",
    "DEFAULT_K_MAX",
    "EmptyFeatureSet",
    "NoveltyTable",
    "SearchOutcome",
    "SearchStats",
    "WidthReport",
    "effective_width",
    "effective_width_outcome",
    "iw_search",
    "novelty",
    "optimal_plan_bfs",
    "pruneability_stats",
    "register",
]
