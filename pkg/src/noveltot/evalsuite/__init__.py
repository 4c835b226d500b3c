"""Evaluation harness: sub-task instances, scoring, end-to-end benchmarks."""

from .benchmark import (
    BenchmarkCell,
    CellResult,
    full_grid,
    revalidate_plan,
    run_tot_benchmark,
    task_for_space,
)
from .instances import (
    KINDS,
    EvalInstance,
    build_context,
    gen_action_gen_instances,
    gen_novelty_instances,
    gen_plan_verify_instances,
    gen_successor_instances,
    generate_instances,
    recompute_truth,
)
from .scoring import (
    DuplicateBaselineRespondent,
    ExactRespondent,
    LLMRespondent,
    RenderedQuery,
    ScoreReport,
    render_query,
    run_subtask_eval,
    score_response,
)

__all__ = [
    "BenchmarkCell",
    "CellResult",
    "DuplicateBaselineRespondent",
    "EvalInstance",
    "ExactRespondent",
    "KINDS",
    "LLMRespondent",
    "RenderedQuery",
    "ScoreReport",
    "build_context",
    "full_grid",
    "gen_action_gen_instances",
    "gen_novelty_instances",
    "gen_plan_verify_instances",
    "gen_successor_instances",
    "generate_instances",
    "recompute_truth",
    "render_query",
    "revalidate_plan",
    "run_subtask_eval",
    "run_tot_benchmark",
    "score_response",
    "task_for_space",
]
