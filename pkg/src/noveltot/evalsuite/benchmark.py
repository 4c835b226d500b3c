"""End-to-end thought-tree benchmarks over configuration grids.

Each grid cell is {traversal x mode x pruning x thinking}. Per cell and
instance the search runs once, its transcript is persisted, and the result
is cached as a JSON file, so interrupted runs resume without recomputation.
Solutions on simulator domains are always revalidated by replaying the plan;
the search's own goal claim is never trusted for Perf.
"""

from __future__ import annotations

import dataclasses
import json
import logging
from dataclasses import dataclass
from pathlib import Path

from ..core import GroundProblem, Plan, validate_plan
from ..pddl import NoMatch
from ..tot import ToTConfig, ToTTask, tot_search
from ..transcript import Transcript

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BenchmarkCell:
    traversal: str  # bfs | dfs
    mode: str  # direct | esa
    pruning: bool
    thinking: bool

    @property
    def key(self) -> str:
        return "-".join(
            (
                self.traversal,
                self.mode,
                "pruning" if self.pruning else "base",
                "thinking" if self.thinking else "normal",
            )
        )


def full_grid(traversals=("dfs", "bfs")) -> list[BenchmarkCell]:
    """The 16-cell layout: traversal x mode x thinking x base/pruning."""
    cells = []
    for traversal in traversals:
        for mode in ("direct", "esa"):
            for thinking in (False, True):
                for pruning in (False, True):
                    cells.append(BenchmarkCell(traversal, mode, pruning, thinking))
    return cells


def task_for_space(space, name: str) -> ToTTask:
    return ToTTask(
        root_text=space.render_state(space.initial),
        goal_text=space.goal_text(),
        root_state=space.initial,
        name=name,
    )


def revalidate_plan(space, problem: GroundProblem, answer: str | None) -> bool:
    """Replay a returned plan through the simulator; parse failures count as
    unsolved."""
    if not answer:
        return False
    try:
        steps = tuple(
            space.parse_action(line) for line in answer.splitlines() if line.strip()
        )
    except (NoMatch, ValueError):
        return False
    return validate_plan(problem, Plan(steps)).valid


@dataclass
class CellResult:
    cell: BenchmarkCell
    solved: int
    total: int
    atu: float
    mean_generated: float
    errors: int
    instances: list[dict]

    @property
    def perf(self) -> str:
        return f"{self.solved}/{self.total}"


def run_tot_benchmark(
    instances: list[tuple[str, GroundProblem]],
    grid: list[BenchmarkCell],
    oracle_factory,
    out_dir: str | Path,
    max_depth: int = 8,
    branch_factor: int = 2,
    history_window: int = 30,
) -> list[CellResult]:
    """Run every grid cell over every instance.

    ``oracle_factory(problem, cell)`` must return a fresh ``(space, oracles)``
    pair per call; oracle sets hold per-search state (round-robin cursors,
    noise RNGs) and are never shared between searches.
    """
    out_dir = Path(out_dir)
    results_dir = out_dir / "results"
    transcripts_dir = out_dir / "transcripts"
    results_dir.mkdir(parents=True, exist_ok=True)
    transcripts_dir.mkdir(parents=True, exist_ok=True)

    cell_results = []
    for cell in grid:
        instance_rows = []
        errors = 0
        for instance_id, problem in instances:
            row_path = results_dir / cell.key / f"{instance_id}.json"
            if row_path.exists():
                instance_rows.append(json.loads(row_path.read_text(encoding="utf-8")))
                continue
            row_path.parent.mkdir(parents=True, exist_ok=True)
            try:
                space, oracles = oracle_factory(problem, cell)
                config = ToTConfig(
                    traversal=cell.traversal,
                    max_depth=max_depth,
                    branch_factor=branch_factor,
                    mode=cell.mode,
                    novelty_pruning=cell.pruning,
                    history_window=history_window,
                )
                task = task_for_space(space, instance_id)
                with Transcript(transcripts_dir / cell.key / f"{instance_id}.jsonl") as t:
                    outcome = tot_search(task, config, oracles, transcript=t)
                solved = outcome.solved and revalidate_plan(space, problem, outcome.answer)
                row = {
                    "instance": instance_id,
                    "cell": cell.key,
                    "claimed_solved": outcome.solved,
                    "solved": solved,
                    "reason": outcome.reason,
                    "tokens": outcome.stats.total_usage.total,
                    "queries": outcome.stats.queries,
                    "generated": outcome.stats.generated,
                    "expanded": outcome.stats.expanded,
                    "pruned": outcome.stats.pruned,
                    "plan_length": len(outcome.path) - 1 if outcome.solved else None,
                    "wall_ms": round(outcome.stats.wall_ms, 3),
                }
            except Exception as exc:  # cell continues; failure is data
                logger.exception("benchmark failure on %s/%s", cell.key, instance_id)
                errors += 1
                row = {
                    "instance": instance_id,
                    "cell": cell.key,
                    "claimed_solved": False,
                    "solved": False,
                    "reason": "error",
                    "error": str(exc),
                    "tokens": 0,
                    "generated": 0,
                }
            row_path.write_text(json.dumps(row, sort_keys=True), encoding="utf-8")
            instance_rows.append(row)

        total = len(instance_rows)
        solved = sum(1 for r in instance_rows if r["solved"])
        atu = sum(r.get("tokens", 0) for r in instance_rows) / total if total else 0.0
        mean_generated = (
            sum(r.get("generated", 0) for r in instance_rows) / total if total else 0.0
        )
        errors = sum(1 for r in instance_rows if r.get("reason") == "error")
        cell_results.append(
            CellResult(cell, solved, total, atu, mean_generated, errors, instance_rows)
        )

    _write_reports(cell_results, out_dir)
    return cell_results


def _write_reports(cell_results: list[CellResult], out_dir: Path) -> None:
    csv_lines = ["traversal,mode,thinking,pruning,perf,solved,total,atu,mean_generated"]
    detail = []
    for r in cell_results:
        c = r.cell
        csv_lines.append(
            f"{c.traversal},{c.mode},{'thinking' if c.thinking else 'normal'},"
            f"{'pruning' if c.pruning else 'base'},{r.perf},{r.solved},{r.total},"
            f"{r.atu:.1f},{r.mean_generated:.1f}"
        )
        detail.append(
            {
                "cell": dataclasses.asdict(c),
                "key": c.key,
                "solved": r.solved,
                "total": r.total,
                "atu": r.atu,
                "mean_generated": r.mean_generated,
                "errors": r.errors,
                "instances": r.instances,
            }
        )
    (out_dir / "benchmark.csv").write_text("\n".join(csv_lines) + "\n", encoding="utf-8")
    (out_dir / "benchmark.json").write_text(
        json.dumps(detail, indent=2, sort_keys=True), encoding="utf-8"
    )
