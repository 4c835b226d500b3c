"""Command-line entry point: generate, analyze-width, solve, eval, bench.

Every command is deterministic given (config, seed) when using exact or
seeded oracles. Run directories are self-describing: the resolved config,
manifest and transcripts suffice to re-derive every report number.

Exit codes: 0 success/solved, 1 unsolved, 2 invalid parameters or config,
3 oracle/transport failure, 4 unexpected internal error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .core import Plan, validate_plan
from .domains import (
    GeneratorExhausted,
    LogisticsSizes,
    blocksworld_generate,
    domain_text,
    game24_default_instances,
    ground_blocksworld,
    load_domain,
    load_lexicon,
    logistics_generate,
)
from .domains.game24 import enumerate_solvable_quads
from .evalsuite import (
    DuplicateBaselineRespondent,
    ExactRespondent,
    LLMRespondent,
    full_grid,
    generate_instances,
    run_subtask_eval,
    run_tot_benchmark,
    task_for_space,
)
from .evalsuite.benchmark import revalidate_plan
from .iw.search import (
    DEFAULT_BUDGET,
    DEFAULT_K_MAX,
    BudgetExceeded,
    effective_width_outcome,
    iw_search,
    optimal_plan_bfs,
    pruneability_stats,
)
from .oracles import (
    ErrorModel,
    LLMClient,
    LLMParams,
    OracleUnavailable,
    exact_oracles,
    llm_oracles,
    load_catalog,
    noisy,
)
from .pddl import PddlError, ground, parse_problem, print_problem
from .spaces import Game24Space, GroundSpace
from .tot import ToTConfig, tot_search
from .transcript import Transcript

EXIT_OK = 0
EXIT_UNSOLVED = 1
EXIT_USAGE = 2
EXIT_TRANSPORT = 3
EXIT_ERROR = 4

SUBTASK_NAMES = {
    "action-gen-all": "action_gen_all",
    "action-gen-single": "action_gen_single",
    "successor-joint": "successor_joint",
    "successor-separate": "successor_separate",
    "plan-verify": "plan_verify",
    "novelty": "novelty",
    "novelty-ndap": "novelty_ndap",
}

_CONFIG_KEYS = {"seed", "style", "catalog", "llm", "tot", "domain_context"}
_LLM_KEYS = {
    "endpoint", "model", "temperature", "max_tokens", "thinking", "max_attempts",
    "backoff_s", "timeout_s", "requests_per_minute", "api_key_env",
    "thinking_on_body", "thinking_off_body", "temperatures",
}
_TOT_KEYS = {
    "traversal", "max_depth", "branch_factor", "mode", "novelty_pruning",
    "history_window", "samples",
}


class ConfigError(Exception):
    pass


def load_run_config(path: str | None) -> dict:
    """Read and validate the optional JSON config file; unknown keys are errors."""
    if path is None:
        return {}
    with open(path, encoding="utf-8") as f:
        data = json.load(f)
    if not isinstance(data, dict):
        raise ConfigError("config file must hold a JSON object")
    unknown = set(data) - _CONFIG_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    for section, allowed in (("llm", _LLM_KEYS), ("tot", _TOT_KEYS)):
        extra = set(data.get(section, {})) - allowed
        if extra:
            raise ConfigError(f"unknown {section} config keys: {sorted(extra)}")
    return data


def _config_hash(payload: dict) -> str:
    blob = json.dumps(payload, sort_keys=True, default=str).encode("utf-8")
    return hashlib.sha256(blob).hexdigest()[:10]


def make_run_dir(base: str, payload: dict) -> Path:
    stamp = time.strftime("%Y%m%d-%H%M%S")
    run_dir = Path(base) / f"{stamp}-{_config_hash(payload)}"
    run_dir.mkdir(parents=True, exist_ok=True)
    (run_dir / "config.json").write_text(
        json.dumps(payload, indent=2, sort_keys=True, default=str), encoding="utf-8"
    )
    return run_dir


def llm_params_from(config: dict, thinking: bool | None = None) -> LLMParams:
    llm = dict(config.get("llm") or {})
    if "endpoint" not in llm or "model" not in llm:
        raise ConfigError("llm oracle requires 'llm.endpoint' and 'llm.model' in --config")
    llm.pop("temperatures", None)
    if thinking is not None:
        llm["thinking"] = thinking
    return LLMParams(**llm)


# ---------------------------------------------------------------------------
# generate
# ---------------------------------------------------------------------------


def cmd_generate(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    manifest = {
        "domain": args.domain,
        "seed": args.seed,
        "count": None,
        "params": {},
        "files": [],
        "regenerations": 0,
    }

    if args.domain == "game24":
        count = args.count
        quads = (
            enumerate_solvable_quads() if args.source == "enumerate"
            else game24_default_instances()
        )
        if count > len(quads):
            print(f"error: only {len(quads)} instances available", file=sys.stderr)
            return EXIT_USAGE
        selected = quads[:count] if count else quads
        path = out / "game24_instances.txt"
        path.write_text(
            "".join(" ".join(map(str, q)) + "\n" for q in selected), encoding="utf-8"
        )
        manifest.update(count=len(selected), params={"source": args.source},
                        files=[path.name])
    else:
        n = args.n
        for i in range(n):
            seed_i = args.seed * 1_000_003 + i
            try:
                if args.domain == "blocksworld":
                    problem = blocksworld_generate(
                        args.blocks, seed_i, max_goal_atoms=args.max_goal_atoms
                    )
                else:
                    sizes = LogisticsSizes(
                        n_cities=args.cities,
                        n_locations=args.locations,
                        n_packages=args.packages,
                        n_trucks_per_city=args.trucks,
                        n_airplanes=args.airplanes,
                    )
                    problem = logistics_generate(sizes, seed_i)
            except (GeneratorExhausted, ValueError) as exc:
                print(f"error: {exc}", file=sys.stderr)
                return EXIT_USAGE
            path = out / f"{problem.name}.pddl"
            path.write_text(print_problem(problem), encoding="utf-8")
            manifest["files"].append(path.name)
        manifest.update(count=n, params=_generator_params(args))
        domain_path = out / f"{args.domain}-domain.pddl"
        domain_path.write_text(domain_text(args.domain), encoding="utf-8")
        manifest["files"].append(domain_path.name)

    (out / "manifest.json").write_text(
        json.dumps(manifest, indent=2, sort_keys=True), encoding="utf-8"
    )
    print(f"wrote {manifest['count']} instances to {out}")
    return EXIT_OK


def _generator_params(args) -> dict:
    if args.domain == "blocksworld":
        return {"blocks": args.blocks, "max_goal_atoms": args.max_goal_atoms}
    return {
        "cities": args.cities, "locations": args.locations, "packages": args.packages,
        "trucks": args.trucks, "airplanes": args.airplanes,
    }


# ---------------------------------------------------------------------------
# analyze-width
# ---------------------------------------------------------------------------


def _width_spaces(args):
    """Yield (instance id, space) pairs for the width analysis."""
    if args.domain == "game24":
        if args.instances:
            lines = Path(args.instances).read_text(encoding="utf-8").splitlines()
            quads = []
            for line in lines:
                line = line.split("#", 1)[0].strip()
                if line:
                    quads.append(tuple(int(p) for p in line.split()))
        else:
            quads = game24_default_instances()
        if args.limit:
            quads = quads[: args.limit]
        for q in quads:
            yield "-".join(map(str, q)), Game24Space.of(q)
    else:
        domain = load_domain(args.domain)
        for path in args.problems:
            problem = ground(domain, parse_problem(Path(path).read_text(encoding="utf-8")))
            yield Path(path).stem, GroundSpace(problem)


def cmd_analyze_width(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    items = list(_width_spaces(args))

    def analyze(item):
        instance_id, space = item
        try:
            report = pruneability_stats(space, k_max=args.k_max, budget=args.budget)
            return instance_id, report, None
        except BudgetExceeded as exc:
            return instance_id, None, str(exc)

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(analyze, items))
    else:
        rows = [analyze(item) for item in items]

    csv_lines = ["instance,width,generated,pruned,dead_ends,pruneable_pct,"
                 "novelty_pruned_pct,plan_length,wall_ms,error"]
    solved = []
    for instance_id, report, error in rows:
        if error is not None or report is None:
            csv_lines.append(f"{instance_id},,,,,,,,,{error}")
            continue
        width = report.width if report.width is not None else ""
        pp = f"{report.pruneable_pct:.2f}" if report.pruneable_pct is not None else ""
        np_ = f"{report.novelty_pruned_pct:.2f}" if report.novelty_pruned_pct is not None else ""
        pl = report.plan_length if report.plan_length is not None else ""
        csv_lines.append(
            f"{instance_id},{width},{report.generated},{report.pruned},"
            f"{report.dead_ends},{pp},{np_},{pl},{report.wall_ms:.1f},"
        )
        if report.solved:
            solved.append(report)

    (out / "widths.csv").write_text("\n".join(csv_lines) + "\n", encoding="utf-8")

    summary = {"instances": len(rows), "solved": len(solved),
               "unsolved_or_error": len(rows) - len(solved)}
    if solved:
        summary.update(
            mean_width=sum(r.width for r in solved) / len(solved),
            max_width=max(r.width for r in solved),
            mean_pruneable_pct=sum(r.pruneable_pct for r in solved) / len(solved),
            mean_novelty_pruned_pct=(
                sum(r.novelty_pruned_pct for r in solved) / len(solved)
            ),
            mean_generated=sum(r.generated for r in solved) / len(solved),
        )
    (out / "summary.json").write_text(
        json.dumps(summary, indent=2, sort_keys=True), encoding="utf-8"
    )

    width_counts: dict = {}
    for r in solved:
        width_counts[r.width] = width_counts.get(r.width, 0) + 1
    hist = ["width,count"] + [f"{w},{c}" for w, c in sorted(width_counts.items())]
    (out / "width_histogram.csv").write_text("\n".join(hist) + "\n", encoding="utf-8")

    buckets: dict = {}
    for r in solved:
        bucket = min(int(r.pruneable_pct // 5) * 5, 95)
        buckets[bucket] = buckets.get(bucket, 0) + 1
    hist2 = ["pruneable_pct_bucket,count"] + [f"{b},{c}" for b, c in sorted(buckets.items())]
    (out / "pruneable_histogram.csv").write_text("\n".join(hist2) + "\n", encoding="utf-8")

    if solved:
        print(
            f"{len(solved)}/{len(rows)} solved | mean width {summary['mean_width']:.3f} "
            f"| max width {summary['max_width']} "
            f"| mean pruneable {summary['mean_pruneable_pct']:.1f}% "
            f"| mean tree {summary['mean_generated']:.0f}"
        )
    else:
        print(f"0/{len(rows)} solved")
    return EXIT_OK


# ---------------------------------------------------------------------------
# solve
# ---------------------------------------------------------------------------


def _load_space(args, config, style_override=None):
    style = style_override or config.get("style", "pddl")
    if args.domain == "game24":
        quad = tuple(int(p) for p in args.instance.split())
        return Game24Space.of(quad), None
    domain = load_domain(args.domain)
    problem = ground(domain, parse_problem(Path(args.problem).read_text(encoding="utf-8")))
    lex = load_lexicon(args.domain).bound_to(problem) if style == "natural_language" else None
    return GroundSpace(problem, style=style, lexicon=lex), problem


def cmd_solve(args) -> int:
    try:
        config = load_run_config(args.config)
    except (ConfigError, OSError, json.JSONDecodeError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        space, problem = _load_space(args, config, args.style)
    except (PddlError, OSError, ValueError) as exc:
        print(f"instance error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    out_dir = Path(args.out) if args.out else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)

    if args.engine == "iw":
        try:
            if args.k:
                outcome = iw_search(space, args.k, budget=args.budget)
                width = args.k if outcome.solved else None
            else:
                width, outcome = effective_width_outcome(space, k_max=args.k_max,
                                                         budget=args.budget)
        except BudgetExceeded as exc:
            print(f"budget exceeded: {exc}", file=sys.stderr)
            return EXIT_ERROR
        if width is None or outcome is None or not outcome.solved:
            print("unsolved")
            return EXIT_UNSOLVED
        plan_lines = [space.render_action(a) for a in outcome.plan]
        validity = ""
        if problem is not None:
            result = validate_plan(problem, Plan(tuple(outcome.plan)))
            validity = "valid" if result.valid else "INVALID"
        print("\n".join(plan_lines) if plan_lines else "(empty plan)")
        print(f"width {width} | plan length {len(outcome.plan)} | "
              f"generated {outcome.stats.generated} | pruned {outcome.stats.pruned}"
              + (f" | {validity}" if validity else ""))
        if out_dir:
            (out_dir / "solve.json").write_text(json.dumps({
                "engine": "iw", "width": width, "plan": plan_lines,
                "generated": outcome.stats.generated, "pruned": outcome.stats.pruned,
                "valid": validity != "INVALID",
            }, indent=2), encoding="utf-8")
        return EXIT_OK

    # engine == tot
    tot_cfg = dict(config.get("tot") or {})
    tot_cfg.update(
        traversal=args.traversal, mode=args.mode,
        novelty_pruning=args.pruning == "on",
        max_depth=args.max_depth, branch_factor=args.branch_factor,
    )
    try:
        tconfig = ToTConfig(**tot_cfg)
        oracles = _build_oracles(args, config, space)
    except (ConfigError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    task = task_for_space(space, args.problem or args.instance)
    transcript = Transcript(out_dir / "transcript.jsonl") if out_dir else Transcript()
    with transcript:
        outcome = tot_search(task, tconfig, oracles, transcript=transcript)

    if outcome.reason == "oracle_error":
        print("oracle transport failure", file=sys.stderr)
        return EXIT_TRANSPORT

    solved = outcome.solved
    if solved and problem is not None:
        solved = revalidate_plan(space, problem, outcome.answer)
    stats = outcome.stats
    print(f"{'solved' if solved else 'unsolved'} | nodes {stats.generated} "
          f"| expanded {stats.expanded} | pruned {stats.pruned} "
          f"| tokens {stats.total_usage.total}"
          + (f" | reason {outcome.reason}" if outcome.reason else ""))
    if solved and outcome.answer:
        print(outcome.answer)
    if out_dir:
        (out_dir / "solve.json").write_text(json.dumps({
            "engine": "tot", "solved": solved, "reason": outcome.reason,
            "answer": outcome.answer, "generated": stats.generated,
            "tokens": stats.total_usage.total,
        }, indent=2), encoding="utf-8")
    return EXIT_OK if solved else EXIT_UNSOLVED


def _build_oracles(args, config, space):
    if args.oracles == "exact":
        return exact_oracles(space)
    if args.oracles == "noisy":
        model = ErrorModel.uniform(args.error_rate, seed=args.seed)
        return noisy(exact_oracles(space), model)
    # llm
    params = llm_params_from(config, thinking=args.thinking)
    catalog = load_catalog(config.get("catalog", "base"))
    context_key = config.get("domain_context") or args.domain
    try:
        context = catalog.context_for(context_key).body
    except KeyError:
        context = context_key  # free-text context straight from config
    style = args.style or config.get("style", "natural_language")
    temps = (config.get("llm") or {}).get("temperatures")
    return llm_oracles(params, catalog, style, context, space.goal_text(),
                       temperatures=temps)


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------


def cmd_eval(args) -> int:
    try:
        config = load_run_config(args.config)
        kind = SUBTASK_NAMES[args.subtask]
    except KeyError:
        print(f"unknown sub-task '{args.subtask}'", file=sys.stderr)
        return EXIT_USAGE
    except (ConfigError, OSError, json.JSONDecodeError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    payload = {
        "command": "eval", "subtask": kind, "oracle": args.oracle, "n": args.n,
        "style": args.style, "seed": args.seed, "config": config,
    }
    run_dir = make_run_dir(args.out, payload)

    try:
        instances = generate_instances(kind, args.n, args.seed)
    except (GeneratorExhausted, ValueError) as exc:
        print(f"generator error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    (run_dir / "instances.jsonl").write_text(
        "".join(i.to_json() + "\n" for i in instances), encoding="utf-8"
    )

    if args.oracle == "exact":
        respondent = ExactRespondent()
    elif args.oracle == "duplicate-baseline":
        if not kind.startswith("novelty"):
            print("duplicate-baseline only answers novelty sub-tasks", file=sys.stderr)
            return EXIT_USAGE
        respondent = DuplicateBaselineRespondent()
    else:
        try:
            params = llm_params_from(config, thinking=args.thinking)
        except ConfigError as exc:
            print(f"config error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        catalog = load_catalog(config.get("catalog", "base"))
        context = catalog.context_for("blocksworld").body
        client = LLMClient(params, catalog, args.style, context,
                           temperatures=(config.get("llm") or {}).get("temperatures"))
        respondent = LLMRespondent(client)

    with Transcript(run_dir / "transcript.jsonl") as transcript:
        try:
            report = run_subtask_eval(instances, respondent, style=args.style,
                                      oracle_name=args.oracle, transcript=transcript)
        except OracleUnavailable as exc:
            print(f"oracle failure: {exc}", file=sys.stderr)
            return EXIT_TRANSPORT

    report.save(run_dir / "report.json")
    line = f"{report.summary}"
    if "optimal_passed" in report.extra:
        line += f" (optimal {report.extra['optimal_passed']}/{report.total})"
    line += f" | ATU {report.atu:.1f}"
    print(line)
    return EXIT_OK


# ---------------------------------------------------------------------------
# bench
# ---------------------------------------------------------------------------


def cmd_bench(args) -> int:
    try:
        config = load_run_config(args.config)
    except (ConfigError, OSError, json.JSONDecodeError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    payload = {
        "command": "bench", "domain": args.domain, "instances": args.instances,
        "blocks": args.blocks, "min_len": args.min_len, "max_len": args.max_len,
        "oracles": args.oracles, "error_rate": args.error_rate, "seed": args.seed,
        "traversals": args.traversals, "style": args.style, "config": config,
    }
    run_dir = make_run_dir(args.out, payload)

    instances = []
    seed = 0
    while len(instances) < args.instances:
        seed += 1
        problem_def = blocksworld_generate(args.blocks, args.seed * 1_000_003 + seed)
        gp = ground_blocksworld(problem_def)
        plan = optimal_plan_bfs(gp)
        if plan is not None and args.min_len <= len(plan) <= args.max_len:
            instances.append((problem_def.name, gp))
        if seed > 10_000:
            print("could not generate enough instances", file=sys.stderr)
            return EXIT_USAGE

    lexicon = load_lexicon("blocksworld")
    style = args.style

    def factory(problem, cell):
        lex = lexicon.bound_to(problem) if style == "natural_language" else None
        space = GroundSpace(problem, style=style, lexicon=lex)
        if args.oracles == "exact":
            return space, exact_oracles(space)
        if args.oracles == "noisy":
            model = ErrorModel.uniform(args.error_rate, seed=args.seed)
            return space, noisy(exact_oracles(space), model)
        params = llm_params_from(config, thinking=cell.thinking)
        catalog = load_catalog(config.get("catalog", "base"))
        context = catalog.context_for(args.domain).body
        temps = (config.get("llm") or {}).get("temperatures")
        return space, llm_oracles(params, catalog, style, context, space.goal_text(),
                                  temperatures=temps)

    grid = full_grid(traversals=tuple(args.traversals.split(",")))
    results = run_tot_benchmark(
        instances, grid, factory, run_dir,
        max_depth=args.max_depth, branch_factor=args.branch_factor,
    )
    for r in results:
        print(f"{r.cell.key}: Perf {r.perf} | ATU {r.atu:.1f} "
              f"| mean nodes {r.mean_generated:.1f}"
              + (f" | errors {r.errors}" if r.errors else ""))
    print(f"reports under {run_dir}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="noveltot",
        description="Width-based planning and thought-tree search toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="generate problem instances")
    g.add_argument("domain", choices=["blocksworld", "logistics", "game24"])
    g.add_argument("--n", type=int, default=10, help="instance count (pddl domains)")
    g.add_argument("--count", type=int, default=0, help="instance count (game24; 0 = all)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", required=True)
    g.add_argument("--blocks", type=int, default=4)
    g.add_argument("--max-goal-atoms", type=int, default=2)
    g.add_argument("--cities", type=int, default=2)
    g.add_argument("--locations", type=int, default=1)
    g.add_argument("--packages", type=int, default=1)
    g.add_argument("--trucks", type=int, default=1)
    g.add_argument("--airplanes", type=int, default=1)
    g.add_argument("--source", choices=["shipped", "enumerate"], default="shipped")
    g.set_defaults(func=cmd_generate)

    a = sub.add_parser("analyze-width", help="effective width and pruneability stats")
    a.add_argument("domain", choices=["game24", "blocksworld", "logistics"])
    a.add_argument("--instances", help="game24 instance file (default: shipped set)")
    a.add_argument("--problems", nargs="*", default=[], help="PDDL problem files")
    a.add_argument("--limit", type=int, default=0)
    a.add_argument("--k-max", type=int, default=DEFAULT_K_MAX)
    a.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    a.add_argument("--jobs", type=int, default=1)
    a.add_argument("--out", required=True)
    a.set_defaults(func=cmd_analyze_width)

    s = sub.add_parser("solve", help="solve one instance with IW or the thought tree")
    s.add_argument("--engine", choices=["iw", "tot"], required=True)
    s.add_argument("--domain", choices=["blocksworld", "logistics", "game24"],
                   required=True)
    s.add_argument("--problem", help="PDDL problem file")
    s.add_argument("--instance", help="game24 instance, e.g. '4 9 10 13'")
    s.add_argument("--k", type=int, default=0, help="fixed IW bound (default: iterate)")
    s.add_argument("--k-max", type=int, default=DEFAULT_K_MAX)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--oracles", choices=["exact", "noisy", "llm"], default="exact")
    s.add_argument("--error-rate", type=float, default=0.1)
    s.add_argument("--traversal", choices=["dfs", "bfs"], default="dfs")
    s.add_argument("--mode", choices=["direct", "esa"], default="esa")
    s.add_argument("--pruning", choices=["on", "off"], default="off")
    s.add_argument("--max-depth", type=int, default=8)
    s.add_argument("--branch-factor", type=int, default=2)
    s.add_argument("--style", choices=["pddl", "natural_language"], default=None)
    s.add_argument("--thinking", action="store_true")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--config")
    s.add_argument("--out")
    s.set_defaults(func=cmd_solve)

    e = sub.add_parser("eval", help="run one sub-task evaluation")
    e.add_argument("subtask", choices=sorted(SUBTASK_NAMES))
    e.add_argument("--oracle", choices=["exact", "duplicate-baseline", "llm"],
                   default="exact")
    e.add_argument("--n", type=int, default=50)
    e.add_argument("--style", choices=["pddl", "natural_language"], default="pddl")
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--thinking", action="store_true")
    e.add_argument("--config")
    e.add_argument("--out", default="runs")
    e.set_defaults(func=cmd_eval)

    b = sub.add_parser("bench", help="run the Perf/ATU benchmark grid")
    b.add_argument("--domain", choices=["blocksworld"], default="blocksworld")
    b.add_argument("--instances", type=int, default=50)
    b.add_argument("--blocks", type=int, default=3)
    b.add_argument("--min-len", type=int, default=3)
    b.add_argument("--max-len", type=int, default=8)
    b.add_argument("--max-depth", type=int, default=8)
    b.add_argument("--branch-factor", type=int, default=2)
    b.add_argument("--oracles", choices=["exact", "noisy", "llm"], default="exact")
    b.add_argument("--error-rate", type=float, default=0.1)
    b.add_argument("--traversals", default="dfs,bfs")
    b.add_argument("--style", choices=["pddl", "natural_language"], default="pddl")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--config")
    b.add_argument("--out", default="runs")
    b.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except KeyboardInterrupt:
        return 130
    except OracleUnavailable as exc:
        print(f"oracle failure: {exc}", file=sys.stderr)
        return EXIT_TRANSPORT
    except Exception as exc:  # surface, don't traceback-bomb scripted callers
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
