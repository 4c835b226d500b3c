"""Ground-truthed evaluation instances for the four sub-tasks.

Every instance embeds the full problem text, so its ground truth can be
recomputed from scratch by the simulator (and is, in the test suite). Query
payloads are stored structurally; rendering into pddl or natural-language
text happens at evaluation time.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass

from ..core import GroundProblem, Plan, State, applicable_actions, validate_plan
from ..domains import GeneratorExhausted, blocksworld_generate, load_domain, load_lexicon
from ..iw.search import effective_width, iw_search, optimal_plan_bfs
from ..pddl import ground, parse_problem, print_problem
from ..spaces import GroundSpace
from ..util import seeded_rng

KINDS = (
    "action_gen_all",
    "action_gen_single",
    "successor_joint",
    "successor_separate",
    "plan_verify",
    "novelty",
    "novelty_ndap",
)

_RETRIES = 200


@dataclass(frozen=True)
class EvalInstance:
    """One sub-task test case with recomputable ground truth."""

    id: str
    kind: str
    domain: str
    problem_pddl: str
    query: dict
    truth: dict

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "EvalInstance":
        return cls(**data)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "EvalInstance":
        return cls.from_dict(json.loads(text))


@dataclass
class InstanceContext:
    """Parsed problem plus rendering helpers, rebuilt from an instance."""

    problem: GroundProblem
    space_pddl: GroundSpace
    space_nl: GroundSpace

    def space(self, style: str) -> GroundSpace:
        return self.space_pddl if style == "pddl" else self.space_nl


def build_context(instance: EvalInstance) -> InstanceContext:
    domain = load_domain(instance.domain)
    problem = ground(domain, parse_problem(instance.problem_pddl))
    lex = load_lexicon(instance.domain).bound_to(problem)
    return InstanceContext(
        problem=problem,
        space_pddl=GroundSpace(problem, style="pddl"),
        space_nl=GroundSpace(problem, style="natural_language", lexicon=lex),
    )


def _atoms_list(atoms) -> list[str]:
    return [str(a) for a in sorted(atoms)]


def _action_key(a) -> str:
    return str(a)


def _state_from_strs(strs: list[str]) -> State:
    from ..pddl.textio import _parse_sexp_atoms

    atoms = []
    for s in strs:
        atoms.extend(_parse_sexp_atoms(s))
    return State.of(atoms)


def _action_from_str(problem: GroundProblem, s: str):
    from ..pddl.textio import parse_action

    return parse_action(s, "pddl", problem)


def _gen_problem(rng, index: int, seed: int, n_blocks_range=(3, 4)) -> tuple[str, GroundProblem]:
    n_blocks = rng.randrange(n_blocks_range[0], n_blocks_range[1] + 1)
    problem_def = blocksworld_generate(n_blocks, seed * 100003 + index)
    return print_problem(problem_def), ground(load_domain("blocksworld"), problem_def)


def gen_action_gen_instances(n: int, variant: str, seed: int) -> list[EvalInstance]:
    """Action-generation instances over the initial states of fresh problems.

    ``all``: truth is the complete applicable set. ``single``: truth is the
    applicable set plus the set of first actions of all optimal plans
    (computed from exhaustive shortest-path distances).
    """
    if variant not in ("all", "single"):
        raise ValueError("variant must be 'all' or 'single'")
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = seeded_rng("action_gen", variant, seed)
    out = []
    for i in range(n):
        for attempt in range(_RETRIES):
            pddl_text, gp = _gen_problem(rng, i * _RETRIES + attempt, seed)
            actions = applicable_actions(gp.initial, gp)
            if not actions:
                continue
            if variant == "all":
                out.append(
                    EvalInstance(
                        id=f"ag-all-{seed}-{i}",
                        kind="action_gen_all",
                        domain="blocksworld",
                        problem_pddl=pddl_text,
                        query={"state": _atoms_list(gp.initial.atoms)},
                        truth={"actions": sorted(_action_key(a) for a in actions)},
                    )
                )
                break
            optimal = optimal_plan_bfs(gp)
            if optimal is None or len(optimal) == 0:
                continue
            first_actions = _optimal_first_actions(gp, len(optimal))
            out.append(
                EvalInstance(
                    id=f"ag-single-{seed}-{i}",
                    kind="action_gen_single",
                    domain="blocksworld",
                    problem_pddl=pddl_text,
                    query={
                        "state": _atoms_list(gp.initial.atoms),
                        "goal": _atoms_list(gp.goal),
                    },
                    truth={
                        "valid": sorted(_action_key(a) for a in actions),
                        "optimal_first": sorted(first_actions),
                    },
                )
            )
            break
        else:
            raise GeneratorExhausted(f"action_gen {variant}: instance {i}")
    return out


def _optimal_first_actions(gp: GroundProblem, optimal_len: int) -> list[str]:
    """First steps of all optimal plans: actions whose successor lies one step
    closer to the goal (distance computed by the exhaustive oracle)."""
    from ..core import apply

    first = []
    for a in applicable_actions(gp.initial, gp):
        succ = apply(a, gp.initial)
        rest = optimal_plan_bfs(dataclasses.replace(gp, initial=succ))
        if rest is not None and len(rest) == optimal_len - 1:
            first.append(_action_key(a))
    return first


def gen_successor_instances(n: int, variant: str, seed: int) -> list[EvalInstance]:
    """Successor-mapping instances; truth is apply(a, s) per action.

    ``joint`` yields one instance per query state covering all its actions;
    ``separate`` yields one instance per (state, action) pair, so the
    instance count is the summed applicable-action count over n states.
    """
    if variant not in ("joint", "separate"):
        raise ValueError("variant must be 'joint' or 'separate'")
    if n < 1:
        raise ValueError("n must be >= 1")
    from ..core import apply

    rng = seeded_rng("successor", variant, seed)
    out = []
    for i in range(n):
        for attempt in range(_RETRIES):
            pddl_text, gp = _gen_problem(rng, i * _RETRIES + attempt, seed)
            actions = applicable_actions(gp.initial, gp)
            if not actions:
                continue
            successors = [apply(a, gp.initial) for a in actions]
            if variant == "joint":
                out.append(
                    EvalInstance(
                        id=f"succ-joint-{seed}-{i}",
                        kind="successor_joint",
                        domain="blocksworld",
                        problem_pddl=pddl_text,
                        query={
                            "state": _atoms_list(gp.initial.atoms),
                            "actions": [_action_key(a) for a in actions],
                        },
                        truth={"successors": [_atoms_list(s.atoms) for s in successors]},
                    )
                )
            else:
                for j, (a, s) in enumerate(zip(actions, successors)):
                    out.append(
                        EvalInstance(
                            id=f"succ-sep-{seed}-{i}-{j}",
                            kind="successor_separate",
                            domain="blocksworld",
                            problem_pddl=pddl_text,
                            query={
                                "state": _atoms_list(gp.initial.atoms),
                                "actions": [_action_key(a)],
                            },
                            truth={"successors": [_atoms_list(s.atoms)]},
                        )
                    )
            break
        else:
            raise GeneratorExhausted(f"successor {variant}: instance {i}")
    return out


def gen_plan_verify_instances(n: int, seed: int) -> list[EvalInstance]:
    """n/2 optimal plans and n/2 random sequences that provably fail.

    Invalid plans are random action sequences over the ground vocabulary
    (inadmissible steps allowed), rejection-sampled until replay does not
    end in a goal state; labels are balanced and shuffled by seed.
    """
    if n < 2 or n % 2:
        raise ValueError("n must be even and >= 2")
    rng = seeded_rng("plan_verify", seed)
    items = []
    for i in range(n // 2):
        for attempt in range(_RETRIES):
            pddl_text, gp = _gen_problem(rng, i * _RETRIES + attempt, seed)
            plan = optimal_plan_bfs(gp)
            if plan is None or len(plan) == 0:
                continue
            items.append((pddl_text, gp, plan, True))
            invalid = _random_invalid_plan(gp, len(plan), rng)
            items.append((pddl_text, gp, invalid, False))
            break
        else:
            raise GeneratorExhausted(f"plan_verify: pair {i}")
    rng.shuffle(items)
    out = []
    for i, (pddl_text, gp, plan, valid) in enumerate(items):
        out.append(
            EvalInstance(
                id=f"pv-{seed}-{i}",
                kind="plan_verify",
                domain="blocksworld",
                problem_pddl=pddl_text,
                query={
                    "state": _atoms_list(gp.initial.atoms),
                    "goal": _atoms_list(gp.goal),
                    "plan": [_action_key(a) for a in plan],
                },
                truth={"valid": valid},
            )
        )
    return out


def _random_invalid_plan(gp: GroundProblem, optimal_len: int, rng) -> Plan:
    for _ in range(_RETRIES):
        length = max(1, optimal_len + rng.randint(-1, 2))
        steps = tuple(gp.actions[rng.randrange(len(gp.actions))] for _ in range(length))
        candidate = Plan(steps)
        if not validate_plan(gp, candidate).valid:
            return candidate
    raise GeneratorExhausted("could not sample an invalid plan")


def gen_novelty_instances(n: int, ndap: bool, seed: int) -> list[EvalInstance]:
    """Novelty-judgement instances from partial IW runs.

    A full IW search determines the instance width; the partial run at that
    width is stopped at a seeded-uniform point of its generation sequence.
    The query is the successor generated at that point, the history is the
    kept states before it, and the truth is the exact novelty verdict.
    With ``ndap`` every query state is a non-duplicate whose pruning is due
    strictly to exceeding the instance width.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = seeded_rng("novelty", ndap, seed)
    out = []
    for i in range(n):
        for attempt in range(_RETRIES):
            pddl_text, gp = _gen_problem(rng, i * _RETRIES + attempt, seed)
            space = GroundSpace(gp)
            width = effective_width(space)
            if width is None or width == 0:
                continue
            trace: list = []
            iw_search(space, width, trace=trace)
            if ndap:
                candidates = [
                    idx for idx, e in enumerate(trace)
                    if e["verdict"] == "pruned" and not e["duplicate"]
                ]
            else:
                candidates = list(range(len(trace)))
            if not candidates:
                continue
            pick = candidates[rng.randrange(len(candidates))]
            event = trace[pick]
            kept_states = [gp.initial] + [
                e["state"] for e in trace[:pick] if e["verdict"] == "kept"
            ]
            history = kept_states[: event["kept_before"]]
            out.append(
                EvalInstance(
                    id=f"nov{'-ndap' if ndap else ''}-{seed}-{i}",
                    kind="novelty_ndap" if ndap else "novelty",
                    domain="blocksworld",
                    problem_pddl=pddl_text,
                    query={
                        "new_state": _atoms_list(event["state"].atoms),
                        "history": [_atoms_list(s.atoms) for s in history],
                        "width": width,
                    },
                    truth={
                        "keep": event["verdict"] == "kept",
                        "duplicate": event["duplicate"],
                    },
                )
            )
            break
        else:
            raise GeneratorExhausted(f"novelty ndap={ndap}: instance {i}")
    return out


def generate_instances(kind: str, n: int, seed: int) -> list[EvalInstance]:
    """Dispatcher used by the CLI: one sub-task kind, n instances."""
    if kind == "action_gen_all":
        return gen_action_gen_instances(n, "all", seed)
    if kind == "action_gen_single":
        return gen_action_gen_instances(n, "single", seed)
    if kind == "successor_joint":
        return gen_successor_instances(n, "joint", seed)
    if kind == "successor_separate":
        return gen_successor_instances(n, "separate", seed)
    if kind == "plan_verify":
        return gen_plan_verify_instances(n, seed)
    if kind == "novelty":
        return gen_novelty_instances(n, False, seed)
    if kind == "novelty_ndap":
        return gen_novelty_instances(n, True, seed)
    raise ValueError(f"unknown sub-task kind '{kind}'")


def recompute_truth(instance: EvalInstance) -> dict:
    """Re-derive the stored ground truth from the problem text alone."""
    from ..core import apply

    ctx = build_context(instance)
    gp = ctx.problem
    if instance.kind == "action_gen_all":
        return {"actions": sorted(_action_key(a) for a in applicable_actions(gp.initial, gp))}
    if instance.kind == "action_gen_single":
        actions = applicable_actions(gp.initial, gp)
        optimal = optimal_plan_bfs(gp)
        return {
            "valid": sorted(_action_key(a) for a in actions),
            "optimal_first": sorted(_optimal_first_actions(gp, len(optimal))),
        }
    if instance.kind in ("successor_joint", "successor_separate"):
        actions = [_action_from_str(gp, s) for s in instance.query["actions"]]
        return {
            "successors": [_atoms_list(apply(a, gp.initial).atoms) for a in actions]
        }
    if instance.kind == "plan_verify":
        steps = tuple(_action_from_str(gp, s) for s in instance.query["plan"])
        return {"valid": validate_plan(gp, Plan(steps)).valid}
    if instance.kind in ("novelty", "novelty_ndap"):
        from ..iw.novelty import ABOVE_K, NoveltyTable, novelty, register

        space = ctx.space_pddl
        table = NoveltyTable(instance.query["width"])
        history = [_state_from_strs(h) for h in instance.query["history"]]
        for h in history:
            register(space.features(h), table)
        new_state = _state_from_strs(instance.query["new_state"])
        keep = novelty(space.features(new_state), table) is not ABOVE_K
        duplicate = any(h == new_state for h in history)
        return {"keep": keep, "duplicate": duplicate}
    raise ValueError(f"unknown sub-task kind '{instance.kind}'")
