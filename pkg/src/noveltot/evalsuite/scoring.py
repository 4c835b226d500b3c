"""Rendering, respondents and scoring for the sub-task evaluations.

Scoring always goes through the text path: the respondent answers in the
selected prompting style, the scorer parses that text back and compares it
to the stored structured ground truth. Exact respondents therefore exercise
the same render/parse loop an LLM would.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field
from pathlib import Path

from ..core import Plan, applicable_actions, apply, validate_plan
from ..iw.novelty import ABOVE_K, NoveltyTable, novelty, register
from ..iw.search import optimal_plan_bfs
from ..oracles import (
    NO,
    YES,
    OracleReply,
    OracleUnavailable,
    duplicate_novelty_baseline,
    parse_yes_no,
)
from ..oracles.prompts import history_to_text
from ..pddl import NoMatch
from ..pddl.textio import parse_action, parse_state
from .instances import EvalInstance, InstanceContext, _state_from_strs, build_context

PDDL = "pddl"
NL = "natural_language"


@dataclass
class RenderedQuery:
    """What a respondent sees: style-rendered payload plus raw structure."""

    instance: EvalInstance
    ctx: InstanceContext
    style: str
    state_text: str
    goal_text: str
    actions_text: list[str]
    plan_text: list[str]
    new_state_text: str
    history_text: list[str]


def render_query(instance: EvalInstance, ctx: InstanceContext, style: str) -> RenderedQuery:
    space = ctx.space(style)
    gp = ctx.problem
    q = instance.query

    def state_of(strs):
        return space.render_state(_state_from_strs(strs))

    def action_of(s):
        return space.render_action(parse_action(s, PDDL, gp))

    return RenderedQuery(
        instance=instance,
        ctx=ctx,
        style=style,
        state_text=state_of(q["state"]) if "state" in q else "",
        goal_text=space.goal_text(),
        actions_text=[action_of(s) for s in q.get("actions", [])],
        plan_text=[action_of(s) for s in q.get("plan", [])],
        new_state_text=state_of(q["new_state"]) if "new_state" in q else "",
        history_text=[state_of(h) for h in q.get("history", [])],
    )


# ---------------------------------------------------------------------------
# Respondents
# ---------------------------------------------------------------------------


class ExactRespondent:
    """Answers every sub-task from the simulator, rendered in the query style."""

    def respond(self, query: RenderedQuery) -> OracleReply:
        inst = query.instance
        space = query.ctx.space(query.style)
        gp = query.ctx.problem
        kind = inst.kind
        if kind == "action_gen_all":
            lines = [space.render_action(a) for a in applicable_actions(gp.initial, gp)]
            return OracleReply(text="\n".join(lines))
        if kind == "action_gen_single":
            optimal = optimal_plan_bfs(gp)
            return OracleReply(text=space.render_action(optimal.steps[0]))
        if kind in ("successor_joint", "successor_separate"):
            actions = [parse_action(s, PDDL, gp) for s in inst.query["actions"]]
            lines = [space.render_state(apply(a, gp.initial)) for a in actions]
            return OracleReply(text="\n".join(lines))
        if kind == "plan_verify":
            steps = tuple(parse_action(s, PDDL, gp) for s in inst.query["plan"])
            verdict = validate_plan(gp, Plan(steps)).valid
            return OracleReply(text="yes" if verdict else "no")
        if kind in ("novelty", "novelty_ndap"):
            table = NoveltyTable(inst.query["width"])
            for h in inst.query["history"]:
                register(space.features(_state_from_strs(h)), table)
            value = novelty(space.features(_state_from_strs(inst.query["new_state"])), table)
            return OracleReply(text="yes" if value is not ABOVE_K else "no")
        raise ValueError(f"unknown kind {kind}")


class DuplicateBaselineRespondent:
    """Novelty sub-task respondent backed by pure duplicate detection."""

    def respond(self, query: RenderedQuery) -> OracleReply:
        if query.instance.kind not in ("novelty", "novelty_ndap"):
            raise ValueError("baseline respondent only answers novelty sub-tasks")
        verdict = duplicate_novelty_baseline(query.new_state_text, query.history_text)
        return OracleReply(text=verdict)


class LLMRespondent:
    """Queries a chat-completions endpoint with the catalog prompts."""

    ROLE_BY_KIND = {
        "action_gen_all": "action_gen",
        "action_gen_single": "action_gen_single",
        "successor_joint": "successor",
        "successor_separate": "successor",
        "plan_verify": "verify",
        "novelty": "novelty",
        "novelty_ndap": "novelty",
    }

    def __init__(self, client):
        self.client = client  # oracles.llm.LLMClient

    def respond(self, query: RenderedQuery) -> OracleReply:
        kind = query.instance.kind
        role = self.ROLE_BY_KIND[kind]
        bindings = {
            "state": query.state_text,
            "goal": query.goal_text,
            "action": "\n".join(query.actions_text),
            "new_state": query.new_state_text,
            "previous_states_str": history_to_text(query.history_text),
        }
        if kind == "plan_verify":
            bindings["state"] = (
                f"{query.state_text}\nPlan:\n" + "\n".join(query.plan_text)
            )
        return self.client.ask(role, bindings)


# ---------------------------------------------------------------------------
# Scoring
# ---------------------------------------------------------------------------


def _parse_action_set(text: str, query: RenderedQuery) -> tuple[set | None, str | None]:
    out = set()
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            action = parse_action(line, query.style, query.ctx.problem,
                                  query.ctx.space(query.style).lexicon)
        except (NoMatch, ValueError) as exc:
            return None, f"parse_error: {line!r}"
        out.add(str(action))
    return out, None


def score_response(query: RenderedQuery, text: str) -> dict:
    """Verdict dict: {passed, reason, extra} for one respondent answer."""
    inst = query.instance
    truth = inst.truth
    kind = inst.kind

    if kind == "action_gen_all":
        got, err = _parse_action_set(text, query)
        if got is None:
            return {"passed": False, "reason": err}
        want = set(truth["actions"])
        if got == want:
            return {"passed": True, "reason": None}
        return {"passed": False, "reason": "action_set_mismatch"}

    if kind == "action_gen_single":
        lines = [l for l in (s.strip() for s in text.splitlines()) if l]
        if len(lines) != 1:
            return {"passed": False, "reason": "expected_one_action",
                    "optimal_passed": False}
        try:
            action = parse_action(lines[0], query.style, query.ctx.problem,
                                  query.ctx.space(query.style).lexicon)
        except (NoMatch, ValueError):
            return {"passed": False, "reason": f"parse_error: {lines[0]!r}",
                    "optimal_passed": False}
        valid = str(action) in set(truth["valid"])
        optimal = str(action) in set(truth["optimal_first"])
        return {
            "passed": valid,
            "reason": None if valid else "invalid_action",
            "optimal_passed": optimal,
        }

    if kind in ("successor_joint", "successor_separate"):
        lines = [l for l in (s.strip() for s in text.splitlines()) if l]
        want = [set(s) for s in truth["successors"]]
        if len(lines) != len(want):
            return {"passed": False, "reason": "wrong_line_count"}
        for line, expected in zip(lines, want):
            try:
                got = parse_state(line, query.style, query.ctx.space(query.style).lexicon)
            except (NoMatch, ValueError):
                return {"passed": False, "reason": f"parse_error: {line!r}"}
            if {str(a) for a in got.atoms} != expected:
                return {"passed": False, "reason": "atom_mismatch"}
        return {"passed": True, "reason": None}

    if kind == "plan_verify":
        answer = parse_yes_no(text)
        if answer not in (YES, NO):
            return {"passed": False, "reason": "unparseable"}
        passed = (answer == YES) == truth["valid"]
        return {"passed": passed, "reason": None if passed else "wrong_verdict"}

    if kind in ("novelty", "novelty_ndap"):
        answer = parse_yes_no(text)
        if answer not in (YES, NO):
            return {"passed": False, "reason": "unparseable"}
        passed = (answer == YES) == truth["keep"]
        return {
            "passed": passed,
            "reason": None if passed else "wrong_verdict",
            "duplicate": truth["duplicate"],
        }

    raise ValueError(f"unknown kind {kind}")


@dataclass
class ScoreReport:
    """Aggregated sub-task results: x/N plus average token usage."""

    subtask: str
    style: str
    oracle: str
    passed: int
    total: int
    atu: float
    verdicts: list[dict] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def summary(self) -> str:
        return f"{self.passed}/{self.total}"

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "ScoreReport":
        return cls(**data)

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=2, sort_keys=True),
                              encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "ScoreReport":
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def run_subtask_eval(
    instances: list[EvalInstance],
    respondent,
    style: str = PDDL,
    oracle_name: str = "exact",
    transcript=None,
) -> ScoreReport:
    """Render, query, parse and score every instance; aggregate x/N and ATU."""
    if not instances:
        raise ValueError("no instances to evaluate")
    kinds = {i.kind for i in instances}
    if len(kinds) != 1:
        raise ValueError(f"mixed sub-task kinds in one eval: {kinds}")
    verdicts = []
    passed = 0
    total_tokens = 0
    optimal_passed = 0
    for inst in instances:
        ctx = build_context(inst)
        query = render_query(inst, ctx, style)
        try:
            reply = respondent.respond(query)
        except OracleUnavailable as exc:
            verdict = {"passed": False, "reason": "oracle_error"}
            reply = OracleReply(error=str(exc))
        else:
            verdict = score_response(query, reply.text)
        verdict["id"] = inst.id
        verdict["tokens"] = reply.usage.total
        total_tokens += reply.usage.total
        passed += bool(verdict["passed"])
        optimal_passed += bool(verdict.get("optimal_passed"))
        verdicts.append(verdict)
        if transcript is not None:
            transcript.record(
                "eval_query",
                instance=inst.id,
                subtask=inst.kind,
                style=style,
                response=reply.text,
                error=reply.error,
                usage=reply.usage.to_dict(),
                passed=verdict["passed"],
                reason=verdict.get("reason"),
            )
    report = ScoreReport(
        subtask=next(iter(kinds)),
        style=style,
        oracle=oracle_name,
        passed=passed,
        total=len(instances),
        atu=total_tokens / len(instances),
        verdicts=verdicts,
    )
    if next(iter(kinds)) == "action_gen_single":
        report.extra["optimal_passed"] = optimal_passed
    return report
