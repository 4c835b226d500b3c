"""Shared oracle-layer types: token usage, completions, replies, oracle sets.

Every sub-task oracle (action proposal, successor mapping, direct stepping,
goal verification, novelty judgement) answers with an OracleReply carrying
text, optional structured payloads and exact token accounting.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

YES = "yes"
NO = "no"
UNPARSEABLE = "unparseable"

GOAL = "goal"
CONTINUE = "continue"


class OracleUnavailable(Exception):
    """Transport-level oracle failure that survived the retry policy."""


@dataclass(frozen=True)
class TokenUsage:
    prompt_tokens: int = 0
    completion_tokens: int = 0
    reasoning_tokens: int = 0
    estimated: bool = False  # a component was estimated, not provider-reported

    def __post_init__(self):
        if min(self.prompt_tokens, self.completion_tokens, self.reasoning_tokens) < 0:
            raise ValueError("token counts must be non-negative")

    @property
    def total(self) -> int:
        return self.prompt_tokens + self.completion_tokens + self.reasoning_tokens

    def __add__(self, other: "TokenUsage") -> "TokenUsage":
        return TokenUsage(
            self.prompt_tokens + other.prompt_tokens,
            self.completion_tokens + other.completion_tokens,
            self.reasoning_tokens + other.reasoning_tokens,
            self.estimated or other.estimated,
        )

    def to_dict(self) -> dict:
        return {
            "prompt_tokens": self.prompt_tokens,
            "completion_tokens": self.completion_tokens,
            "reasoning_tokens": self.reasoning_tokens,
            "estimated": self.estimated,
        }


ZERO_USAGE = TokenUsage()


@dataclass(frozen=True)
class Completion:
    """One LLM round trip."""

    text: str
    usage: TokenUsage
    latency_ms: float = 0.0
    attempts: int = 1
    raw: dict = field(default_factory=dict, repr=False)


@dataclass(frozen=True)
class OracleReply:
    """Uniform oracle answer.

    ``text`` is the surface answer; ``structured``/``action`` carry exact
    payloads when the oracle is simulator-backed; ``verdict`` is set by
    verifier and novelty oracles; ``error`` marks a failed query. ``meta``
    carries transport details (attempt count, latency) for transcripts.
    """

    text: str = ""
    usage: TokenUsage = ZERO_USAGE
    structured: object | None = None
    action: object | None = None
    verdict: str | None = None
    error: str | None = None
    prompt: str | None = None
    system: str | None = None
    meta: dict = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return self.error is not None


@dataclass
class OracleSet:
    """The pluggable bundle the thought-tree engine runs against.

    Members are duck-typed:
      action.sample(node, i) / successor.map(node, action_reply)
      direct.sample(node, i) / verifier.check(node, task)
      novelty.judge(node, history_nodes)
    """

    name: str
    action: object | None = None
    successor: object | None = None
    direct: object | None = None
    verifier: object | None = None
    novelty: object | None = None
    space: object | None = None  # simulator adapter, when simulator-backed


_YES_NO_RE = re.compile(r"^(yes|no)[\s.!?,;:]*$")


def parse_yes_no(text: str) -> str:
    """Strict yes/no reader: bare answer plus optional trailing punctuation.

    Anything else (including 'yes, because ...') is UNPARSEABLE; callers
    decide whether that fails open or closed.
    """
    m = _YES_NO_RE.match(text.strip().lower())
    if not m:
        return UNPARSEABLE
    return m.group(1)
