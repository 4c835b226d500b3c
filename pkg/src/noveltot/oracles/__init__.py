"""Sub-task oracles: exact simulator, seeded-noisy, duplicate baseline, LLM."""

from .base import (
    CONTINUE,
    GOAL,
    NO,
    UNPARSEABLE,
    YES,
    Completion,
    OracleReply,
    OracleSet,
    OracleUnavailable,
    TokenUsage,
    ZERO_USAGE,
    parse_yes_no,
)
from .baseline import DuplicateNoveltyOracle, duplicate_novelty_baseline
from .exact import (
    ExactActionOracle,
    ExactDirectOracle,
    ExactNoveltyOracle,
    ExactSuccessorOracle,
    ExactVerifierOracle,
    exact_oracles,
)
from .llm import AuthError, LLMClient, LLMParams, RateLimiter, llm_complete, llm_oracles
from .noisy import ErrorModel, noisy
from .prompts import (
    EMPTY_HISTORY,
    HISTORY_SEPARATOR,
    MissingSlot,
    PromptCatalog,
    PromptTemplate,
    history_to_text,
    load_catalog,
    render_prompt,
)

__all__ = [
    "AuthError",
    "CONTINUE",
    "Completion",
    "DuplicateNoveltyOracle",
    "EMPTY_HISTORY",
    "ErrorModel",
    "ExactActionOracle",
    "ExactDirectOracle",
    "ExactNoveltyOracle",
    "ExactSuccessorOracle",
    "ExactVerifierOracle",
    "GOAL",
    "HISTORY_SEPARATOR",
    "LLMClient",
    "LLMParams",
    "MissingSlot",
    "NO",
    "OracleReply",
    "OracleSet",
    "OracleUnavailable",
    "PromptCatalog",
    "PromptTemplate",
    "RateLimiter",
    "TokenUsage",
    "UNPARSEABLE",
    "YES",
    "ZERO_USAGE",
    "duplicate_novelty_baseline",
    "exact_oracles",
    "history_to_text",
    "llm_complete",
    "llm_oracles",
    "load_catalog",
    "noisy",
    "parse_yes_no",
    "render_prompt",
]
