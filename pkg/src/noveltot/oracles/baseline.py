"""Duplicate-detection novelty baseline.

Prunes exactly the states already present verbatim (after normalization) in
the kept history. It reproduces the dominant behavior behind LLM novelty
pruning, and by construction scores zero on non-duplicate pruning queries.
"""

from __future__ import annotations

from ..pddl import normalize_text
from .base import NO, YES, OracleReply


def duplicate_novelty_baseline(new_state_text: str, history: list[str]) -> str:
    """'no' (prune) iff the normalized text equals some history entry."""
    seen = {normalize_text(h) for h in history}
    return NO if normalize_text(new_state_text) in seen else YES


class DuplicateNoveltyOracle:
    """Engine-facing wrapper over duplicate_novelty_baseline."""

    def judge(self, node, history) -> OracleReply:
        verdict = duplicate_novelty_baseline(node.content, [h.content for h in history])
        return OracleReply(text=verdict, verdict=verdict)
