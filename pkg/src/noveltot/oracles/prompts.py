"""Versioned prompt catalogs and deterministic template rendering.

Catalogs are JSON data files so they can be swapped and audited without code
changes; prompt phrasing dominates LLM outcomes, so which catalog produced a
run is part of its config.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

ROLES = (
    "context",
    "action_gen",
    "action_gen_single",
    "successor",
    "direct_step",
    "verify",
    "novelty",
)

SLOTS = ("new_state", "previous_states_str", "state", "goal", "action", "domain_context")

HISTORY_SEPARATOR = "; "
EMPTY_HISTORY = "(none)"

_SLOT_RE = re.compile(r"\{(" + "|".join(SLOTS) + r")\}")


class MissingSlot(KeyError):
    def __init__(self, slot: str, template_id: str):
        super().__init__(f"binding for slot '{slot}' missing (template '{template_id}')")


@dataclass(frozen=True)
class PromptTemplate:
    id: str
    role: str
    body: str
    style: str = "natural_language"  # pddl | natural_language

    def __post_init__(self):
        if self.role not in ROLES:
            raise ValueError(f"unknown template role '{self.role}'")

    def slots(self) -> list[str]:
        return sorted({m.group(1) for m in _SLOT_RE.finditer(self.body)})


def render_prompt(template: PromptTemplate, bindings: dict) -> str:
    """Fill every slot; any declared slot left unbound is an error."""
    out = template.body
    for slot in template.slots():
        if slot not in bindings:
            raise MissingSlot(slot, template.id)
        out = out.replace("{%s}" % slot, str(bindings[slot]))
    return out


def history_to_text(history: list[str]) -> str:
    """Join previously visited states in generation order; '(none)' when empty."""
    return HISTORY_SEPARATOR.join(history) if history else EMPTY_HISTORY


@dataclass(frozen=True)
class PromptCatalog:
    name: str
    templates: tuple[PromptTemplate, ...]

    @classmethod
    def from_dict(cls, data: dict) -> "PromptCatalog":
        templates = tuple(
            PromptTemplate(
                id=t["id"],
                role=t["role"],
                body=t["body"],
                style=t.get("style", "natural_language"),
            )
            for t in data["templates"]
        )
        ids = [t.id for t in templates]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate template ids in catalog")
        return cls(name=data["catalog"], templates=templates)

    @classmethod
    def from_file(cls, path: str | Path) -> "PromptCatalog":
        with open(path, encoding="utf-8") as f:
            return cls.from_dict(json.load(f))

    def by_id(self, template_id: str) -> PromptTemplate:
        for t in self.templates:
            if t.id == template_id:
                return t
        raise KeyError(f"no template '{template_id}' in catalog '{self.name}'")

    def select(self, role: str, style: str | None = None) -> PromptTemplate:
        """The unique template for a role (and style, where styles differ)."""
        hits = [t for t in self.templates if t.role == role]
        if style is not None:
            styled = [t for t in hits if t.style == style]
            hits = styled or hits
        if not hits:
            raise KeyError(f"catalog '{self.name}' has no template for role '{role}'")
        return hits[0]

    def context_for(self, domain: str) -> PromptTemplate:
        for t in self.templates:
            if t.role == "context" and t.id == f"context-{domain}":
                return t
        raise KeyError(f"catalog '{self.name}' has no context template for '{domain}'")


def load_catalog(name: str = "base") -> PromptCatalog:
    """Load a shipped catalog ('base' or 'extended') by name."""
    text = resources.files("noveltot.oracles").joinpath("data", f"{name}.json").read_text("utf-8")
    return PromptCatalog.from_dict(json.loads(text))
