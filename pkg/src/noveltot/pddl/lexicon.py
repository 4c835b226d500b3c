"""Invertible natural-language templates for atoms, actions and states.

A lexicon is pure data (one JSON file per domain): a template per predicate
and per action schema, plus optional display names for objects. Translation
is algorithmic in both directions; matching is exact after normalization
(lowercase, trim, collapse whitespace). No fuzzy matching.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from ..core import Atom, GroundAction, GroundProblem, State


class LexiconError(Exception):
    pass


class MissingTemplate(LexiconError):
    def __init__(self, kind: str, name: str):
        super().__init__(f"lexicon has no {kind} template for '{name}'")


class NoMatch(LexiconError):
    def __init__(self, text: str):
        super().__init__(f"no template matches: {text!r}")


class AmbiguousMatch(LexiconError):
    def __init__(self, text: str, candidates: list[str]):
        super().__init__(
            f"text matches multiple templates ({', '.join(candidates)}): {text!r}"
        )


_SLOT_RE = re.compile(r"\{(\d+)\}")


def normalize_text(text: str) -> str:
    return re.sub(r"\s+", " ", text.strip().lower())


@dataclass(frozen=True)
class Lexicon:
    """Per-domain surface templates. Slots are positional: ``{0}``, ``{1}``, ...

    Objects without a display name render as their own symbol. Action texts
    can only be parsed back when the lexicon is bound to a ground problem
    (see :meth:`bound_to`), since a surface form alone does not determine
    preconditions and effects.
    """

    domain: str
    objects: dict[str, str]
    predicates: dict[str, str]
    actions: dict[str, str]
    problem: GroundProblem | None = field(default=None, compare=False)
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    @classmethod
    def from_file(cls, path: str | Path) -> "Lexicon":
        with open(path, encoding="utf-8") as f:
            return cls.from_dict(json.load(f))

    @classmethod
    def from_dict(cls, data: dict) -> "Lexicon":
        lex = cls(
            domain=data["domain"],
            objects={k.lower(): normalize_text(v) for k, v in data.get("objects", {}).items()},
            predicates={k.lower(): normalize_text(v) for k, v in data["predicates"].items()},
            actions={k.lower(): normalize_text(v) for k, v in data.get("actions", {}).items()},
        )
        displays = list(lex.objects.values())
        if len(set(displays)) != len(displays):
            raise LexiconError("object display names must be distinct")
        return lex

    def bound_to(self, problem: GroundProblem) -> "Lexicon":
        """A copy bound to one ground problem, enabling action parsing."""
        return Lexicon(self.domain, self.objects, self.predicates, self.actions, problem)

    # -- rendering ----------------------------------------------------------

    def display(self, obj: str) -> str:
        return self.objects.get(obj, obj)

    def _fill(self, template: str, args: tuple[str, ...], name: str) -> str:
        slots = sorted(int(m) for m in _SLOT_RE.findall(template))
        if slots != list(range(len(args))):
            raise LexiconError(
                f"template for '{name}' must use slots 0..{len(args) - 1} exactly once"
            )
        out = template
        for i, arg in enumerate(args):
            out = out.replace("{%d}" % i, self.display(arg))
        return out

    def atom_text(self, a: Atom) -> str:
        if a.predicate not in self.predicates:
            raise MissingTemplate("predicate", a.predicate)
        return self._fill(self.predicates[a.predicate], a.args, a.predicate)

    def action_text(self, a: GroundAction) -> str:
        if a.name not in self.actions:
            raise MissingTemplate("action", a.name)
        return self._fill(self.actions[a.name], a.args, a.name)

    def state_text(self, s: State) -> str:
        sentences = [self.atom_text(a) for a in s]  # canonical order
        return ". ".join(sentences) + "." if sentences else ""

    # -- inverse matching ----------------------------------------------------

    def _object_universe(self) -> dict[str, str]:
        """display text -> object symbol, covering bound-problem objects."""
        if "universe" in self._cache:
            return self._cache["universe"]
        universe = {}
        names = [obj for obj, _ in self.problem.objects] if self.problem else list(self.objects)
        for obj in names:
            universe[self.display(obj)] = obj
        for obj, disp in self.objects.items():
            universe.setdefault(disp, obj)
        self._cache["universe"] = universe
        return universe

    def _patterns(self) -> list[tuple[str, str, re.Pattern]]:
        if "patterns" in self._cache:
            return self._cache["patterns"]
        universe = self._object_universe()
        alternation = "|".join(
            re.escape(d) for d in sorted(universe, key=len, reverse=True)
        )
        compiled = []
        for kind, templates in (("predicate", self.predicates), ("action", self.actions)):
            for name, template in templates.items():
                pattern = "^"
                last = 0
                for m in _SLOT_RE.finditer(template):
                    pattern += re.escape(template[last : m.start()])
                    pattern += f"(?P<a{m.group(1)}>{alternation})"
                    last = m.end()
                pattern += re.escape(template[last:]) + "$"
                compiled.append((kind, name, re.compile(pattern)))
        self._cache["patterns"] = compiled
        return compiled

    def parse_text(self, text: str) -> Atom | GroundAction:
        """Inverse of atom_text/action_text on their image."""
        normalized = normalize_text(text)
        universe = self._object_universe()
        hits = []
        for kind, name, pattern in self._patterns():
            m = pattern.match(normalized)
            if m:
                args = tuple(
                    universe[m.group(f"a{i}")] for i in range(len(m.groupdict()))
                )
                hits.append((kind, name, args))
        if not hits:
            raise NoMatch(text)
        if len(hits) > 1:
            raise AmbiguousMatch(text, [f"{k}:{n}" for k, n, _ in hits])
        kind, name, args = hits[0]
        if kind == "predicate":
            return Atom(name, args)
        if self.problem is None:
            raise LexiconError(
                f"cannot resolve action '{name}': lexicon is not bound to a problem"
            )
        action = self.problem.action_by_key(name, args)
        if action is None:
            raise NoMatch(text)
        return action

    def parse_state_text(self, text: str) -> State:
        """Inverse of state_text: period-separated sentences to a state."""
        atoms = []
        for sentence in text.split("."):
            sentence = sentence.strip()
            if not sentence:
                continue
            item = self.parse_text(sentence)
            if not isinstance(item, Atom):
                raise NoMatch(sentence)
            atoms.append(item)
        return State.of(atoms)


def to_natural_language(item, lex: Lexicon) -> str:
    """Render an Atom, GroundAction or State through the lexicon templates."""
    if isinstance(item, Atom):
        return lex.atom_text(item)
    if isinstance(item, GroundAction):
        return lex.action_text(item)
    if isinstance(item, State):
        return lex.state_text(item)
    raise TypeError(f"cannot render {type(item).__name__}")


def from_natural_language(text: str, lex: Lexicon) -> Atom | GroundAction:
    return lex.parse_text(text)
