"""Search-space adapters: one uniform surface over STRIPS and Game of 24.

A space exposes an initial state, deterministic successor enumeration in
canonical action order, a goal test, the boolean feature set used for novelty,
and text renderings. Width search, the thought-tree engine and the exact
oracles all run against this surface.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from fractions import Fraction

from .core import Atom, GroundAction, GroundProblem, State, applicable_actions, apply, is_goal
from .domains.game24 import (
    Game24Action,
    Game24State,
    game24_actions,
    game24_apply,
    game24_features,
    game24_goal,
)
from .pddl import Lexicon, NoMatch
from .pddl.textio import PDDL_STYLE, parse_action, parse_state, render_action, render_state


@dataclass(frozen=True)
class GroundSpace:
    """Adapter over a ground STRIPS problem."""

    problem: GroundProblem
    style: str = PDDL_STYLE
    lexicon: Lexicon | None = field(default=None, compare=False)

    @property
    def initial(self) -> State:
        return self.problem.initial

    def successors(self, s: State) -> list[tuple[GroundAction, State]]:
        return [(a, apply(a, s)) for a in applicable_actions(s, self.problem)]

    def apply(self, s: State, a: GroundAction) -> State:
        return apply(a, s)

    def is_goal(self, s: State) -> bool:
        return is_goal(s, self.problem.goal)

    def features(self, s: State) -> frozenset[Atom]:
        return s.atoms

    def render_state(self, s: State) -> str:
        return render_state(s, self.style, self.lexicon)

    def render_action(self, a: GroundAction) -> str:
        return render_action(a, self.style, self.lexicon)

    def parse_state(self, text: str) -> State:
        return parse_state(text, self.style, self.lexicon)

    def parse_action(self, text: str) -> GroundAction:
        return parse_action(text, self.style, self.problem, self.lexicon)

    def goal_text(self) -> str:
        atoms = sorted(self.problem.goal)
        if self.style == PDDL_STYLE:
            return " ".join(str(a) for a in atoms)
        return ". ".join(self.lexicon.atom_text(a) for a in atoms) + "." if atoms else ""


@dataclass(frozen=True)
class Game24Space:
    """Adapter over one Game of 24 instance."""

    initial: Game24State

    @classmethod
    def of(cls, values) -> "Game24Space":
        return cls(Game24State.of(values))

    def successors(self, s: Game24State) -> list[tuple[Game24Action, Game24State]]:
        return [(a, game24_apply(a, s)) for a in game24_actions(s)]

    def apply(self, s: Game24State, a: Game24Action) -> Game24State:
        return game24_apply(a, s)

    def is_goal(self, s: Game24State) -> bool:
        return game24_goal(s)

    def features(self, s: Game24State) -> frozenset[Atom]:
        return game24_features(s)

    def render_state(self, s: Game24State) -> str:
        return str(s)

    def render_action(self, a: Game24Action) -> str:
        return str(a)

    def parse_state(self, text: str) -> Game24State:
        body = text.strip().lower()
        if body.startswith("remaining:"):
            body = body[len("remaining:"):]
        try:
            values = [Fraction(p) for p in body.split()]
        except (ValueError, ZeroDivisionError) as exc:
            raise NoMatch(text) from exc
        if not values:
            raise NoMatch(text)
        return Game24State.of(values)

    def parse_action(self, text: str) -> Game24Action:
        parts = text.strip().lower().split("=")[0].split()
        if len(parts) != 3 or parts[1] not in ("+", "-", "*", "/"):
            raise NoMatch(text)
        try:
            return Game24Action(Fraction(parts[0]), Fraction(parts[2]), parts[1])
        except (ValueError, ZeroDivisionError) as exc:
            raise NoMatch(text) from exc

    def goal_text(self) -> str:
        return "reach exactly 24 as the single remaining number"
