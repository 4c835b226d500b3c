"""Game of 24 as a planning domain over exact rational arithmetic.

A state is the multiset of remaining numbers plus its cardinality; an action
combines two of the numbers with one of + - * /. All values are
``fractions.Fraction`` in canonical reduced form, so equality (and therefore
duplicate detection and novelty) is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from ..core import Atom, PreconditionViolation

OPS = ("+", "-", "*", "/")

TARGET = Fraction(24)


@dataclass(frozen=True, order=True)
class Game24State:
    """Multiset of remaining numbers, kept as a sorted tuple of fractions."""

    remaining: tuple[Fraction, ...]

    @classmethod
    def of(cls, values) -> "Game24State":
        return cls(tuple(sorted(Fraction(v) for v in values)))

    @property
    def count(self) -> int:
        return len(self.remaining)

    def __str__(self) -> str:
        return "remaining: " + " ".join(_fmt(v) for v in self.remaining)


@dataclass(frozen=True, order=True)
class Game24Action:
    """Combine y1 and y2 (two occurrences drawn from the multiset) via op."""

    y1: Fraction
    y2: Fraction
    op: str

    def result(self) -> Fraction:
        if self.op == "+":
            return self.y1 + self.y2
        if self.op == "-":
            return self.y1 - self.y2
        if self.op == "*":
            return self.y1 * self.y2
        if self.op == "/":
            return self.y1 / self.y2
        raise ValueError(f"unknown operator {self.op!r}")

    def __str__(self) -> str:
        return f"{_fmt(self.y1)} {self.op} {_fmt(self.y2)} = {_fmt(self.result())}"


def _fmt(v: Fraction) -> str:
    return str(v)  # reduced form; integers print without denominator


def game24_actions(s: Game24State) -> list[Game24Action]:
    """All admissible actions in canonical order.

    Ordered value pairs are kept distinct even for commutative operators;
    actions that repeated values would duplicate are emitted once.
    """
    if s.count <= 1:
        return []
    actions = []
    support = sorted(set(s.remaining))
    for y1 in support:
        rest = list(s.remaining)
        rest.remove(y1)
        for y2 in sorted(set(rest)):
            for op in OPS:
                if op == "/" and y2 == 0:
                    continue
                actions.append(Game24Action(y1, y2, op))
    return sorted(actions, key=lambda a: (a.y1, a.y2, OPS.index(a.op)))


def game24_apply(a: Game24Action, s: Game24State) -> Game24State:
    """Replace one occurrence of y1 and one of y2 by the operation result."""
    rest = list(s.remaining)
    if s.count <= 1 or a.y1 not in rest:
        raise PreconditionViolation(a)
    rest.remove(a.y1)
    if a.y2 not in rest or (a.op == "/" and a.y2 == 0):
        raise PreconditionViolation(a)
    rest.remove(a.y2)
    rest.append(a.result())
    return Game24State(tuple(sorted(rest)))


def game24_goal(s: Game24State) -> bool:
    return s.remaining == (TARGET,)


def game24_features(s: Game24State) -> frozenset[Atom]:
    """Boolean featureization: one presence atom per distinct value, one count atom.

    Multiplicity collapses to presence so that features stay boolean; the goal
    is then exactly the two atoms {has(24), count(1)}.
    """
    atoms = {Atom("has", (_fmt(v),)) for v in set(s.remaining)}
    atoms.add(Atom("count", (str(s.count),)))
    return frozenset(atoms)


GOAL_FEATURES = frozenset({Atom("has", ("24",)), Atom("count", ("1",))})


# ---------------------------------------------------------------------------
# Exhaustive solving and the canonical instance list
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _solvable(remaining: tuple[Fraction, ...]) -> bool:
    if len(remaining) == 1:
        return remaining[0] == TARGET
    state = Game24State(remaining)
    return any(
        _solvable(game24_apply(a, state).remaining) for a in game24_actions(state)
    )


def game24_solvable(values) -> bool:
    """True iff some action sequence reaches exactly 24."""
    return _solvable(Game24State.of(values).remaining)


def game24_solve(values) -> list[Game24Action] | None:
    """One solving action sequence (canonical-order depth-first), or None."""
    state = Game24State.of(values)

    def dfs(s: Game24State) -> list[Game24Action] | None:
        if game24_goal(s):
            return []
        for a in game24_actions(s):
            succ = game24_apply(a, s)
            if _solvable(succ.remaining):
                tail = dfs(succ)
                if tail is not None:
                    return [a] + tail
        return None

    return dfs(state)


def enumerate_solvable_quads(max_value: int = 13) -> list[tuple[int, int, int, int]]:
    """All solvable multisets of four integers in 1..max_value, sorted."""
    out = []
    for quad in combinations_with_replacement(range(1, max_value + 1), 4):
        if game24_solvable(quad):
            out.append(quad)
    return out
