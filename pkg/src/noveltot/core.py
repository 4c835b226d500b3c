"""Classical STRIPS planning model: ground atoms, states, actions and plan semantics.

Everything here is immutable and deterministic. All orderings are canonical
(lexicographic), so searches and benchmarks built on top are bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class PlanningError(Exception):
    """Base class for errors raised by the planning model."""


class PreconditionViolation(PlanningError):
    """An action was applied in a state that does not satisfy its preconditions."""

    def __init__(self, action, missing: frozenset["Atom"] = frozenset()):
        self.action = action
        self.missing = missing
        detail = ""
        if missing:
            detail = "; missing: " + " ".join(str(a) for a in sorted(missing))
        super().__init__(f"action {action} is inadmissible{detail}")


@dataclass(frozen=True, order=True)
class Atom:
    """A ground boolean fact: a predicate applied to object symbols.

    Atoms order lexicographically by predicate then args, which is the
    canonical ordering used everywhere in this package.
    """

    predicate: str
    args: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.predicate:
            raise ValueError("atom predicate must be a non-empty symbol")
        if any(not a for a in self.args):
            raise ValueError(f"atom {self.predicate} has an empty argument symbol")

    def __str__(self) -> str:
        if self.args:
            return f"({self.predicate} {' '.join(self.args)})"
        return f"({self.predicate})"


def atom(predicate: str, *args: str) -> Atom:
    """Shorthand constructor: ``atom("on", "a", "b")``."""
    return Atom(predicate, tuple(args))


@dataclass(frozen=True)
class State:
    """A duplicate-free set of ground atoms; equality is set equality.

    Iteration yields atoms in canonical order.
    """

    atoms: frozenset[Atom]

    @classmethod
    def of(cls, atoms) -> "State":
        return cls(frozenset(atoms))

    def __iter__(self):
        return iter(sorted(self.atoms))

    def __len__(self) -> int:
        return len(self.atoms)

    def __contains__(self, a: Atom) -> bool:
        return a in self.atoms

    def satisfies(self, conditions: frozenset[Atom]) -> bool:
        return conditions <= self.atoms

    def __str__(self) -> str:
        return " ".join(str(a) for a in self)


@dataclass(frozen=True, order=True)
class GroundAction:
    """A fully instantiated STRIPS action.

    Add and delete effects must be disjoint; all atoms fully ground.
    Actions order canonically by name then args.
    """

    name: str
    args: tuple[str, ...]
    preconditions: frozenset[Atom] = field(compare=False)
    add_effects: frozenset[Atom] = field(compare=False)
    del_effects: frozenset[Atom] = field(compare=False)

    def __post_init__(self):
        overlap = self.add_effects & self.del_effects
        if overlap:
            raise ValueError(f"action {self.name}: add/del effects overlap: {overlap}")
        for group in (self.preconditions, self.add_effects, self.del_effects):
            for a in group:
                if any(arg.startswith("?") for arg in a.args):
                    raise ValueError(f"action {self.name}: atom {a} is not ground")

    def __str__(self) -> str:
        if self.args:
            return f"({self.name} {' '.join(self.args)})"
        return f"({self.name})"


@dataclass(frozen=True)
class GroundProblem:
    """A ground planning instance: objects, initial state, goal atoms, actions.

    ``actions`` is canonically ordered and duplicate-free; consumers rely on
    that order for deterministic tie-breaking.
    """

    name: str
    objects: tuple[tuple[str, str], ...]  # (object, type) pairs, sorted
    initial: State
    goal: frozenset[Atom]
    actions: tuple[GroundAction, ...]

    def __post_init__(self):
        keys = [(a.name, a.args) for a in self.actions]
        if len(set(keys)) != len(keys):
            raise ValueError("duplicate ground actions in problem")

    def action_by_key(self, name: str, args: tuple[str, ...]) -> GroundAction | None:
        for a in self.actions:
            if a.name == name and a.args == args:
                return a
        return None


@dataclass(frozen=True)
class Plan:
    """An ordered (possibly empty) sequence of ground actions."""

    steps: tuple[GroundAction, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __str__(self) -> str:
        return "\n".join(str(s) for s in self.steps)


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of validating a plan against a problem.

    ``failed_step`` is the index of the first inadmissible step, or
    ``len(plan)`` when every step applied but the goal was not reached.
    ``states`` is the induced state sequence up to the failure point.
    """

    valid: bool
    failed_step: int | None
    reason: str | None  # "inadmissible" | "goal_unreached"
    states: tuple[State, ...]


def applicable_actions(state: State, problem: GroundProblem) -> list[GroundAction]:
    """All problem actions whose preconditions hold in ``state``, canonical order."""
    return [a for a in problem.actions if a.preconditions <= state.atoms]


def apply(action: GroundAction, state: State) -> State:
    """Successor state: (atoms minus del effects) union add effects.

    Raises PreconditionViolation when the action is inadmissible; callers use
    this to classify invalid plans.
    """
    if not action.preconditions <= state.atoms:
        raise PreconditionViolation(action, action.preconditions - state.atoms)
    return State((state.atoms - action.del_effects) | action.add_effects)


def is_goal(state: State, goal: frozenset[Atom]) -> bool:
    """True iff every goal atom holds in ``state`` (empty goal is always met)."""
    return goal <= state.atoms


def validate_plan(problem: GroundProblem, plan: Plan) -> VerificationResult:
    """Replay a plan step by step; invalidity is a result, never an exception."""
    states = [problem.initial]
    current = problem.initial
    for i, step in enumerate(plan.steps):
        if not step.preconditions <= current.atoms:
            return VerificationResult(False, i, "inadmissible", tuple(states))
        current = apply(step, current)
        states.append(current)
    if is_goal(current, problem.goal):
        return VerificationResult(True, None, None, tuple(states))
    return VerificationResult(False, len(plan.steps), "goal_unreached", tuple(states))
