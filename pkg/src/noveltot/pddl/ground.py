"""Syntactic grounding of lifted domains into GroundProblem instances.

Schemas are instantiated over every type-consistent binding with pairwise
distinct objects (repeated-object bindings like stack(a, a) are skipped).
Unreachable actions are kept: grounding is purely syntactic.
"""

from __future__ import annotations

from itertools import product

from ..core import Atom, GroundAction, GroundProblem, State
from .parser import ActionSchema, ArityError, DomainDef, PddlError, ProblemDef


class TypeMismatch(PddlError):
    """Problem and domain disagree on names, types or vocabulary."""


def _substitute(a: Atom, binding: dict[str, str]) -> Atom:
    return Atom(a.predicate, tuple(binding.get(arg, arg) for arg in a.args))


def _ground_schema(schema: ActionSchema, candidates: list[list[str]]) -> list[GroundAction]:
    actions = []
    for combo in product(*candidates):
        if len(set(combo)) != len(combo):
            continue
        binding = {var: obj for (var, _), obj in zip(schema.parameters, combo)}
        actions.append(
            GroundAction(
                name=schema.name,
                args=tuple(combo),
                preconditions=frozenset(_substitute(p, binding) for p in schema.preconditions),
                add_effects=frozenset(_substitute(p, binding) for p in schema.add_effects),
                del_effects=frozenset(_substitute(p, binding) for p in schema.del_effects),
            )
        )
    return actions


def ground(domain: DomainDef, problem: ProblemDef) -> GroundProblem:
    """Instantiate every schema of ``domain`` over the objects of ``problem``."""
    if problem.domain != domain.name:
        raise TypeMismatch(
            f"problem '{problem.name}' is for domain '{problem.domain}', not '{domain.name}'"
        )

    declared_types = {"object"} | {t for t, _ in domain.types}
    for obj, typ in problem.objects:
        if typ not in declared_types:
            raise TypeMismatch(f"object '{obj}' has undeclared type '{typ}'")

    obj_type = dict(problem.objects)
    arities = domain.predicate_arity()
    pred_param_types = dict(domain.predicates)

    def check_ground_atom(a: Atom, where: str) -> None:
        if a.predicate not in arities:
            raise TypeMismatch(f"{where} uses undeclared predicate '{a.predicate}'")
        if arities[a.predicate] != len(a.args):
            raise ArityError(
                f"{where}: predicate '{a.predicate}' expects "
                f"{arities[a.predicate]} args, got {len(a.args)}"
            )
        for arg, want in zip(a.args, pred_param_types[a.predicate]):
            if arg not in obj_type:
                raise TypeMismatch(f"{where}: undeclared object '{arg}' in {a}")
            if not domain.is_subtype(obj_type[arg], want):
                raise TypeMismatch(
                    f"{where}: object '{arg}' of type '{obj_type[arg]}' "
                    f"does not fit '{want}' in {a}"
                )

    for a in problem.init:
        check_ground_atom(a, "init")
    for a in problem.goal:
        check_ground_atom(a, "goal")

    actions: list[GroundAction] = []
    for schema in domain.schemas:
        candidates = []
        for _, want in schema.parameters:
            if want not in declared_types:
                raise TypeMismatch(
                    f"action '{schema.name}' parameter type '{want}' is undeclared"
                )
            candidates.append(
                [obj for obj, typ in problem.objects if domain.is_subtype(typ, want)]
            )
        actions.extend(_ground_schema(schema, candidates))

    return GroundProblem(
        name=problem.name,
        objects=problem.objects,
        initial=State.of(problem.init),
        goal=problem.goal,
        actions=tuple(sorted(actions)),
    )
