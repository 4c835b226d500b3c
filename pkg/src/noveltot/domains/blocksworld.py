"""Seeded random Blocksworld instance generation.

Initial and goal configurations are random tower stackings; the goal keeps a
small consistent subset of the target on-relations so instances stay in the
low-width regime. Every emitted instance is checked solvable by the internal
optimal breadth-first search.
"""

from __future__ import annotations

import random
import string

from ..core import Atom, GroundProblem
from ..pddl import ProblemDef, ground
from ..util import seeded_rng
from .fixtures import GeneratorExhausted, load_domain

MAX_BLOCKS = 10
_RETRIES = 50

BLOCK_NAMES = string.ascii_lowercase[:MAX_BLOCKS]


def random_towers(blocks: list[str], rng: random.Random) -> list[list[str]]:
    """Random stacking: each tower is listed bottom to top."""
    towers: list[list[str]] = []
    order = list(blocks)
    rng.shuffle(order)
    for block in order:
        choice = rng.randint(0, len(towers))
        if choice == len(towers):
            towers.append([block])
        else:
            towers[choice].append(block)
    return towers


def towers_to_atoms(towers: list[list[str]]) -> list[Atom]:
    atoms = [Atom("handempty")]
    for tower in towers:
        atoms.append(Atom("ontable", (tower[0],)))
        for below, above in zip(tower, tower[1:]):
            atoms.append(Atom("on", (above, below)))
        atoms.append(Atom("clear", (tower[-1],)))
    return atoms


def blocksworld_problem(
    n_blocks: int, seed: int, max_goal_atoms: int = 2, attempt: int = 0
) -> ProblemDef:
    """One random instance; deterministic per (n_blocks, seed, max_goal_atoms).

    The goal is 1..max_goal_atoms on-relations sampled from a random target
    configuration, so it is always jointly achievable.
    """
    if not 1 <= n_blocks <= MAX_BLOCKS:
        raise ValueError(f"n_blocks must be in 1..{MAX_BLOCKS}")
    rng = seeded_rng("blocksworld", n_blocks, seed, attempt)
    blocks = list(BLOCK_NAMES[:n_blocks])
    init_atoms = towers_to_atoms(random_towers(blocks, rng))

    goal_atoms: list[Atom] = []
    for _ in range(_RETRIES):
        target = random_towers(blocks, rng)
        on_atoms = sorted(a for a in towers_to_atoms(target) if a.predicate == "on")
        if not on_atoms:
            continue
        k = rng.randint(1, min(max_goal_atoms, len(on_atoms)))
        goal_atoms = sorted(rng.sample(on_atoms, k))
        break
    if not goal_atoms:
        raise GeneratorExhausted(
            f"no stacked goal configuration drawn for n_blocks={n_blocks} seed={seed}"
        )

    suffix = f"-r{attempt}" if attempt else ""
    return ProblemDef(
        name=f"bw-{n_blocks}-{seed}{suffix}",
        domain="blocksworld",
        objects=tuple((b, "object") for b in blocks),
        init=tuple(sorted(init_atoms)),
        goal=frozenset(goal_atoms),
    )


def blocksworld_generate(
    n_blocks: int, seed: int, max_goal_atoms: int = 2, check_solvable: bool = True
) -> ProblemDef:
    """Generate a solvable instance, retrying (bounded) on unsolvable draws."""
    from ..iw.search import BudgetExceeded, optimal_plan_bfs

    regenerations = 0
    for attempt in range(_RETRIES):
        problem = blocksworld_problem(n_blocks, seed, max_goal_atoms, attempt)
        if not check_solvable:
            return problem
        try:
            plan = optimal_plan_bfs(ground_blocksworld(problem))
        except BudgetExceeded:
            plan = None
        if plan is not None:
            return problem
        regenerations += 1
    raise GeneratorExhausted(
        f"gave up after {regenerations} unsolvable draws (n_blocks={n_blocks}, seed={seed})"
    )


def ground_blocksworld(problem: ProblemDef) -> GroundProblem:
    return ground(load_domain("blocksworld"), problem)
