"""Built-in problem domains: Blocksworld, Logistics, Game of 24."""

from .blocksworld import blocksworld_generate, blocksworld_problem, ground_blocksworld
from .fixtures import (
    GeneratorExhausted,
    InstanceSpec,
    domain_text,
    game24_default_instances,
    load_domain,
    load_lexicon,
)
from .game24 import (
    Game24Action,
    Game24State,
    enumerate_solvable_quads,
    game24_actions,
    game24_apply,
    game24_features,
    game24_goal,
    game24_solvable,
    game24_solve,
)
from .logistics import LogisticsSizes, ground_logistics, logistics_generate, logistics_problem

__all__ = [
    "Game24Action",
    "Game24State",
    "GeneratorExhausted",
    "InstanceSpec",
    "LogisticsSizes",
    "blocksworld_generate",
    "blocksworld_problem",
    "domain_text",
    "enumerate_solvable_quads",
    "game24_actions",
    "game24_apply",
    "game24_default_instances",
    "game24_features",
    "game24_goal",
    "game24_solvable",
    "game24_solve",
    "ground_blocksworld",
    "ground_logistics",
    "load_domain",
    "load_lexicon",
    "logistics_generate",
    "logistics_problem",
]
