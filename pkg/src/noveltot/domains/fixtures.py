"""Shipped domain fixtures (PDDL files, lexicons, instance lists)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from ..pddl import DomainDef, Lexicon, parse_domain

PDDL_DOMAINS = ("blocksworld", "logistics")


class GeneratorExhausted(Exception):
    """An instance generator ran out of retries for its constraints."""


@dataclass(frozen=True)
class InstanceSpec:
    """What was asked of a generator; enough to regenerate the instance."""

    domain: str
    seed: int
    params: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"domain": self.domain, "seed": self.seed, "params": dict(self.params)}


def _data_text(name: str) -> str:
    return resources.files("noveltot.domains").joinpath("data", name).read_text("utf-8")


@lru_cache(maxsize=None)
def load_domain(name: str) -> DomainDef:
    if name not in PDDL_DOMAINS:
        raise KeyError(f"unknown PDDL domain fixture '{name}'")
    return parse_domain(_data_text(f"{name}.pddl"))


@lru_cache(maxsize=None)
def domain_text(name: str) -> str:
    if name not in PDDL_DOMAINS:
        raise KeyError(f"unknown PDDL domain fixture '{name}'")
    return _data_text(f"{name}.pddl")


@lru_cache(maxsize=None)
def load_lexicon(name: str) -> Lexicon:
    if name not in PDDL_DOMAINS:
        raise KeyError(f"no lexicon for domain '{name}'")
    return Lexicon.from_dict(json.loads(_data_text(f"{name}_lexicon.json")))


def game24_default_instances() -> list[tuple[int, int, int, int]]:
    """The shipped Game of 24 instance set (see data/game24_instances.txt)."""
    lines = _data_text("game24_instances.txt").splitlines()
    out = []
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = tuple(int(p) for p in line.split())
        if len(parts) != 4:
            raise ValueError(f"malformed instance line: {line!r}")
        out.append(parts)
    return out
