"""PDDL subset: parsing, printing, grounding and natural-language translation."""

from .ground import TypeMismatch, ground
from .lexicon import (
    AmbiguousMatch,
    Lexicon,
    LexiconError,
    MissingTemplate,
    NoMatch,
    from_natural_language,
    normalize_text,
    to_natural_language,
)
from .parser import (
    ActionSchema,
    ArityError,
    DomainDef,
    PddlError,
    PddlSyntaxError,
    ProblemDef,
    UnsupportedFeature,
    parse_domain,
    parse_problem,
    print_domain,
    print_problem,
)

__all__ = [
    "ActionSchema",
    "AmbiguousMatch",
    "ArityError",
    "DomainDef",
    "Lexicon",
    "LexiconError",
    "MissingTemplate",
    "NoMatch",
    "PddlError",
    "PddlSyntaxError",
    "ProblemDef",
    "TypeMismatch",
    "UnsupportedFeature",
    "from_natural_language",
    "ground",
    "normalize_text",
    "parse_domain",
    "parse_problem",
    "print_domain",
    "print_problem",
    "to_natural_language",
]
