"""Style-aware rendering and parsing of atoms, actions and states.

Two prompting styles are supported everywhere: ``pddl`` (s-expression
surface forms like ``(ontable b)``) and ``natural_language`` (lexicon
templates). Both directions are exact; parse failures raise ValueError
subclasses so callers can score them as wrong answers rather than crash.
"""

from __future__ import annotations

import re

from ..core import Atom, GroundAction, GroundProblem, State
from .lexicon import Lexicon, NoMatch

PDDL_STYLE = "pddl"
NL_STYLE = "natural_language"
STYLES = (PDDL_STYLE, NL_STYLE)

_SEXP_RE = re.compile(r"\(([^()]*)\)")


def render_atom(a: Atom, style: str, lex: Lexicon | None = None) -> str:
    if style == PDDL_STYLE:
        return str(a)
    return _require(lex).atom_text(a)


def render_action(a: GroundAction, style: str, lex: Lexicon | None = None) -> str:
    if style == PDDL_STYLE:
        return str(a)
    return _require(lex).action_text(a)


def render_state(s: State, style: str, lex: Lexicon | None = None) -> str:
    if style == PDDL_STYLE:
        return str(s)
    return _require(lex).state_text(s)


def parse_atom(text: str, style: str, lex: Lexicon | None = None) -> Atom:
    if style == PDDL_STYLE:
        atoms = _parse_sexp_atoms(text)
        if len(atoms) != 1:
            raise NoMatch(text)
        return atoms[0]
    item = _require(lex).parse_text(text)
    if not isinstance(item, Atom):
        raise NoMatch(text)
    return item


def parse_action(
    text: str, style: str, problem: GroundProblem, lex: Lexicon | None = None
) -> GroundAction:
    if style == PDDL_STYLE:
        atoms = _parse_sexp_atoms(text)
        if len(atoms) != 1:
            raise NoMatch(text)
        sig = atoms[0]
        action = problem.action_by_key(sig.predicate, sig.args)
        if action is None:
            raise NoMatch(text)
        return action
    item = _require(lex).bound_to(problem).parse_text(text)
    if not isinstance(item, GroundAction):
        raise NoMatch(text)
    return item


def parse_state(text: str, style: str, lex: Lexicon | None = None) -> State:
    if style == PDDL_STYLE:
        return State.of(_parse_sexp_atoms(text))
    return _require(lex).parse_state_text(text)


def _require(lex: Lexicon | None) -> Lexicon:
    if lex is None:
        raise ValueError("natural_language style requires a lexicon")
    return lex


def _parse_sexp_atoms(text: str) -> list[Atom]:
    """Parse whitespace-separated ground atoms like '(clear a) (ontable b)'."""
    stripped = text.strip()
    if not stripped:
        return []
    matches = list(_SEXP_RE.finditer(stripped))
    if not matches:
        raise NoMatch(text)
    covered = "".join(m.group(0) for m in matches)
    if re.sub(r"[\s]", "", stripped) != re.sub(r"[\s]", "", covered):
        raise NoMatch(text)  # stray tokens outside parentheses
    atoms = []
    for m in matches:
        parts = m.group(1).split()
        if not parts:
            raise NoMatch(text)
        atoms.append(Atom(parts[0].lower(), tuple(p.lower() for p in parts[1:])))
    return atoms
