"""Parser and printer for a STRIPS + typing subset of PDDL.

Supported: positive conjunctive preconditions, add/delete effects, typed
objects and parameters with single-inheritance type trees. Everything else
(ADL, conditional effects, numeric fluents, ...) raises UnsupportedFeature.
PDDL is case-insensitive; all symbols are lowercased on read.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core import Atom


class PddlError(Exception):
    """Base class for PDDL parsing/grounding errors."""


class PddlSyntaxError(PddlError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.line = line
        self.col = col
        super().__init__(f"{message} (line {line}, col {col})")


class ArityError(PddlSyntaxError):
    """A predicate was used with the wrong number of arguments."""


class UnsupportedFeature(PddlError):
    def __init__(self, feature: str, line: int = 0, col: int = 0):
        self.feature = feature
        super().__init__(f"unsupported PDDL feature: {feature} (line {line}, col {col})")


SUPPORTED_REQUIREMENTS = {":strips", ":typing"}

# Construct heads that mark fragments outside the supported subset.
_UNSUPPORTED_HEADS = {
    "not",  # only allowed inside :effect
    "or",
    "imply",
    "exists",
    "forall",
    "when",
    "=",
    "increase",
    "decrease",
    "assign",
}


@dataclass(frozen=True)
class Token:
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == ";":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c.isspace():
            col += 1
            i += 1
            continue
        if c in "()":
            tokens.append(Token(c, line, col))
            col += 1
            i += 1
            continue
        start = i
        start_col = col
        while i < n and not text[i].isspace() and text[i] not in "();":
            i += 1
            col += 1
        tokens.append(Token(text[start:i].lower(), line, start_col))
    return tokens


def _parse_sexp(tokens: list[Token], pos: int):
    """Returns (node, next_pos); node is a Token or a list of nodes."""
    if pos >= len(tokens):
        last = tokens[-1] if tokens else Token("", 1, 1)
        raise PddlSyntaxError("unexpected end of input", last.line, last.col)
    tok = tokens[pos]
    if tok.text == "(":
        items = []
        pos += 1
        while True:
            if pos >= len(tokens):
                raise PddlSyntaxError("unbalanced parenthesis", tok.line, tok.col)
            if tokens[pos].text == ")":
                return items, pos + 1
            node, pos = _parse_sexp(tokens, pos)
            items.append(node)
    if tok.text == ")":
        raise PddlSyntaxError("unexpected ')'", tok.line, tok.col)
    return tok, pos + 1


def _read_single_sexp(text: str):
    tokens = _tokenize(text)
    if not tokens:
        raise PddlSyntaxError("empty input", 1, 1)
    node, pos = _parse_sexp(tokens, 0)
    if pos != len(tokens):
        extra = tokens[pos]
        raise PddlSyntaxError("trailing content after top-level form", extra.line, extra.col)
    if not isinstance(node, list):
        raise PddlSyntaxError("expected a parenthesized form", tokens[0].line, tokens[0].col)
    return node


def _head(node) -> str:
    if isinstance(node, list) and node and isinstance(node[0], Token):
        return node[0].text
    return ""


def _pos(node) -> tuple[int, int]:
    while isinstance(node, list):
        if not node:
            return 0, 0
        node = node[0]
    return node.line, node.col


@dataclass(frozen=True)
class ActionSchema:
    """A lifted STRIPS action. Atom args starting with '?' are variables."""

    name: str
    parameters: tuple[tuple[str, str], ...]  # (variable, type)
    preconditions: tuple[Atom, ...]
    add_effects: tuple[Atom, ...]
    del_effects: tuple[Atom, ...]


@dataclass(frozen=True)
class DomainDef:
    name: str
    requirements: tuple[str, ...]
    types: tuple[tuple[str, str], ...]  # (type, parent); "object" is the implicit root
    predicates: tuple[tuple[str, tuple[str, ...]], ...]  # name -> parameter types
    schemas: tuple[ActionSchema, ...]

    def predicate_arity(self) -> dict[str, int]:
        return {name: len(params) for name, params in self.predicates}

    def type_parents(self) -> dict[str, str]:
        return dict(self.types)

    def is_subtype(self, t: str, ancestor: str) -> bool:
        if ancestor == "object":
            return True
        parents = self.type_parents()
        while t != "object":
            if t == ancestor:
                return True
            t = parents.get(t, "object")
        return False


@dataclass(frozen=True)
class ProblemDef:
    name: str
    domain: str
    objects: tuple[tuple[str, str], ...]  # (object, type), sorted
    init: tuple[Atom, ...]  # canonical order
    goal: frozenset[Atom]


def _parse_typed_list(nodes, what: str) -> list[tuple[str, str]]:
    """Parse ``a b - t c d`` style lists; untyped entries default to object."""
    out: list[tuple[str, str]] = []
    pending: list[Token] = []
    i = 0
    while i < len(nodes):
        node = nodes[i]
        if not isinstance(node, Token):
            line, col = _pos(node)
            raise PddlSyntaxError(f"unexpected form in {what} list", line, col)
        if node.text == "-":
            if not pending:
                raise PddlSyntaxError(f"dangling '-' in {what} list", node.line, node.col)
            if i + 1 >= len(nodes) or not isinstance(nodes[i + 1], Token):
                raise PddlSyntaxError(f"missing type after '-' in {what} list", node.line, node.col)
            typ = nodes[i + 1].text
            out.extend((p.text, typ) for p in pending)
            pending = []
            i += 2
            continue
        pending.append(node)
        i += 1
    out.extend((p.text, "object") for p in pending)
    return out


def _parse_atom(node, declared: dict[str, int] | None, allow_vars: bool) -> Atom:
    if not isinstance(node, list) or not node:
        line, col = _pos(node)
        raise PddlSyntaxError("expected an atom", line, col)
    for part in node:
        if not isinstance(part, Token):
            line, col = _pos(part)
            raise PddlSyntaxError("nested form inside atom", line, col)
    name = node[0].text
    args = tuple(t.text for t in node[1:])
    if not allow_vars and any(a.startswith("?") for a in args):
        raise PddlSyntaxError(f"variable in ground atom ({name})", node[0].line, node[0].col)
    if declared is not None:
        if name not in declared:
            raise PddlSyntaxError(f"undeclared predicate '{name}'", node[0].line, node[0].col)
        if declared[name] != len(args):
            raise ArityError(
                f"predicate '{name}' expects {declared[name]} args, got {len(args)}",
                node[0].line,
                node[0].col,
            )
    return Atom(name, args)


def _parse_conjunction(node, declared, allow_vars, *, effects: bool):
    """Flatten (and ...) / single atom / () into (positive, negative) atom lists."""
    positive: list[Atom] = []
    negative: list[Atom] = []

    def handle(item):
        head = _head(item)
        if head == "not":
            if not effects:
                line, col = _pos(item)
                raise UnsupportedFeature("negative precondition", line, col)
            if len(item) != 2:
                line, col = _pos(item)
                raise PddlSyntaxError("(not ...) takes exactly one atom", line, col)
            negative.append(_parse_atom(item[1], declared, allow_vars))
            return
        if head in _UNSUPPORTED_HEADS:
            line, col = _pos(item)
            raise UnsupportedFeature(head, line, col)
        positive.append(_parse_atom(item, declared, allow_vars))

    if isinstance(node, list) and not node:
        return positive, negative
    if _head(node) == "and":
        for item in node[1:]:
            handle(item)
    else:
        handle(node)
    return positive, negative


def parse_domain(text: str) -> DomainDef:
    """Parse a PDDL domain in the supported fragment."""
    root = _read_single_sexp(text)
    if _head(root) != "define":
        line, col = _pos(root)
        raise PddlSyntaxError("expected (define (domain ...) ...)", line, col)

    name = None
    requirements: list[str] = []
    types: list[tuple[str, str]] = []
    predicates: list[tuple[str, tuple[str, ...]]] = []
    schemas: list[ActionSchema] = []

    for section in root[1:]:
        head = _head(section)
        line, col = _pos(section)
        if head == "domain":
            if len(section) != 2 or not isinstance(section[1], Token):
                raise PddlSyntaxError("malformed (domain name)", line, col)
            name = section[1].text
        elif head == ":requirements":
            for req in section[1:]:
                if req.text not in SUPPORTED_REQUIREMENTS:
                    raise UnsupportedFeature(req.text, req.line, req.col)
                requirements.append(req.text)
        elif head == ":types":
            types = _parse_typed_list(section[1:], ":types")
        elif head == ":predicates":
            for pred in section[1:]:
                if not isinstance(pred, list) or not pred or not isinstance(pred[0], Token):
                    raise PddlSyntaxError("malformed predicate declaration", line, col)
                pname = pred[0].text
                params = _parse_typed_list(pred[1:], "predicate parameter")
                for var, _ in params:
                    if not var.startswith("?"):
                        raise PddlSyntaxError(
                            f"predicate '{pname}' parameter '{var}' must start with '?'",
                            pred[0].line,
                            pred[0].col,
                        )
                predicates.append((pname, tuple(t for _, t in params)))
        elif head == ":action":
            schemas.append(_parse_action(section, dict((n, len(p)) for n, p in predicates)))
        elif head in {":constants", ":functions", ":axioms", ":derived"}:
            raise UnsupportedFeature(head, line, col)
        else:
            raise PddlSyntaxError(f"unknown domain section '{head}'", line, col)

    if name is None:
        raise PddlSyntaxError("domain has no name", 1, 1)

    # Parents mentioned in :types but never declared themselves are implicit.
    declared_types = {t for t, _ in types}
    for _, parent in list(types):
        if parent != "object" and parent not in declared_types:
            types.append((parent, "object"))
            declared_types.add(parent)

    domain = DomainDef(
        name=name,
        requirements=tuple(requirements),
        types=tuple(types),
        predicates=tuple(predicates),
        schemas=tuple(schemas),
    )
    _check_schema_variables(domain)
    return domain


def _parse_action(section, declared: dict[str, int]) -> ActionSchema:
    line, col = _pos(section)
    if len(section) < 2 or not isinstance(section[1], Token):
        raise PddlSyntaxError("(:action ...) missing name", line, col)
    name = section[1].text
    params: list[tuple[str, str]] = []
    precondition = None
    effect = None
    i = 2
    while i < len(section):
        key = section[i]
        if not isinstance(key, Token) or not key.text.startswith(":"):
            kline, kcol = _pos(key)
            raise PddlSyntaxError(f"expected a keyword in action '{name}'", kline, kcol)
        if i + 1 >= len(section):
            raise PddlSyntaxError(f"missing value for {key.text} in action '{name}'", key.line, key.col)
        value = section[i + 1]
        if key.text == ":parameters":
            if not isinstance(value, list):
                raise PddlSyntaxError(":parameters must be a list", key.line, key.col)
            params = _parse_typed_list(value, ":parameters")
            for var, _ in params:
                if not var.startswith("?"):
                    raise PddlSyntaxError(f"parameter '{var}' must start with '?'", key.line, key.col)
        elif key.text == ":precondition":
            precondition = value
        elif key.text == ":effect":
            effect = value
        else:
            raise UnsupportedFeature(key.text, key.line, key.col)
        i += 2

    pre_pos, pre_neg = ([], []) if precondition is None else _parse_conjunction(
        precondition, declared, allow_vars=True, effects=False
    )
    assert not pre_neg
    add, delete = ([], []) if effect is None else _parse_conjunction(
        effect, declared, allow_vars=True, effects=True
    )
    return ActionSchema(
        name=name,
        parameters=tuple(params),
        preconditions=tuple(pre_pos),
        add_effects=tuple(add),
        del_effects=tuple(delete),
    )


def _check_schema_variables(domain: DomainDef) -> None:
    for schema in domain.schemas:
        declared_vars = {v for v, _ in schema.parameters}
        for group in (schema.preconditions, schema.add_effects, schema.del_effects):
            for a in group:
                for arg in a.args:
                    if arg.startswith("?") and arg not in declared_vars:
                        raise PddlSyntaxError(
                            f"action '{schema.name}' uses undeclared variable '{arg}'"
                        )


def parse_problem(text: str) -> ProblemDef:
    """Parse a PDDL problem in the supported fragment.

    Arity consistency against the domain is enforced later by ``ground``;
    here only intra-file consistency is checkable.
    """
    root = _read_single_sexp(text)
    if _head(root) != "define":
        line, col = _pos(root)
        raise PddlSyntaxError("expected (define (problem ...) ...)", line, col)

    name = None
    domain = None
    objects: list[tuple[str, str]] = []
    init: list[Atom] = []
    goal: list[Atom] = []

    for section in root[1:]:
        head = _head(section)
        line, col = _pos(section)
        if head == "problem":
            if len(section) != 2 or not isinstance(section[1], Token):
                raise PddlSyntaxError("malformed (problem name)", line, col)
            name = section[1].text
        elif head == ":domain":
            if len(section) != 2 or not isinstance(section[1], Token):
                raise PddlSyntaxError("malformed (:domain name)", line, col)
            domain = section[1].text
        elif head == ":objects":
            objects = _parse_typed_list(section[1:], ":objects")
        elif head == ":init":
            for item in section[1:]:
                init.append(_parse_atom(item, None, allow_vars=False))
        elif head == ":goal":
            if len(section) != 2:
                raise PddlSyntaxError("(:goal ...) takes exactly one formula", line, col)
            pos_atoms, neg = _parse_conjunction(section[1], None, allow_vars=False, effects=False)
            assert not neg
            goal = pos_atoms
        elif head in {":metric", ":constraints"}:
            raise UnsupportedFeature(head, line, col)
        else:
            raise PddlSyntaxError(f"unknown problem section '{head}'", line, col)

    if name is None:
        raise PddlSyntaxError("problem has no name", 1, 1)
    if domain is None:
        raise PddlSyntaxError("problem declares no :domain", 1, 1)

    arities: dict[str, int] = {}
    for a in init + goal:
        if a.predicate in arities and arities[a.predicate] != len(a.args):
            raise ArityError(
                f"predicate '{a.predicate}' used with inconsistent arities "
                f"({arities[a.predicate]} and {len(a.args)})"
            )
        arities[a.predicate] = len(a.args)

    return ProblemDef(
        name=name,
        domain=domain,
        objects=tuple(sorted(objects)),
        init=tuple(sorted(set(init))),
        goal=frozenset(goal),
    )


# ---------------------------------------------------------------------------
# Printing (round-trip counterpart of the parsers)
# ---------------------------------------------------------------------------


def _format_typed_list(pairs) -> str:
    return " ".join(f"{name} - {typ}" for name, typ in pairs)


def _format_atom(a: Atom) -> str:
    return str(a)


def _format_conjunction(atoms, negated=()) -> str:
    parts = [_format_atom(a) for a in atoms]
    parts += [f"(not {_format_atom(a)})" for a in negated]
    if not parts:
        return "(and)"
    if len(parts) == 1 and not negated:
        return parts[0]
    return "(and " + " ".join(parts) + ")"


def print_domain(domain: DomainDef) -> str:
    lines = [f"(define (domain {domain.name})"]
    if domain.requirements:
        lines.append(f"  (:requirements {' '.join(domain.requirements)})")
    if domain.types:
        lines.append(f"  (:types {_format_typed_list(domain.types)})")
    preds = []
    for name, params in domain.predicates:
        args = " ".join(f"?x{i} - {t}" for i, t in enumerate(params))
        preds.append(f"({name}{' ' + args if args else ''})")
    lines.append(f"  (:predicates {' '.join(preds)})")
    for schema in domain.schemas:
        lines.append(f"  (:action {schema.name}")
        lines.append(f"    :parameters ({_format_typed_list(schema.parameters)})")
        lines.append(f"    :precondition {_format_conjunction(schema.preconditions)}")
        lines.append(f"    :effect {_format_conjunction(schema.add_effects, schema.del_effects)})")
    lines.append(")")
    return "\n".join(lines) + "\n"


def print_problem(problem: ProblemDef) -> str:
    lines = [
        f"(define (problem {problem.name})",
        f"  (:domain {problem.domain})",
        f"  (:objects {_format_typed_list(problem.objects)})",
        "  (:init",
    ]
    for a in problem.init:
        lines.append(f"    {_format_atom(a)}")
    lines.append("  )")
    lines.append(f"  (:goal {_format_conjunction(sorted(problem.goal))})")
    lines.append(")")
    return "\n".join(lines) + "\n"
