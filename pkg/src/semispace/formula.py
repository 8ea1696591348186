"""Propositional infons in sum-of-products ("digital") notation.

Conjunction is juxtaposition (an explicit ``.`` is also accepted),
disjunction is ``+`` and negation is a postfix prime::

    xy + x'y'        (x and y) or (not x and not y)
    (x + y)'         not (x or y)
    a1a2' + a3       atoms may carry a numeric suffix

An atom is a single lowercase letter optionally followed by digits, so
``xy`` always reads as the conjunction of ``x`` and ``y``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Union

__all__ = [
    "Atom",
    "Not",
    "And",
    "Or",
    "Formula",
    "FormulaSyntaxError",
    "EmptyFormulaError",
    "UnboundAtomError",
    "parse",
    "render",
    "evaluate",
    "negate",
    "atoms",
    "literals",
    "is_literal",
    "is_nnf",
    "conjuncts",
    "conjoin",
    "disjoin",
]

ATOM_NAME = re.compile(r"[a-z][0-9]*\Z")


@dataclass(frozen=True)
class Atom:
    name: str

    def __post_init__(self):
        if not ATOM_NAME.match(self.name):
            raise ValueError(f"invalid atom name {self.name!r}")


@dataclass(frozen=True)
class Not:
    operand: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


Formula = Union[Atom, Not, And, Or]


class FormulaSyntaxError(SyntaxError):
    """Malformed notation.

    ``offset`` is the byte offset (UTF-8) into the input where parsing
    failed and ``expected`` describes what would have been accepted there.
    """

    def __init__(self, message: str, offset: int, expected: str):
        super().__init__(f"{message} at offset {offset} (expected {expected})")
        self.offset = offset
        self.expected = expected


class EmptyFormulaError(FormulaSyntaxError):
    def __init__(self):
        super().__init__("empty formula", 0, "atom or '('")


class UnboundAtomError(LookupError):
    def __init__(self, name: str):
        super().__init__(f"atom {name!r} has no truth value")
        self.name = name


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:([a-z][0-9]*)|([()'+.]))")
_PREC = {"+": 1, ".": 2}


def _tokenize(text: str):
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            yield ("end", None, pos)
            return
        m = _TOKEN.match(text, pos)
        if m is None:
            yield ("bad", text[pos], pos)
            return
        kind = "atom" if m.group(1) else m.group(2)
        yield (kind, m.group(1) or m.group(2), m.start(1) if m.group(1) else m.start(2))
        pos = m.end()


def parse(text: Union[str, bytes]) -> Formula:
    """Parse notation into a formula tree.

    Precedence, tightest first: postfix prime, conjunction, disjunction.
    Both binary operators associate to the left. The parser keeps its own
    stacks, so nesting depth is bounded only by memory.
    """
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise FormulaSyntaxError("invalid UTF-8", exc.start, "UTF-8 text") from None
    if not text.strip():
        raise EmptyFormulaError()

    def byte_offset(i: int) -> int:
        return len(text[:i].encode("utf-8"))

    operands: list = []
    operators: list = []  # ("(", offset) | ("+", None) | (".", None)

    def reduce_top():
        op, _ = operators.pop()
        right = operands.pop()
        left = operands.pop()
        operands.append(Or(left, right) if op == "+" else And(left, right))

    def push_binary(op):
        while operators and operators[-1][0] != "(" and _PREC[operators[-1][0]] >= _PREC[op]:
            reduce_top()
        operators.append((op, None))

    want_operand = True
    for kind, value, pos in _tokenize(text):
        if kind == "bad":
            expected = "atom or '('" if want_operand else "operator, prime, ')' or end of input"
            raise FormulaSyntaxError(f"unexpected character {value!r}", byte_offset(pos), expected)
        if not want_operand:
            if kind == "'":
                operands[-1] = Not(operands[-1])
                continue
            if kind in ("+", "."):
                push_binary(kind)
                want_operand = True
                continue
            if kind == ")":
                while operators and operators[-1][0] != "(":
                    reduce_top()
                if not operators:
                    raise FormulaSyntaxError("unbalanced ')'", byte_offset(pos), "operator, prime or end of input")
                operators.pop()
                continue
            if kind == "end":
                while operators:
                    if operators[-1][0] == "(":
                        raise FormulaSyntaxError("unclosed '('", byte_offset(pos), "')'")
                    reduce_top()
                return operands[0]
            # atom or "(" directly after an operand: implicit conjunction
            push_binary(".")
            want_operand = True
        if kind == "atom":
            operands.append(Atom(value))
            want_operand = False
        elif kind == "(":
            operators.append(("(", pos))
        else:
            what = "end of input" if kind == "end" else repr(value)
            raise FormulaSyntaxError(f"unexpected {what}", byte_offset(pos), "atom or '('")
    raise AssertionError("tokenizer always ends with an end token")  # pragma: no cover


# -- rendering ---------------------------------------------------------------

def _prec(f: Formula) -> int:
    if isinstance(f, Or):
        return 1
    if isinstance(f, And):
        return 2
    return 3


def render(f: Formula) -> str:
    """Render with the fewest parentheses that still parse back to ``f``."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Not):
        inner = render(f.operand)
        return inner + "'" if _prec(f.operand) == 3 else f"({inner})'"
    if isinstance(f, And):
        left = render(f.left)
        right = render(f.right)
        if _prec(f.left) < 2:
            left = f"({left})"
        if _prec(f.right) <= 2:
            right = f"({right})"
        return left + right
    if isinstance(f, Or):
        right = render(f.right)
        if _prec(f.right) == 1:
            right = f"({right})"
        return f"{render(f.left)} + {right}"
    raise TypeError(f"not a formula: {f!r}")


# -- semantics and transforms ------------------------------------------------

def evaluate(f: Formula, assignment: Mapping[str, bool]) -> bool:
    if isinstance(f, Atom):
        try:
            return bool(assignment[f.name])
        except KeyError:
            raise UnboundAtomError(f.name) from None
    if isinstance(f, Not):
        return not evaluate(f.operand, assignment)
    if isinstance(f, And):
        # evaluate both sides so unbound atoms are reported regardless of short-circuit
        left = evaluate(f.left, assignment)
        right = evaluate(f.right, assignment)
        return left and right
    if isinstance(f, Or):
        left = evaluate(f.left, assignment)
        right = evaluate(f.right, assignment)
        return left or right
    raise TypeError(f"not a formula: {f!r}")


def _nnf(f: Formula, negated: bool) -> Formula:
    if isinstance(f, Atom):
        return Not(f) if negated else f
    if isinstance(f, Not):
        return _nnf(f.operand, not negated)
    left = _nnf(f.left, negated)
    right = _nnf(f.right, negated)
    if isinstance(f, And):
        return Or(left, right) if negated else And(left, right)
    return And(left, right) if negated else Or(left, right)


def negate(f: Formula) -> Formula:
    """Contradictory of ``f`` in negation-normal form (De Morgan pushed to literals)."""
    return _nnf(f, True)


def atoms(f: Formula) -> list[str]:
    """Atom names in order of first appearance."""
    seen: dict[str, None] = {}
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            seen.setdefault(node.name)
        elif isinstance(node, Not):
            stack.append(node.operand)
        else:
            stack.append(node.right)
            stack.append(node.left)
    return list(seen)


def is_literal(f: Formula) -> bool:
    return isinstance(f, Atom) or (isinstance(f, Not) and isinstance(f.operand, Atom))


def is_nnf(f: Formula) -> bool:
    if isinstance(f, (And, Or)):
        return is_nnf(f.left) and is_nnf(f.right)
    return is_literal(f)


def literals(f: Formula) -> set[tuple[str, bool]]:
    """Distinct literals of a negation-normal-form formula as ``(atom, polarity)``."""
    if isinstance(f, Atom):
        return {(f.name, True)}
    if isinstance(f, Not):
        if not isinstance(f.operand, Atom):
            raise ValueError("formula is not in negation-normal form")
        return {(f.operand.name, False)}
    return literals(f.left) | literals(f.right)


def conjuncts(f: Formula) -> list[Formula]:
    """Flatten a tree of conjunctions into its conjuncts, left to right."""
    if isinstance(f, And):
        return conjuncts(f.left) + conjuncts(f.right)
    return [f]


def conjoin(parts) -> Formula:
    parts = list(parts)
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


def disjoin(parts) -> Formula:
    parts = list(parts)
    out = parts[0]
    for p in parts[1:]:
        out = Or(out, p)
    return out
