"""Lattice terms, identities, and the text DSL.

Grammar (``&`` binds tighter than ``|``; both left-associative)::

    identity := term ("=" | "<=") term
    term     := factor { "|" factor }
    factor   := atom { "&" atom }
    atom     := IDENT | "(" term ")"
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple, Union


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Meet:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Join:
    left: "Term"
    right: "Term"


Term = Union[Var, Meet, Join]

HOLE = Var("HOLE")

_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


class TermSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"column {position + 1}: {message}")
        self.position = position


def var(name: str) -> Var:
    if not _IDENT_RE.fullmatch(name):
        raise ValueError(f"invalid variable name {name!r}")
    return Var(name)


def meet_of(terms: Sequence[Term]) -> Term:
    """Left-associated meet of a nonempty sequence."""
    if not terms:
        raise ValueError("meet of no terms")
    acc = terms[0]
    for t in terms[1:]:
        acc = Meet(acc, t)
    return acc


def join_of(terms: Sequence[Term]) -> Term:
    if not terms:
        raise ValueError("join of no terms")
    acc = terms[0]
    for t in terms[1:]:
        acc = Join(acc, t)
    return acc


def variables(t: Term) -> List[str]:
    """Variable names in first-occurrence (left-to-right) order."""
    seen: List[str] = []
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            if node.name not in seen:
                seen.append(node.name)
        else:
            stack.append(node.right)
            stack.append(node.left)
    return seen


def count_var(t: Term, name: str) -> int:
    if isinstance(t, Var):
        return int(t.name == name)
    return count_var(t.left, name) + count_var(t.right, name)


def substitute(t: Term, mapping) -> Term:
    if isinstance(t, Var):
        return mapping.get(t.name, t)
    return type(t)(substitute(t.left, mapping), substitute(t.right, mapping))


def dual_term(t: Term) -> Term:
    if isinstance(t, Var):
        return t
    cls = Join if isinstance(t, Meet) else Meet
    return cls(dual_term(t.left), dual_term(t.right))


def size(t: Term) -> int:
    if isinstance(t, Var):
        return 1
    return 1 + size(t.left) + size(t.right)


@dataclass(frozen=True)
class Identity:
    """``lhs = rhs`` or ``lhs <= rhs``.

    ``automatic`` records a direction that holds in every lattice
    (">=" when lhs >= rhs always, "<=" when lhs <= rhs always), or None.
    """

    lhs: Term
    rhs: Term
    mode: str = "="
    name: str = ""
    automatic: Optional[str] = None
    free_vars: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.mode not in ("=", "<="):
            raise ValueError(f"unknown identity mode {self.mode!r}")
        if self.automatic not in (None, "<=", ">="):
            raise ValueError(f"unknown automatic direction {self.automatic!r}")
        occurring = variables(self.lhs)
        for v in variables(self.rhs):
            if v not in occurring:
                occurring.append(v)
        if not self.free_vars:
            object.__setattr__(self, "free_vars", tuple(occurring))
        elif sorted(self.free_vars) != sorted(occurring):
            raise ValueError("free_vars must list exactly the variables of both sides")

    def __str__(self) -> str:
        return print_identity(self)


# --- printing ----------------------------------------------------------------


def print_term(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Join):
        right = print_term(t.right)
        if isinstance(t.right, Join):
            right = f"({right})"
        return f"{print_term(t.left)} | {right}"
    left = print_term(t.left)
    if isinstance(t.left, Join):
        left = f"({left})"
    right = print_term(t.right)
    if not isinstance(t.right, Var):
        right = f"({right})"
    return f"{left} & {right}"


def print_identity(identity: Identity) -> str:
    return f"{print_term(identity.lhs)} {identity.mode} {print_term(identity.rhs)}"


# --- parsing -------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<op><=|[&|()=]))")


def _tokenize(text: str) -> Iterator[Tuple[str, str, int]]:
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise TermSyntaxError(f"unexpected character {text[bad]!r}", bad)
        if m.group("ident") is not None:
            yield "ident", m.group("ident"), m.start("ident")
        else:
            yield m.group("op"), m.group("op"), m.start("op")
        pos = m.end()
    yield "end", "", len(text)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = list(_tokenize(text))
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            expected = "end of input" if kind == "end" else repr(kind)
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise TermSyntaxError(f"expected {expected}, found {found}", tok[2])
        self.i += 1
        return tok

    def term(self) -> Term:
        acc = self.factor()
        while self.peek()[0] == "|":
            self.i += 1
            acc = Join(acc, self.factor())
        return acc

    def factor(self) -> Term:
        acc = self.atom()
        while self.peek()[0] == "&":
            self.i += 1
            acc = Meet(acc, self.atom())
        return acc

    def atom(self) -> Term:
        kind, value, pos = self.peek()
        if kind == "ident":
            self.i += 1
            return Var(value)
        if kind == "(":
            self.i += 1
            inner = self.term()
            if self.peek()[0] != ")":
                raise TermSyntaxError(f"unbalanced parenthesis opened at column {pos + 1}", self.peek()[2])
            self.i += 1
            return inner
        if kind == ")":
            raise TermSyntaxError("unbalanced ')'", pos)
        found = "end of input" if kind == "end" else repr(value)
        raise TermSyntaxError(f"expected a variable or '(', found {found}", pos)


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    if p.peek()[0] == ")":
        raise TermSyntaxError("unbalanced ')'", p.peek()[2])
    p.take("end")
    return t


def parse_identity(text: str, name: str = "") -> Identity:
    p = _Parser(text)
    lhs = p.term()
    kind, _, pos = p.peek()
    if kind not in ("=", "<="):
        if kind == ")":
            raise TermSyntaxError("unbalanced ')'", pos)
        raise TermSyntaxError("expected '=' or '<='", pos)
    p.i += 1
    rhs = p.term()
    if p.peek()[0] == ")":
        raise TermSyntaxError("unbalanced ')'", p.peek()[2])
    p.take("end")
    return Identity(lhs, rhs, kind, name=name)
