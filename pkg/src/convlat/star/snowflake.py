"""The snowflake lattice as arithmetic on triples [a1, a2, a3].

[a1, a2, a3] is the union of the segments a_i^{-1} S_i; the triple must
satisfy a_i <= a_j + a_k. The order is reverse componentwise order.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Set, Tuple

from .extrational import INF, ExtRational, format_ext, parse_ext


class SnowflakeError(ValueError):
    pass


@dataclass(frozen=True, order=False)
class Snow:
    a: Tuple[ExtRational, ExtRational, ExtRational]

    def __post_init__(self):
        if len(self.a) != 3:
            raise SnowflakeError("a snowflake element has three components")
        for v in self.a:
            if v is not INF and not (isinstance(v, Fraction) and v >= 1):
                raise SnowflakeError(f"component {v!r} is not in [1, inf]")
        a1, a2, a3 = self.a
        if not (a1 <= a2 + a3 and a2 <= a1 + a3 and a3 <= a1 + a2):
            raise SnowflakeError(f"{self} violates the triangle conditions")

    def __str__(self) -> str:
        return "[" + ",".join(format_ext(v) for v in self.a) + "]"

    def leq(self, other: "Snow") -> bool:
        """Set inclusion: larger inverse lengths mean smaller sets."""
        return all(x >= y for x, y in zip(self.a, other.a))


def snow(*vals) -> Snow:
    if len(vals) == 1 and isinstance(vals[0], (list, tuple)):
        vals = tuple(vals[0])
    return Snow(tuple(parse_ext(v) if isinstance(v, str) else (INF if v is INF else Fraction(v)) for v in vals))


S1 = snow(1, INF, INF)
S2 = snow(INF, 1, INF)
S3 = snow(INF, INF, 1)
BOTTOM = snow(INF, INF, INF)


def _repair(a: List[ExtRational]) -> Tuple[ExtRational, ...]:
    i = max(range(3), key=lambda k: (a[k], -k))
    others = a[(i + 1) % 3] + a[(i + 2) % 3]
    if a[i] > others:
        a[i] = others
    return tuple(a)


def snow_meet(u: Snow, v: Snow) -> Snow:
    return Snow(tuple(max(x, y) for x, y in zip(u.a, v.a)))


def snow_join(u: Snow, v: Snow) -> Snow:
    return Snow(_repair([min(x, y) for x, y in zip(u.a, v.a)]))


_LITERAL_RE = re.compile(r"^\s*\[([^\]]*)\]\s*$")


def parse_snow(text: str) -> Snow:
    m = _LITERAL_RE.match(text)
    if not m:
        raise SnowflakeError(f"malformed snowflake literal {text!r}; expected [a1,a2,a3]")
    parts = [p.strip() for p in m.group(1).split(",")]
    if len(parts) != 3:
        raise SnowflakeError(f"snowflake literal {text!r} needs three components")
    return Snow(tuple(parse_ext(p) for p in parts))


def eval_snow_expr(text: str) -> Snow:
    """Evaluate ``[..] | [..] & [..]`` with & binding tighter than |."""
    tokens = re.findall(r"\[[^\]]*\]|[&|()]|\S", text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def term():
        nonlocal pos
        acc = factor()
        while peek() == "|":
            pos += 1
            acc = snow_join(acc, factor())
        return acc

    def factor():
        nonlocal pos
        acc = atom()
        while peek() == "&":
            pos += 1
            acc = snow_meet(acc, atom())
        return acc

    def atom():
        nonlocal pos
        tok = peek()
        if tok is None:
            raise SnowflakeError("unexpected end of expression")
        pos += 1
        if tok == "(":
            val = term()
            if peek() != ")":
                raise SnowflakeError("unbalanced parenthesis")
            pos += 1
            return val
        if tok.startswith("["):
            return parse_snow(tok)
        if tok in ("S1", "S2", "S3"):
            return {"S1": S1, "S2": S2, "S3": S3}[tok]
        raise SnowflakeError(f"unexpected token {tok!r}")

    # the tokenizer splits names into letters; re-join S1/S2/S3
    joined: List[str] = []
    for t in tokens:
        if joined and joined[-1] == "S" and t in ("1", "2", "3"):
            joined[-1] = "S" + t
        else:
            joined.append(t)
    tokens = joined
    val = term()
    if pos != len(tokens):
        raise SnowflakeError(f"unexpected token {tokens[pos]!r}")
    return val


@dataclass
class SnowGeneration:
    elements: List[Snow]
    components: List[int]
    truncated: bool
    bound: Optional[int]


def _max_finite(e: Snow) -> int:
    return max((int(v) for v in e.a if v is not INF), default=0)


def snow_sublattice(generators: Iterable[Snow], bound: Optional[int] = None, max_elements: int = 200000) -> SnowGeneration:
    """Close ``generators`` under meet and join.

    With ``bound`` set, elements having a finite component above it are
    dropped (and ``truncated`` is reported); the closure is then finite.
    """
    found: Set[Snow] = set()
    order: List[Snow] = []
    queue = deque()
    truncated = False
    for g in generators:
        if g not in found:
            found.add(g)
            order.append(g)
            queue.append(g)
    while queue:
        e = queue.popleft()
        for f in list(order):
            for r in (snow_meet(e, f), snow_join(e, f)):
                if r in found:
                    continue
                if bound is not None and _max_finite(r) > bound:
                    truncated = True
                    continue
                found.add(r)
                order.append(r)
                queue.append(r)
                if len(order) > max_elements:
                    raise SnowflakeError(f"generation exceeded {max_elements} elements")
    comps = sorted({int(v) for e in order for v in e.a if v is not INF and v.denominator == 1})
    return SnowGeneration(order, comps, truncated, bound)


def snow_generate(bound: int) -> SnowGeneration:
    """The sublattice generated by S1, S2, S3, truncated at ``bound``."""
    if bound < 1:
        raise SnowflakeError("bound must be >= 1")
    return snow_sublattice([S1, S2, S3], bound)


def descending_chain(steps: int) -> List[Snow]:
    """S1 > lam S1 > lam^2 S1 > ... with lam = 1/2, built from the pieces.

    Each level is obtained from the previous one by joining two of the
    scaled pieces and meeting with the third: (T2 | T3) & T1 = T1 / 2.
    """
    pieces = [S1, S2, S3]
    chain = [pieces[0]]
    for _ in range(steps - 1):
        pieces = [snow_meet(snow_join(pieces[(i + 1) % 3], pieces[(i + 2) % 3]), pieces[i]) for i in range(3)]
        chain.append(pieces[0])
    return chain


def all_snow_elements(values: Iterable[ExtRational]) -> List[Snow]:
    vals = [v if v is INF else Fraction(v) for v in values]
    out = []
    for a1 in vals:
        for a2 in vals:
            for a3 in vals:
                if a1 <= a2 + a3 and a2 <= a1 + a3 and a3 <= a1 + a2:
                    out.append(Snow((a1, a2, a3)))
    return out
