"""Rational numbers and points: parsing, formatting, integer scaling."""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Tuple

Point = Tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class RationalParseError(ValueError):
    """Malformed rational literal; ``position`` locates it in the input."""

    def __init__(self, message: str, position: str = ""):
        super().__init__(f"{position}: {message}" if position else message)
        self.position = position


def parse_rational(text, position: str = "") -> Fraction:
    """Parse ``"-3/4"``, ``"5"`` or an int; floats are rejected."""
    if isinstance(text, bool):
        raise RationalParseError(f"not a rational: {text!r}", position)
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if not isinstance(text, str):
        raise RationalParseError(f"expected a string like 'p/q', got {text!r}", position)
    m = _RATIONAL_RE.match(text)
    if not m:
        raise RationalParseError(f"malformed rational {text!r}", position)
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise RationalParseError(f"zero denominator in {text!r}", position)
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def point(*coords) -> Point:
    """Build a point from ints, Fractions or rational strings."""
    if len(coords) == 1 and isinstance(coords[0], (list, tuple)):
        coords = tuple(coords[0])
    return tuple(parse_rational(c) if isinstance(c, str) else Fraction(c) for c in coords)


def format_point(p: Sequence[Fraction]) -> list:
    return [format_rational(c) for c in p]


def parse_point(raw, dim: int | None = None, position: str = "") -> Point:
    if not isinstance(raw, (list, tuple)):
        raise RationalParseError(f"expected a coordinate list, got {raw!r}", position)
    p = tuple(parse_rational(c, f"{position}[{i}]") for i, c in enumerate(raw))
    if dim is not None and len(p) != dim:
        raise RationalParseError(f"point has {len(p)} coordinates, expected {dim}", position)
    return p


def add(p: Sequence[Fraction], q: Sequence[Fraction]) -> Point:
    return tuple(a + b for a, b in zip(p, q))


def sub(p: Sequence[Fraction], q: Sequence[Fraction]) -> Point:
    return tuple(a - b for a, b in zip(p, q))


def scale(t, p: Sequence[Fraction]) -> Point:
    return tuple(t * a for a in p)


def dot(p: Sequence, q: Sequence):
    return sum((a * b for a, b in zip(p, q)), Fraction(0))


def combination(coeffs: Iterable, points: Iterable[Sequence[Fraction]], dim: int) -> Point:
    acc = [Fraction(0)] * dim
    for c, p in zip(coeffs, points):
        for i in range(dim):
            acc[i] += c * p[i]
    return tuple(acc)


def lcm_of_denominators(values: Iterable[Fraction]) -> int:
    m = 1
    for v in values:
        d = v.denominator
        m = m * d // gcd(m, d)
    return m


def to_int_row(values: Sequence[Fraction]) -> list:
    """Scale a rational row by a positive factor so that it becomes integral."""
    m = lcm_of_denominators(values)
    return [int(v * m) for v in values]


def primitive(values: Sequence[int]) -> list:
    g = 0
    for v in values:
        g = gcd(g, v)
    if g > 1:
        return [v // g for v in values]
    return list(values)
